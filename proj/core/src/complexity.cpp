// SPDX-License-Identifier: Apache-2.0
//
// ccmbf: reduced-rank constrained constant modulus adaptive beamforming
// Copyright (C) 2026 The ccmbf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ccmbf/complexity.hpp"

#include <stdexcept>

namespace ccmbf
{
    namespace
    {
        struct Row
        {
            ComplexityAlgorithm algorithm;
            std::string_view name;
        };

        constexpr std::array<Row, 9> kRows = {{
            {ComplexityAlgorithm::FullRankCmv, "Full-Rank-CMV"},
            {ComplexityAlgorithm::FullRankCcm, "Full-Rank-CCM"},
            {ComplexityAlgorithm::MswfCmv, "MSWF-CMV"},
            {ComplexityAlgorithm::MswfCcm, "MSWF-CCM"},
            {ComplexityAlgorithm::Avf, "AVF"},
            {ComplexityAlgorithm::JioCmv, "JIO-CMV"},
            {ComplexityAlgorithm::JioCmvGs, "JIO-CMV-GS"},
            {ComplexityAlgorithm::JioCcm, "JIO-CCM"},
            {ComplexityAlgorithm::JioCcmGs, "JIO-CCM-GS"},
        }};
    } // namespace

    std::string_view to_string(ComplexityAlgorithm algorithm)
    {
        for (const auto &row : kRows)
            if (row.algorithm == algorithm)
                return row.name;
        return "unknown";
    }

    std::optional<ComplexityAlgorithm> parse_complexity_algorithm(std::string_view name)
    {
        for (const auto &row : kRows)
            if (row.name == name)
                return row.algorithm;
        return std::nullopt;
    }

    ComplexityReport complexity_counts(ComplexityAlgorithm algorithm, std::int64_t m, std::int64_t r)
    {
        if (m < 1 || r < 1)
            throw std::invalid_argument("complexity_counts: m and r must be >= 1");

        const std::int64_t m2 = m * m;
        ComplexityReport out{algorithm, 0, 0};
        switch (algorithm)
        {
        case ComplexityAlgorithm::FullRankCmv:
            out.additions = 3 * m - 1;
            out.multiplications = 4 * m + 1;
            break;
        case ComplexityAlgorithm::FullRankCcm:
            out.additions = 3 * m;
            out.multiplications = 4 * m + 3;
            break;
        case ComplexityAlgorithm::MswfCmv:
            out.additions = r * m2 + r * m + m + 2 * r - 2;
            out.multiplications = r * m2 + m2 + 2 * r * m + 5 * r + 2;
            break;
        case ComplexityAlgorithm::MswfCcm:
            out.additions = r * m2 + r * m + m + 2 * r - 1;
            out.multiplications = r * m2 + m2 + 2 * r * m + 5 * r + 4;
            break;
        case ComplexityAlgorithm::Avf:
            out.additions = r * (4 * m2 + m - 2) + 5 * m2 - m - 1;
            out.multiplications = r * (5 * m2 + 3 * m) + 8 * m2 + 2 * m;
            break;
        case ComplexityAlgorithm::JioCmv:
            out.additions = 4 * r * m + m + 2 * r - 3;
            out.multiplications = 4 * r * m + m + 7 * r + 3;
            break;
        case ComplexityAlgorithm::JioCmvGs:
            out.additions = 7 * r * m - m - 1;
            out.multiplications = 7 * r * m - 2 * m + 8 * r + 2;
            break;
        case ComplexityAlgorithm::JioCcm:
            out.additions = 4 * r * m + m + 2 * r - 2;
            out.multiplications = 4 * r * m + m + 7 * r + 6;
            break;
        case ComplexityAlgorithm::JioCcmGs:
            out.additions = 7 * r * m - m;
            out.multiplications = 7 * r * m - 2 * m + 8 * r + 5;
            break;
        }
        return out;
    }

} // namespace ccmbf
