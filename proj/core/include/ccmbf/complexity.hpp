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

#ifndef CCMBF_COMPLEXITY_HPP
#define CCMBF_COMPLEXITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ccmbf
{
    enum class ComplexityAlgorithm
    {
        FullRankCmv,
        FullRankCcm,
        MswfCmv,
        MswfCcm,
        Avf,
        JioCmv,
        JioCmvGs,
        JioCcm,
        JioCcmGs,
    };

    inline constexpr std::array<ComplexityAlgorithm, 9> kAllComplexityAlgorithms = {
        ComplexityAlgorithm::FullRankCmv, ComplexityAlgorithm::FullRankCcm,
        ComplexityAlgorithm::MswfCmv,     ComplexityAlgorithm::MswfCcm,
        ComplexityAlgorithm::Avf,         ComplexityAlgorithm::JioCmv,
        ComplexityAlgorithm::JioCmvGs,    ComplexityAlgorithm::JioCcm,
        ComplexityAlgorithm::JioCcmGs,
    };

    struct ComplexityReport
    {
        ComplexityAlgorithm algorithm;
        std::int64_t additions = 0;
        std::int64_t multiplications = 0;
    };

    std::string_view to_string(ComplexityAlgorithm algorithm);
    std::optional<ComplexityAlgorithm> parse_complexity_algorithm(std::string_view name);

    // Additions and multiplications per snapshot for sensor count m and rank r.
    // Full-rank rows ignore r. Throws std::invalid_argument for m < 1 or r < 1.
    ComplexityReport complexity_counts(ComplexityAlgorithm algorithm, std::int64_t m, std::int64_t r);

} // namespace ccmbf

#endif
