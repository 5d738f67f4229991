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

#include "ccmbf/gram_schmidt.hpp"

#include <cmath>

namespace ccmbf
{
    CMat gs_orthonormalize(const CMat &matrix, double tolerance)
    {
        const Eigen::Index cols = matrix.cols();
        double scale = 0.0;
        for (Eigen::Index l = 0; l < cols; ++l)
            scale = std::max(scale, matrix.col(l).norm());

        CMat q(matrix.rows(), cols);
        for (Eigen::Index l = 0; l < cols; ++l)
        {
            CVec v = matrix.col(l);
            for (Eigen::Index j = 0; j < l; ++j)
                v -= q.col(j) * q.col(j).dot(v);

            const double norm = v.norm();
            if (!(norm > tolerance * scale))
                throw RankDeficiencyError(static_cast<std::size_t>(l),
                                          "gs_orthonormalize: column " + std::to_string(l) +
                                              " is linearly dependent on the preceding columns");
            v /= norm;

            Eigen::Index pivot = 0;
            v.cwiseAbs().maxCoeff(&pivot);
            v *= std::conj(v(pivot)) / std::abs(v(pivot));
            v(pivot) = cx(v(pivot).real(), 0.0);

            q.col(l) = v;
        }
        return q;
    }

    JioStepResult jio_ccm_gs_iterate(const JioState &state, const CVec &snapshot)
    {
        const cx y = output(state, snapshot);

        JioState next = state;
        next.projection = gs_orthonormalize(sg_update_projection(state, snapshot, y));
        next.weight = sg_update_weight(next, project(next, snapshot), y);

        // GS moves a^H T_r, so the array-response constraint is restored explicitly.
        const cx c = next.projected_steering().dot(next.weight);
        if (c == cx(0.0) || !std::isfinite(std::abs(c)))
            throw DegenerateSubspaceError("jio_ccm_gs_iterate: constraint cannot be restored, abar^H wbar = 0");
        next.weight /= c;
        return {std::move(next), y};
    }

} // namespace ccmbf
