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

#ifndef CCMBF_GRAM_SCHMIDT_HPP
#define CCMBF_GRAM_SCHMIDT_HPP

#include "ccmbf/jio.hpp"

namespace ccmbf
{
    // Modified Gram-Schmidt with unit-norm output columns. Column l of the result lies in
    // span{t_1 ... t_l}; each column is rotated so its largest-magnitude entry is real positive.
    //
    // A column whose residual after orthogonalization falls below `tolerance` times the largest
    // input column norm raises RankDeficiencyError carrying its (0-based) index.
    CMat gs_orthonormalize(const CMat &matrix, double tolerance = 1e-8);

    // One JIO-CCM-GS iteration: projection update, Gram-Schmidt, weight update on the
    // orthonormalized subspace, then wbar <- wbar / (abar^H wbar) to restore wbar^H abar = 1.
    JioStepResult jio_ccm_gs_iterate(const JioState &state, const CVec &snapshot);

} // namespace ccmbf

#endif
