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

#ifndef CCMBF_FULLRANK_HPP
#define CCMBF_FULLRANK_HPP

#include "ccmbf/array_model.hpp"

#include <span>

namespace ccmbf
{
    // Full-rank beamformer state, y = w^H x subject to w^H a = const.
    struct FullRankState
    {
        CVec weight;
        double step_size = 1e-3;
        CVec presumed_steering; // constraint vector a; any nonzero norm

        // Quiescent (matched-filter) start w = a / (a^H a), which satisfies w^H a = 1.
        static FullRankState quiescent(const CVec &presumed_steering, double step_size);

        cx output(const CVec &snapshot) const { return weight.dot(snapshot); }
        cx constraint_value() const { return weight.dot(presumed_steering); }
    };

    struct StepResult
    {
        FullRankState state;
        cx output; // pre-update output y = w^H x
    };

    // Sample estimate of R = E[2(|y|^2 - 1) x x^H] from prior outputs y(i).
    CMat cm_weighted_correlation(std::span<const CVec> snapshots, std::span<const cx> prior_outputs);

    // Default diagonal loading for a CM-weighted correlation estimate: factor * |trace| / dim.
    double default_loading(const CMat &correlation, double factor = 1e-3);

    // Closed-form CCM weight w = R^-1 a / (a^H R^-1 a), R sample-averaged and loaded.
    // Throws SingularMatrixError when (R + loading I) cannot be inverted.
    CVec ccm_closed_form(const SnapshotBatch &batch, const CVec &presumed_steering,
                         std::span<const cx> prior_outputs, double loading);

    // Solves (R + loading I) z = a and returns z / (a^H z). Shared by the closed-form routes.
    CVec constrained_solve(const CMat &correlation, const CVec &steering, double loading);

    // Constrained CM stochastic-gradient step:
    //   w <- w - mu e y* (I - a a^H / a^H a) x,  e = |y|^2 - 1
    StepResult ccm_sg_step(const FullRankState &state, const CVec &snapshot);

    // Frost-type constrained minimum-variance step:
    //   w <- P (w - mu y* x) + a / (a^H a)
    StepResult cmv_sg_step(const FullRankState &state, const CVec &snapshot);

} // namespace ccmbf

#endif
