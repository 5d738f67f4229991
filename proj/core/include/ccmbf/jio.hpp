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

#ifndef CCMBF_JIO_HPP
#define CCMBF_JIO_HPP

#include "ccmbf/array_model.hpp"

#include <span>
#include <vector>

namespace ccmbf
{
    struct JioSteps
    {
        double projection = 0.002; // step for T_r
        double weight = 0.001;     // step for the reduced-rank filter
        bool operator==(const JioSteps &) const = default;
    };

    // Joint iterative optimization state for the reduced-rank CCM beamformer
    //
    //   y(i) = wbar^H T_r^H x(i)
    //
    // subject to wbar^H T_r^H a = 1. `projection` is the m x r matrix T_r and `weight` the
    // r x 1 reduced-rank filter.
    struct JioState
    {
        CMat projection;
        CVec weight;
        CVec presumed_steering;
        JioSteps steps;

        std::size_t num_sensors() const { return static_cast<std::size_t>(projection.rows()); }
        std::size_t rank() const { return static_cast<std::size_t>(projection.cols()); }

        // abar = T_r^H a
        CVec projected_steering() const { return projection.adjoint() * presumed_steering; }

        // wbar^H T_r^H a; equals 1 on a valid state
        cx constraint_value() const { return weight.dot(projected_steering()); }
    };

    struct JioStepResult
    {
        JioState state;
        cx output;
    };

    // T_r(0) = [I_r 0]^T, wbar(0) = T_r^H(0) a / ||T_r^H(0) a||^2.
    // Throws DomainError unless 1 <= r < m, DegenerateSubspaceError if the first r entries of a vanish.
    JioState init_jio(std::size_t num_sensors, std::size_t rank, const CVec &presumed_steering,
                      JioSteps steps);

    // xbar = T_r^H x
    CVec project(const JioState &state, const CVec &snapshot);

    // y = wbar^H T_r^H x
    cx output(const JioState &state, const CVec &snapshot);

    // T_r <- T_r - mu_T e y* [x - a (a^H x) / (a^H a)] wbar^H, e = |y|^2 - 1.
    // For unit-norm a this is the textbook form x wbar^H - a wbar^H (a^H x); either way a^H T_r
    // is left unchanged.
    CMat sg_update_projection(const JioState &state, const CVec &snapshot, cx y);

    // wbar <- wbar - mu_w e y* [I - abar abar^H / (abar^H abar)] xbar, abar = T_r^H a.
    // Throws DegenerateSubspaceError if abar = 0.
    CVec sg_update_weight(const JioState &state, const CVec &projected_snapshot, cx y);

    // One JIO-CCM iteration: y from the current state, projection update, then the weight update
    // using xbar and abar recomputed from the new projection.
    JioStepResult jio_ccm_iterate(const JioState &state, const CVec &snapshot);

    // Fixed-point expression for T_r given wbar:
    //   T_r = R^-1 a wbar^H Rw^-1 / (wbar^H Rw^-1 wbar * a^H R^-1 a)
    // `loading` is added to both R and Rw. Throws SingularMatrixError.
    CMat closed_form_projection(const CMat &correlation, const CMat &weight_correlation,
                                const CVec &weight, const CVec &presumed_steering, double loading);

    // Fixed-point expression for wbar given T_r:
    //   wbar = Rbar^-1 abar / (abar^H Rbar^-1 abar)
    // Throws SingularMatrixError or DegenerateSubspaceError.
    CVec closed_form_weight(const CMat &reduced_correlation, const CVec &projected_steering,
                            double loading);

    // w_eff = T_r wbar; w_eff^H x == output(state, x)
    CVec effective_weight(const JioState &state);

    struct ClosedFormOptions
    {
        std::size_t alternations = 10;
        double loading_factor = 1e-3; // loading = factor * |trace| / dim for each correlation
    };

    // Alternates closed_form_projection and closed_form_weight on a stored batch. Each alternation
    // re-estimates R = avg 2(|y|^2-1) x x^H, Rw = wbar wbar^H and Rbar = avg 2(|y|^2-1) xbar xbar^H
    // using prior outputs of the previous state, starting from `initial`. Returns the state after
    // every alternation.
    std::vector<JioState> closed_form_alternation(const JioState &initial, const SnapshotBatch &batch,
                                                  const ClosedFormOptions &options = {});

} // namespace ccmbf

#endif
