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

#include "ccmbf/jio.hpp"

#include "ccmbf/fullrank.hpp"

#include <cmath>
#include <stdexcept>

namespace ccmbf
{
    namespace
    {
        CVec solve_loaded(const CMat &matrix, const CVec &rhs, double loading, const char *who)
        {
            if (loading < 0.0)
                throw std::invalid_argument(std::string(who) + ": loading must be >= 0");
            CMat loaded = matrix;
            loaded.diagonal().array() += loading;
            const Eigen::PartialPivLU<CMat> lu(loaded);
            if (!(lu.rcond() > 1e-14))
                throw SingularMatrixError(std::string(who) + ": matrix is numerically singular; increase the diagonal loading");
            CVec z = lu.solve(rhs);
            if (!z.allFinite())
                throw SingularMatrixError(std::string(who) + ": solve produced non-finite values");
            return z;
        }
    } // namespace

    JioState init_jio(std::size_t num_sensors, std::size_t rank, const CVec &presumed_steering, JioSteps steps)
    {
        if (rank < 1 || rank >= num_sensors)
            throw DomainError("init_jio: rank must satisfy 1 <= r < m (r = " + std::to_string(rank) +
                              ", m = " + std::to_string(num_sensors) + ")");
        if (static_cast<std::size_t>(presumed_steering.size()) != num_sensors)
            throw DomainError("init_jio: steering vector length does not match the sensor count");

        const auto m = static_cast<Eigen::Index>(num_sensors);
        const auto r = static_cast<Eigen::Index>(rank);

        JioState state;
        state.projection = CMat::Identity(m, r);
        state.presumed_steering = presumed_steering;
        state.steps = steps;

        const CVec abar = state.projected_steering();
        const double energy = abar.squaredNorm();
        if (energy == 0.0)
            throw DegenerateSubspaceError("init_jio: degenerate initialization, T_r(0)^H a = 0");
        state.weight = abar / energy;
        return state;
    }

    CVec project(const JioState &state, const CVec &snapshot)
    {
        return state.projection.adjoint() * snapshot;
    }

    cx output(const JioState &state, const CVec &snapshot)
    {
        return state.weight.dot(project(state, snapshot));
    }

    CMat sg_update_projection(const JioState &state, const CVec &snapshot, cx y)
    {
        const double e = std::norm(y) - 1.0;
        const CVec &a = state.presumed_steering;
        const cx gain = state.steps.projection * e * std::conj(y);
        if (gain == cx(0.0))
            return state.projection;

        const CVec blocked = snapshot - a * (a.dot(snapshot) / a.squaredNorm());
        return state.projection - gain * blocked * state.weight.adjoint();
    }

    CVec sg_update_weight(const JioState &state, const CVec &projected_snapshot, cx y)
    {
        const CVec abar = state.projected_steering();
        const double energy = abar.squaredNorm();
        if (energy == 0.0)
            throw DegenerateSubspaceError("sg_update_weight: projected steering vector is zero");

        const double e = std::norm(y) - 1.0;
        const cx gain = state.steps.weight * e * std::conj(y);
        if (gain == cx(0.0))
            return state.weight;

        const CVec blocked = projected_snapshot - abar * (abar.dot(projected_snapshot) / energy);
        return state.weight - gain * blocked;
    }

    JioStepResult jio_ccm_iterate(const JioState &state, const CVec &snapshot)
    {
        const cx y = output(state, snapshot);

        JioState next = state;
        next.projection = sg_update_projection(state, snapshot, y);
        next.weight = sg_update_weight(next, project(next, snapshot), y);
        return {std::move(next), y};
    }

    CMat closed_form_projection(const CMat &correlation, const CMat &weight_correlation, const CVec &weight,
                                const CVec &presumed_steering, double loading)
    {
        if (weight_correlation.rows() != weight.size())
            throw std::invalid_argument("closed_form_projection: weight correlation size mismatch");

        const CVec z = solve_loaded(correlation, presumed_steering, loading, "closed_form_projection");
        const CVec u = solve_loaded(weight_correlation, weight, loading, "closed_form_projection");

        const cx denom = weight.dot(u) * presumed_steering.dot(z);
        if (std::abs(denom) == 0.0 || !std::isfinite(std::abs(denom)))
            throw SingularMatrixError("closed_form_projection: normalization vanished");
        return (z * u.adjoint()) / denom;
    }

    CVec closed_form_weight(const CMat &reduced_correlation, const CVec &projected_steering, double loading)
    {
        if (projected_steering.squaredNorm() == 0.0)
            throw DegenerateSubspaceError("closed_form_weight: projected steering vector is zero");
        return constrained_solve(reduced_correlation, projected_steering, loading);
    }

    CVec effective_weight(const JioState &state)
    {
        return state.projection * state.weight;
    }

    std::vector<JioState> closed_form_alternation(const JioState &initial, const SnapshotBatch &batch,
                                                  const ClosedFormOptions &options)
    {
        if (batch.size() == 0)
            throw std::invalid_argument("closed_form_alternation: empty batch");

        std::vector<JioState> history;
        history.reserve(options.alternations);

        JioState state = initial;
        std::vector<cx> prior(batch.size());
        std::vector<CVec> reduced(batch.size());
        for (std::size_t it = 0; it < options.alternations; ++it)
        {
            for (std::size_t i = 0; i < batch.size(); ++i)
                prior[i] = output(state, batch.snapshots[i]);

            const CMat R = cm_weighted_correlation(batch.snapshots, prior);
            const CMat Rw = state.weight * state.weight.adjoint();
            const CMat T = closed_form_projection(R, Rw, state.weight, state.presumed_steering,
                                                  default_loading(R, options.loading_factor));

            for (std::size_t i = 0; i < batch.size(); ++i)
                reduced[i] = T.adjoint() * batch.snapshots[i];
            const CMat Rbar = cm_weighted_correlation(reduced, prior);

            state.projection = T;
            state.weight = closed_form_weight(Rbar, state.projected_steering(),
                                              default_loading(Rbar, options.loading_factor));
            history.push_back(state);
        }
        return history;
    }

} // namespace ccmbf
