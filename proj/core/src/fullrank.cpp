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

#include "ccmbf/fullrank.hpp"

#include <cmath>
#include <stdexcept>

namespace ccmbf
{
    namespace
    {
        // x - a (a^H x) / (a^H a)
        CVec remove_component(const CVec &x, const CVec &a)
        {
            return x - a * (a.dot(x) / a.squaredNorm());
        }

        void require_nonzero(const CVec &a, const char *who)
        {
            if (a.size() == 0 || a.squaredNorm() == 0.0)
                throw DomainError(std::string(who) + ": presumed steering vector is zero");
        }
    } // namespace

    FullRankState FullRankState::quiescent(const CVec &presumed_steering, double step_size)
    {
        require_nonzero(presumed_steering, "FullRankState::quiescent");
        return FullRankState{presumed_steering / presumed_steering.squaredNorm(), step_size, presumed_steering};
    }

    CMat cm_weighted_correlation(std::span<const CVec> snapshots, std::span<const cx> prior_outputs)
    {
        if (snapshots.empty())
            throw std::invalid_argument("cm_weighted_correlation: empty batch");
        if (snapshots.size() != prior_outputs.size())
            throw std::invalid_argument("cm_weighted_correlation: one prior output per snapshot required");

        const Eigen::Index m = snapshots.front().size();
        CMat R = CMat::Zero(m, m);
        for (std::size_t i = 0; i < snapshots.size(); ++i)
        {
            const double e = 2.0 * (std::norm(prior_outputs[i]) - 1.0);
            R.selfadjointView<Eigen::Lower>().rankUpdate(snapshots[i], e);
        }
        R = R.selfadjointView<Eigen::Lower>();
        return R / static_cast<double>(snapshots.size());
    }

    double default_loading(const CMat &correlation, double factor)
    {
        // The CM weights 2(|y|^2 - 1) can be negative, so the trace may be too.
        return factor * std::abs(correlation.trace().real()) / static_cast<double>(correlation.rows());
    }

    CVec constrained_solve(const CMat &correlation, const CVec &steering, double loading)
    {
        if (loading < 0.0)
            throw std::invalid_argument("constrained_solve: loading must be >= 0");
        if (correlation.rows() != steering.size() || correlation.cols() != steering.size())
            throw std::invalid_argument("constrained_solve: dimension mismatch");

        CMat loaded = correlation;
        loaded.diagonal().array() += loading;

        const Eigen::PartialPivLU<CMat> lu(loaded);
        const double rcond = lu.rcond();
        if (!(rcond > 1e-14))
            throw SingularMatrixError("correlation matrix is numerically singular (rcond = " +
                                      std::to_string(rcond) + "); increase the diagonal loading");

        const CVec z = lu.solve(steering);
        const cx denom = steering.dot(z);
        if (!std::isfinite(std::abs(denom)) || std::abs(denom) == 0.0 || !z.allFinite())
            throw SingularMatrixError("a^H R^-1 a vanished; increase the diagonal loading");
        return z / denom;
    }

    CVec ccm_closed_form(const SnapshotBatch &batch, const CVec &presumed_steering,
                         std::span<const cx> prior_outputs, double loading)
    {
        require_nonzero(presumed_steering, "ccm_closed_form");
        const CMat R = cm_weighted_correlation(batch.snapshots, prior_outputs);
        return constrained_solve(R, presumed_steering, loading);
    }

    StepResult ccm_sg_step(const FullRankState &state, const CVec &snapshot)
    {
        const cx y = state.output(snapshot);
        const double e = std::norm(y) - 1.0;

        FullRankState next = state;
        if (e != 0.0 && state.step_size != 0.0)
            next.weight -= (state.step_size * e * std::conj(y)) * remove_component(snapshot, state.presumed_steering);
        return {std::move(next), y};
    }

    StepResult cmv_sg_step(const FullRankState &state, const CVec &snapshot)
    {
        const cx y = state.output(snapshot);
        const CVec &a = state.presumed_steering;

        FullRankState next = state;
        const CVec v = state.weight - (state.step_size * std::conj(y)) * snapshot;
        next.weight = remove_component(v, a) + a / a.squaredNorm();
        return {std::move(next), y};
    }

} // namespace ccmbf
