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

#ifndef CCMBF_METRICS_HPP
#define CCMBF_METRICS_HPP

#include "ccmbf/array_model.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ccmbf
{
    inline constexpr double kSinrFloorDb = -100.0;

    // Evaluates SINR = P_s |w^H a(theta_0)|^2 / (w^H R_{i+n} w) against the TRUE scenario, with
    // R_{i+n} = sum_{k>=1} P_k a(theta_k) a(theta_k)^H + sigma_n^2 I built once from raw
    // steering vectors. Presumed-DOA errors never enter here.
    class SinrEvaluator
    {
    public:
        explicit SinrEvaluator(const Scenario &scenario);

        // SINR in dB, floored at kSinrFloorDb. Throws DomainError for a zero or non-finite weight.
        double operator()(const CVec &weight) const;

        const CMat &interference_plus_noise() const { return r_in_; }

    private:
        CVec soi_steering_;
        CMat r_in_;
        double source_power_;
    };

    double output_sinr(const CVec &weight, const Scenario &scenario);

    struct SinrCurve
    {
        std::vector<std::size_t> snapshot_index; // 1 ... N
        std::vector<double> sinr_db;             // mean over runs, in dB
        std::size_t num_runs = 0;

        double final_db() const { return sinr_db.back(); }
        // Mean of the last `window` points
        double tail_mean_db(std::size_t window) const;
    };

    // One Monte-Carlo realization: consume a batch, return the SINR in dB after every snapshot.
    using RunProcedure = std::function<std::vector<double>(const Scenario &, const SnapshotBatch &,
                                                           const SinrEvaluator &)>;

    // Averages per-snapshot SINR trajectories in dB across `num_runs` realizations. Run k draws its
    // batch from run_seed(base_seed, k). Runs may execute on `num_threads` workers (0 = hardware
    // concurrency); the reduction is ordered by run index so the curve is deterministic.
    // Per-run exceptions are rethrown as NumericalError tagged with the run index.
    SinrCurve monte_carlo_sinr(const RunProcedure &runner, const Scenario &scenario,
                               std::size_t num_runs, std::uint64_t base_seed,
                               std::size_t num_threads = 0);

    // Moving average with a trailing window (shorter at the start).
    std::vector<double> moving_average(const std::vector<double> &values, std::size_t window);

} // namespace ccmbf

#endif
