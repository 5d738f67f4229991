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

#include "ccmbf/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace ccmbf
{
    SinrEvaluator::SinrEvaluator(const Scenario &scenario)
        : source_power_(scenario.source_power)
    {
        const ArrayGeometry &geometry = scenario.geometry;
        soi_steering_ = steering_vector(geometry, scenario.soi_doa_deg());

        const auto m = static_cast<Eigen::Index>(geometry.num_sensors);
        r_in_ = CMat::Identity(m, m) * scenario.noise_power;
        for (std::size_t k = 1; k < scenario.doas_deg.size(); ++k)
        {
            const CVec a = steering_vector(geometry, scenario.doas_deg[k]);
            r_in_.noalias() += scenario.source_power * (a * a.adjoint());
        }
    }

    double SinrEvaluator::operator()(const CVec &weight) const
    {
        if (weight.size() != soi_steering_.size())
            throw DomainError("output_sinr: weight length does not match the array");
        if (!weight.allFinite())
            throw DomainError("output_sinr: weight has non-finite entries");
        if (weight.squaredNorm() == 0.0)
            throw DomainError("output_sinr: zero weight vector");

        // SINR is scale invariant; normalising keeps a diverging weight from overflowing.
        const CVec w = weight / weight.cwiseAbs().maxCoeff();
        const double signal = source_power_ * std::norm(w.dot(soi_steering_));
        const double undesired = w.dot(r_in_ * w).real();
        if (signal == 0.0)
            return kSinrFloorDb;
        if (!(undesired > 0.0))
            throw DomainError("output_sinr: interference-plus-noise power is not positive");
        return std::max(kSinrFloorDb, 10.0 * std::log10(signal / undesired));
    }

    double output_sinr(const CVec &weight, const Scenario &scenario)
    {
        return SinrEvaluator(scenario)(weight);
    }

    double SinrCurve::tail_mean_db(std::size_t window) const
    {
        if (sinr_db.empty())
            return kSinrFloorDb;
        window = std::clamp<std::size_t>(window, 1, sinr_db.size());
        double sum = 0.0;
        for (std::size_t i = sinr_db.size() - window; i < sinr_db.size(); ++i)
            sum += sinr_db[i];
        return sum / static_cast<double>(window);
    }

    SinrCurve monte_carlo_sinr(const RunProcedure &runner, const Scenario &scenario, std::size_t num_runs,
                               std::uint64_t base_seed, std::size_t num_threads)
    {
        if (num_runs < 1)
            throw std::invalid_argument("monte_carlo_sinr: num_runs must be >= 1");
        scenario.validate();
        const SinrEvaluator evaluator(scenario);

        std::vector<std::vector<double>> trajectories(num_runs);
        std::vector<std::exception_ptr> failures(num_runs);
        std::atomic<std::size_t> next{0};

        auto worker = [&]() {
            for (std::size_t k = next++; k < num_runs; k = next++)
            {
                try
                {
                    const SnapshotBatch batch = generate_snapshots(scenario, run_seed(base_seed, k));
                    trajectories[k] = runner(scenario, batch, evaluator);
                    if (trajectories[k].size() != batch.size())
                        throw std::logic_error("runner returned a trajectory of the wrong length");
                }
                catch (...)
                {
                    failures[k] = std::current_exception();
                }
            }
        };

        if (num_threads == 0)
            num_threads = std::max(1u, std::thread::hardware_concurrency());
        num_threads = std::min(num_threads, num_runs);
        if (num_threads <= 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(num_threads);
            for (std::size_t t = 0; t < num_threads; ++t)
                pool.emplace_back(worker);
        }

        for (std::size_t k = 0; k < num_runs; ++k)
        {
            if (!failures[k])
                continue;
            try
            {
                std::rethrow_exception(failures[k]);
            }
            catch (const std::exception &ex)
            {
                throw NumericalError(k, "run " + std::to_string(k) + ": " + ex.what());
            }
        }

        SinrCurve curve;
        curve.num_runs = num_runs;
        const std::size_t n = scenario.num_snapshots;
        curve.sinr_db.assign(n, 0.0);
        curve.snapshot_index.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            curve.snapshot_index[i] = i + 1;
        for (const auto &trajectory : trajectories)
            for (std::size_t i = 0; i < n; ++i)
                curve.sinr_db[i] += trajectory[i];
        for (double &v : curve.sinr_db)
            v /= static_cast<double>(num_runs);
        return curve;
    }

    std::vector<double> moving_average(const std::vector<double> &values, std::size_t window)
    {
        window = std::max<std::size_t>(window, 1);
        std::vector<double> out(values.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            sum += values[i];
            if (i >= window)
                sum -= values[i - window];
            out[i] = sum / static_cast<double>(std::min(i + 1, window));
        }
        return out;
    }

} // namespace ccmbf
