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

#include "ccmbf/experiment.hpp"

#include "ccmbf/fullrank.hpp"
#include "ccmbf/gram_schmidt.hpp"

#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace ccmbf::harness
{
    namespace
    {
        [[noreturn]] void diverged(std::string_view algorithm, std::size_t snapshot)
        {
            throw std::runtime_error(std::string(algorithm) + " weights became non-finite at snapshot " +
                                     std::to_string(snapshot + 1));
        }

        template <typename Step>
        std::vector<double> run_fullrank(const Scenario &scenario, const SnapshotBatch &batch,
                                         const SinrEvaluator &sinr, double step_size, Step step,
                                         std::string_view name)
        {
            // Raw presumed steering: the constraint then fixes the SOI output gain to 1, matching
            // the unit modulus target of the CM cost.
            const CVec a = steering_vector(scenario.geometry, scenario.presumed_soi_doa_deg());
            FullRankState state = FullRankState::quiescent(a, step_size);

            std::vector<double> trajectory;
            trajectory.reserve(batch.size());
            for (std::size_t i = 0; i < batch.size(); ++i)
            {
                state = step(state, batch.snapshots[i]).state;
                if (!state.weight.allFinite())
                    diverged(name, i);
                trajectory.push_back(sinr(state.weight));
            }
            return trajectory;
        }

        template <typename Iterate>
        std::vector<double> run_jio(const Scenario &scenario, const SnapshotBatch &batch,
                                    const SinrEvaluator &sinr, std::size_t rank, JioSteps steps,
                                    Iterate iterate, std::string_view name)
        {
            const CVec a = steering_vector(scenario.geometry, scenario.presumed_soi_doa_deg());
            JioState state = init_jio(scenario.geometry.num_sensors, rank, a, steps);

            std::vector<double> trajectory;
            trajectory.reserve(batch.size());
            for (std::size_t i = 0; i < batch.size(); ++i)
            {
                state = iterate(state, batch.snapshots[i]).state;
                const CVec w = effective_weight(state);
                if (!w.allFinite())
                    diverged(name, i);
                trajectory.push_back(sinr(w));
            }
            return trajectory;
        }

        std::vector<AlgorithmCurve> curves_for(const ExperimentConfig &config, const Scenario &scenario,
                                               const RunOptions &options)
        {
            std::vector<AlgorithmCurve> curves;
            for (Beamformer algorithm : config.algorithms)
                curves.push_back({algorithm, monte_carlo_sinr(make_runner(algorithm, config, config.rank_min),
                                                              scenario, config.num_runs, config.seed,
                                                              options.threads)});
            return curves;
        }
    } // namespace

    RunProcedure make_runner(Beamformer algorithm, const ExperimentConfig &config, std::size_t rank)
    {
        const StepSizes steps = config.steps;
        switch (algorithm)
        {
        case Beamformer::FullRankCmv:
            return [steps](const Scenario &s, const SnapshotBatch &b, const SinrEvaluator &e) {
                return run_fullrank(s, b, e, steps.fullrank_cmv, cmv_sg_step, "fullrank-cmv");
            };
        case Beamformer::FullRankCcm:
            return [steps](const Scenario &s, const SnapshotBatch &b, const SinrEvaluator &e) {
                return run_fullrank(s, b, e, steps.fullrank_ccm, ccm_sg_step, "fullrank-ccm");
            };
        case Beamformer::JioCcm:
            return [steps, rank](const Scenario &s, const SnapshotBatch &b, const SinrEvaluator &e) {
                return run_jio(s, b, e, rank, steps.jio_ccm, jio_ccm_iterate, "jio-ccm");
            };
        case Beamformer::JioCcmGs:
            return [steps, rank](const Scenario &s, const SnapshotBatch &b, const SinrEvaluator &e) {
                return run_jio(s, b, e, rank, steps.jio_ccm_gs, jio_ccm_gs_iterate, "jio-ccm-gs");
            };
        }
        throw std::invalid_argument("make_runner: unknown beamformer");
    }

    std::vector<AlgorithmCurve> run_sinr_vs_snapshots(const ExperimentConfig &config, const RunOptions &options)
    {
        config.validate();
        return curves_for(config, config.scenario(), options);
    }

    std::vector<RankPoint> run_sinr_vs_rank(const ExperimentConfig &config, const RunOptions &options)
    {
        config.validate();
        const Scenario scenario = config.scenario();

        auto evaluate = [&](Beamformer algorithm, std::size_t rank) -> RankPoint {
            try
            {
                const double value = monte_carlo_sinr(make_runner(algorithm, config, rank), scenario,
                                                      config.num_runs, config.seed, options.threads)
                                         .final_db();
                return {rank, algorithm, value, std::nullopt, {}};
            }
            catch (const NumericalError &e)
            {
                return {rank, algorithm, std::numeric_limits<double>::quiet_NaN(), e.run_index(), e.what()};
            }
        };

        // Full-rank baselines do not depend on r; evaluate them once.
        std::vector<std::optional<RankPoint>> fixed(config.algorithms.size());
        for (std::size_t k = 0; k < config.algorithms.size(); ++k)
            if (!is_reduced_rank(config.algorithms[k]))
                fixed[k] = evaluate(config.algorithms[k], config.rank_min);

        std::vector<RankPoint> points;
        for (std::size_t r = config.rank_min; r <= config.rank_max; ++r)
            for (std::size_t k = 0; k < config.algorithms.size(); ++k)
            {
                RankPoint point = fixed[k] ? *fixed[k] : evaluate(config.algorithms[k], r);
                point.rank = r;
                points.push_back(std::move(point));
            }
        return points;
    }

    MismatchResult run_mismatch_compare(const ExperimentConfig &config, const RunOptions &options)
    {
        config.validate();
        MismatchResult result;
        result.ideal = curves_for(config, config.scenario(0.0), options);
        result.mismatched = curves_for(config, config.scenario(config.mismatch_deg), options);
        return result;
    }

    std::vector<ComplexityReport> run_complexity_table(const ExperimentConfig &config)
    {
        config.validate();
        std::vector<ComplexityReport> rows;
        for (ComplexityAlgorithm algorithm : kAllComplexityAlgorithms)
            rows.push_back(complexity_counts(algorithm, static_cast<std::int64_t>(config.m),
                                         static_cast<std::int64_t>(config.rank_min)));
        return rows;
    }

    std::string format_number(double value)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", value);
        return buf;
    }

    void write_config_header(std::ostream &os, const ExperimentConfig &config)
    {
        os << "# ccmbf " << to_string(config.experiment) << '\n';
        std::istringstream lines(serialize_config(config));
        for (std::string line; std::getline(lines, line);)
            os << "# " << line << '\n';
    }

    void write_snapshots_csv(std::ostream &os, const ExperimentConfig &config, const std::vector<AlgorithmCurve> &curves)
    {
        write_config_header(os, config);
        os << "snapshot";
        for (const auto &c : curves)
            os << ',' << to_string(c.algorithm);
        os << '\n';
        const std::size_t n = curves.empty() ? 0 : curves.front().curve.sinr_db.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            os << i + 1;
            for (const auto &c : curves)
                os << ',' << format_number(c.curve.sinr_db[i]);
            os << '\n';
        }
    }

    void write_rank_csv(std::ostream &os, const ExperimentConfig &config, const std::vector<RankPoint> &points)
    {
        write_config_header(os, config);
        os << "rank,algorithm,sinr_db\n";
        for (const auto &p : points)
            os << p.rank << ',' << to_string(p.algorithm) << ',' << format_number(p.sinr_db) << '\n';
    }

    void write_mismatch_csv(std::ostream &os, const ExperimentConfig &config, const MismatchResult &result)
    {
        write_config_header(os, config);
        os << "snapshot";
        for (const auto &c : result.ideal)
            os << ',' << to_string(c.algorithm) << "_ideal";
        for (const auto &c : result.mismatched)
            os << ',' << to_string(c.algorithm) << "_mismatch";
        os << '\n';
        const std::size_t n = result.ideal.empty() ? 0 : result.ideal.front().curve.sinr_db.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            os << i + 1;
            for (const auto &c : result.ideal)
                os << ',' << format_number(c.curve.sinr_db[i]);
            for (const auto &c : result.mismatched)
                os << ',' << format_number(c.curve.sinr_db[i]);
            os << '\n';
        }
    }

    void write_complexity_csv(std::ostream &os, const ExperimentConfig &config,
                              const std::vector<ComplexityReport> &rows)
    {
        write_config_header(os, config);
        os << "algorithm,m,r,additions,multiplications\n";
        for (const auto &row : rows)
            os << to_string(row.algorithm) << ',' << config.m << ',' << config.rank_min << ',' << row.additions
               << ',' << row.multiplications << '\n';
    }

    void write_complexity_table(std::ostream &os, const std::vector<ComplexityReport> &rows)
    {
        os << std::left << std::setw(16) << "Algorithm" << std::right << std::setw(12) << "Additions"
           << std::setw(18) << "Multiplications" << '\n';
        for (const auto &row : rows)
            os << std::left << std::setw(16) << to_string(row.algorithm) << std::right << std::setw(12)
               << row.additions << std::setw(18) << row.multiplications << '\n';
    }

} // namespace ccmbf::harness
