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

#ifndef CCMBF_EXPERIMENT_HPP
#define CCMBF_EXPERIMENT_HPP

#include "ccmbf/complexity.hpp"
#include "ccmbf/jio.hpp"
#include "ccmbf/metrics.hpp"

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccmbf::harness
{
    enum class ExperimentKind
    {
        SinrVsSnapshots,
        SinrVsRank,
        MismatchCompare,
        ComplexityTable,
    };

    enum class Beamformer
    {
        FullRankCmv,
        FullRankCcm,
        JioCcm,
        JioCcmGs,
    };

    inline constexpr std::array<Beamformer, 4> kAllBeamformers = {
        Beamformer::FullRankCmv, Beamformer::FullRankCcm, Beamformer::JioCcm, Beamformer::JioCcmGs};

    std::string_view to_string(ExperimentKind kind);
    std::string_view to_string(Beamformer beamformer);
    std::optional<ExperimentKind> parse_experiment(std::string_view name);
    std::optional<Beamformer> parse_beamformer(std::string_view name);
    bool is_reduced_rank(Beamformer beamformer);

    // Invalid configuration; `field()` names the offending key.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string field, const std::string &what)
            : std::runtime_error(what), field_(std::move(field)) {}
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    struct StepSizes
    {
        JioSteps jio_ccm{0.002, 0.001};
        JioSteps jio_ccm_gs{0.003, 0.0007};
        double fullrank_ccm = 0.002; // full-rank steps: best of a 1-2-5 grid on the default scenario
        double fullrank_cmv = 0.00005;

        bool operator==(const StepSizes &) const = default;
    };

    struct ExperimentConfig
    {
        ExperimentKind experiment = ExperimentKind::SinrVsSnapshots;
        std::size_t m = 32;
        std::size_t q = 7;
        double snr_db = 10.0;
        double spacing_over_wavelength = 0.5;
        std::vector<double> doas_deg; // empty: default_doas(q)
        std::size_t rank_min = 5;
        std::size_t rank_max = 5;
        StepSizes steps;
        std::size_t num_snapshots = 500;
        std::size_t num_runs = 100;
        std::uint64_t seed = 1;
        double mismatch_deg = 0.0;
        std::vector<Beamformer> algorithms{kAllBeamformers.begin(), kAllBeamformers.end()};

        bool operator==(const ExperimentConfig &) const = default;

        // Desk-scale defaults for each experiment (K = 100 runs).
        static ExperimentConfig defaults(ExperimentKind kind);

        // Throws ConfigError naming the field.
        void validate() const;

        std::vector<double> resolved_doas() const;
        Scenario scenario(double presumed_offset_deg = 0.0) const;
    };

    inline constexpr std::size_t kFullScaleRuns = 1000;

    // Flat "key = value" text; '#' starts a comment. Unknown keys are a ConfigError.
    std::map<std::string, std::string> parse_key_values(std::string_view text);

    // Applies key/value overrides on top of `config`.
    void apply_key_values(ExperimentConfig &config, const std::map<std::string, std::string> &values);

    // Accepts "5" or "2..10".
    void apply_rank_spec(ExperimentConfig &config, std::string_view spec);
    std::vector<Beamformer> parse_beamformer_list(std::string_view list);

    ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base);
    std::string serialize_config(const ExperimentConfig &config);

    struct AlgorithmCurve
    {
        Beamformer algorithm;
        SinrCurve curve;
    };

    struct RankPoint
    {
        std::size_t rank;
        Beamformer algorithm;
        double sinr_db; // mean SINR at the last snapshot; NaN when a run diverged
        std::optional<std::size_t> failed_run; // lowest diverging run index, if any
        std::string failure;
    };

    struct MismatchResult
    {
        std::vector<AlgorithmCurve> ideal;
        std::vector<AlgorithmCurve> mismatched;
    };

    struct RunOptions
    {
        std::size_t threads = 0; // 0 = hardware concurrency
    };

    // Per-snapshot SINR trajectory of one beamformer over a batch.
    RunProcedure make_runner(Beamformer algorithm, const ExperimentConfig &config, std::size_t rank);

    std::vector<AlgorithmCurve> run_sinr_vs_snapshots(const ExperimentConfig &config,
                                                      const RunOptions &options = {});
    // A diverging (rank, algorithm) cell does not abort the sweep: it is recorded with
    // sinr_db = NaN and the failing run so the caller can report it.
    std::vector<RankPoint> run_sinr_vs_rank(const ExperimentConfig &config, const RunOptions &options = {});
    MismatchResult run_mismatch_compare(const ExperimentConfig &config, const RunOptions &options = {});
    std::vector<ComplexityReport> run_complexity_table(const ExperimentConfig &config);

    // CSV writers. Every file starts with '#' lines recording the resolved configuration.
    // Numbers use 6 significant digits.
    void write_config_header(std::ostream &os, const ExperimentConfig &config);
    void write_snapshots_csv(std::ostream &os, const ExperimentConfig &config,
                             const std::vector<AlgorithmCurve> &curves);
    void write_rank_csv(std::ostream &os, const ExperimentConfig &config, const std::vector<RankPoint> &points);
    void write_mismatch_csv(std::ostream &os, const ExperimentConfig &config, const MismatchResult &result);
    void write_complexity_csv(std::ostream &os, const ExperimentConfig &config,
                              const std::vector<ComplexityReport> &rows);
    void write_complexity_table(std::ostream &os, const std::vector<ComplexityReport> &rows);

    std::string format_number(double value);

} // namespace ccmbf::harness

#endif
