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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ccmbf::harness
{
    namespace
    {
        constexpr std::array<std::pair<ExperimentKind, std::string_view>, 4> kExperimentNames = {{
            {ExperimentKind::SinrVsSnapshots, "sinr-vs-snapshots"},
            {ExperimentKind::SinrVsRank, "sinr-vs-rank"},
            {ExperimentKind::MismatchCompare, "mismatch-compare"},
            {ExperimentKind::ComplexityTable, "complexity-table"},
        }};

        constexpr std::array<std::pair<Beamformer, std::string_view>, 4> kBeamformerNames = {{
            {Beamformer::FullRankCmv, "fullrank-cmv"},
            {Beamformer::FullRankCcm, "fullrank-ccm"},
            {Beamformer::JioCcm, "jio-ccm"},
            {Beamformer::JioCcmGs, "jio-ccm-gs"},
        }};

        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> parts;
            if (trim(s).empty())
                return parts;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        double to_double(const std::string &field, std::string_view text)
        {
            text = trim(text);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value))
                throw ConfigError(field, "'" + field + "': expected a real number, got '" + std::string(text) + "'");
            return value;
        }

        template <typename Int>
        Int to_integer(const std::string &field, std::string_view text)
        {
            text = trim(text);
            Int value = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
                throw ConfigError(field, "'" + field + "': expected a non-negative integer, got '" +
                                             std::string(text) + "'");
            return value;
        }

        std::string exact(double value)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", value);
            return buf;
        }

        bool any_reduced_rank(const std::vector<Beamformer> &algorithms)
        {
            return std::any_of(algorithms.begin(), algorithms.end(), is_reduced_rank);
        }
    } // namespace

    std::string_view to_string(ExperimentKind kind)
    {
        for (const auto &[k, name] : kExperimentNames)
            if (k == kind)
                return name;
        return "unknown";
    }

    std::string_view to_string(Beamformer beamformer)
    {
        for (const auto &[b, name] : kBeamformerNames)
            if (b == beamformer)
                return name;
        return "unknown";
    }

    std::optional<ExperimentKind> parse_experiment(std::string_view name)
    {
        for (const auto &[k, n] : kExperimentNames)
            if (n == name)
                return k;
        return std::nullopt;
    }

    std::optional<Beamformer> parse_beamformer(std::string_view name)
    {
        for (const auto &[b, n] : kBeamformerNames)
            if (n == name)
                return b;
        return std::nullopt;
    }

    bool is_reduced_rank(Beamformer beamformer)
    {
        return beamformer == Beamformer::JioCcm || beamformer == Beamformer::JioCcmGs;
    }

    ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind)
    {
        ExperimentConfig config;
        config.experiment = kind;
        switch (kind)
        {
        case ExperimentKind::SinrVsSnapshots:
            break;
        case ExperimentKind::SinrVsRank:
            config.rank_min = 2;
            config.rank_max = 10;
            break;
        case ExperimentKind::MismatchCompare:
            config.q = 10;
            config.mismatch_deg = 2.0;
            break;
        case ExperimentKind::ComplexityTable:
            break;
        }
        return config;
    }

    std::vector<double> ExperimentConfig::resolved_doas() const
    {
        return doas_deg.empty() ? default_doas(q) : doas_deg;
    }

    Scenario ExperimentConfig::scenario(double presumed_offset_deg) const
    {
        Scenario s;
        s.geometry = ArrayGeometry{m, spacing_over_wavelength};
        s.doas_deg = resolved_doas();
        s.source_power = 1.0;
        s.noise_power = noise_power_from_snr(s.source_power, snr_db);
        s.presumed_doa_offset_deg = presumed_offset_deg;
        s.num_snapshots = num_snapshots;
        return s;
    }

    void ExperimentConfig::validate() const
    {
        if (m < 1)
            throw ConfigError("m", "'m' must be >= 1");
        if (!(spacing_over_wavelength > 0.0))
            throw ConfigError("spacing", "'spacing' must be > 0");
        if (rank_min < 1)
            throw ConfigError("rank", "'rank' must be >= 1");
        if (rank_min > rank_max)
            throw ConfigError("rank", "'rank' range must be increasing");
        if (rank_min != rank_max && experiment != ExperimentKind::SinrVsRank)
            throw ConfigError("rank", "a rank range is only valid for sinr-vs-rank");

        if (experiment == ExperimentKind::ComplexityTable)
            return;

        if (m < 2)
            throw ConfigError("m", "'m' must be >= 2 for simulations");
        if (q < 1 || q > m)
            throw ConfigError("q", "'q' must lie in [1, m]");
        if (!doas_deg.empty() && doas_deg.size() != q)
            throw ConfigError("doas_deg", "'doas_deg' must list exactly q angles");
        if (!std::isfinite(snr_db))
            throw ConfigError("snr_db", "'snr_db' must be finite");
        if (num_snapshots < 1)
            throw ConfigError("num_snapshots", "'num_snapshots' must be >= 1");
        if (num_runs < 1)
            throw ConfigError("num_runs", "'num_runs' must be >= 1");
        if (algorithms.empty())
            throw ConfigError("algorithms", "'algorithms' must name at least one beamformer");
        if ((any_reduced_rank(algorithms) || experiment == ExperimentKind::SinrVsRank) && rank_max >= m)
            throw ConfigError("rank", "'rank' must be < m");

        const auto positive = [](const char *field, double v) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw ConfigError(field, std::string("'") + field + "' must be a positive step size");
        };
        positive("step.jio-ccm.projection", steps.jio_ccm.projection);
        positive("step.jio-ccm.weight", steps.jio_ccm.weight);
        positive("step.jio-ccm-gs.projection", steps.jio_ccm_gs.projection);
        positive("step.jio-ccm-gs.weight", steps.jio_ccm_gs.weight);
        positive("step.fullrank-ccm", steps.fullrank_ccm);
        positive("step.fullrank-cmv", steps.fullrank_cmv);

        if (!std::isfinite(mismatch_deg))
            throw ConfigError("mismatch_deg", "'mismatch_deg' must be finite");
        try
        {
            scenario(experiment == ExperimentKind::MismatchCompare ? mismatch_deg : 0.0).validate();
        }
        catch (const DomainError &ex)
        {
            const std::string what = ex.what();
            const std::string field = what.find("presumed") != std::string::npos ? "mismatch_deg" : "doas_deg";
            throw ConfigError(field, what);
        }
    }

    std::map<std::string, std::string> parse_key_values(std::string_view text)
    {
        std::map<std::string, std::string> values;
        std::size_t line_no = 0;
        for (std::string_view line : split(text, '\n'))
        {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no),
                                  "config line " + std::to_string(line_no) + ": expected 'key = value'");
            values[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
        }
        return values;
    }

    void apply_rank_spec(ExperimentConfig &config, std::string_view spec)
    {
        spec = trim(spec);
        if (const auto dots = spec.find(".."); dots != std::string_view::npos)
        {
            config.rank_min = to_integer<std::size_t>("rank", spec.substr(0, dots));
            config.rank_max = to_integer<std::size_t>("rank", spec.substr(dots + 2));
        }
        else
            config.rank_min = config.rank_max = to_integer<std::size_t>("rank", spec);
    }

    std::vector<Beamformer> parse_beamformer_list(std::string_view list)
    {
        std::vector<Beamformer> out;
        for (auto name : split(list, ','))
        {
            const auto b = parse_beamformer(name);
            if (!b)
                throw ConfigError("algorithms", "unknown algorithm '" + std::string(name) + "'");
            if (std::find(out.begin(), out.end(), *b) == out.end())
                out.push_back(*b);
        }
        return out;
    }

    void apply_key_values(ExperimentConfig &config, const std::map<std::string, std::string> &values)
    {
        for (const auto &[key, value] : values)
        {
            if (key == "experiment")
            {
                const auto kind = parse_experiment(value);
                if (!kind)
                    throw ConfigError(key, "unknown experiment '" + value + "'");
                config.experiment = *kind;
            }
            else if (key == "m")
                config.m = to_integer<std::size_t>(key, value);
            else if (key == "q")
                config.q = to_integer<std::size_t>(key, value);
            else if (key == "snr_db")
                config.snr_db = to_double(key, value);
            else if (key == "spacing")
                config.spacing_over_wavelength = to_double(key, value);
            else if (key == "doas_deg")
            {
                config.doas_deg.clear();
                for (auto item : split(value, ','))
                    config.doas_deg.push_back(to_double(key, item));
            }
            else if (key == "rank")
                apply_rank_spec(config, value);
            else if (key == "step.jio-ccm.projection")
                config.steps.jio_ccm.projection = to_double(key, value);
            else if (key == "step.jio-ccm.weight")
                config.steps.jio_ccm.weight = to_double(key, value);
            else if (key == "step.jio-ccm-gs.projection")
                config.steps.jio_ccm_gs.projection = to_double(key, value);
            else if (key == "step.jio-ccm-gs.weight")
                config.steps.jio_ccm_gs.weight = to_double(key, value);
            else if (key == "step.fullrank-ccm")
                config.steps.fullrank_ccm = to_double(key, value);
            else if (key == "step.fullrank-cmv")
                config.steps.fullrank_cmv = to_double(key, value);
            else if (key == "num_snapshots")
                config.num_snapshots = to_integer<std::size_t>(key, value);
            else if (key == "num_runs")
                config.num_runs = to_integer<std::size_t>(key, value);
            else if (key == "seed")
                config.seed = to_integer<std::uint64_t>(key, value);
            else if (key == "mismatch_deg")
                config.mismatch_deg = to_double(key, value);
            else if (key == "algorithms")
                config.algorithms = parse_beamformer_list(value);
            else
                throw ConfigError(key, "unknown config key '" + key + "'");
        }
    }

    ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base)
    {
        ExperimentConfig config = base;
        apply_key_values(config, parse_key_values(text));
        return config;
    }

    std::string serialize_config(const ExperimentConfig &c)
    {
        std::ostringstream os;
        os << "experiment = " << to_string(c.experiment) << '\n';
        os << "m = " << c.m << '\n';
        os << "q = " << c.q << '\n';
        os << "snr_db = " << exact(c.snr_db) << '\n';
        os << "spacing = " << exact(c.spacing_over_wavelength) << '\n';
        os << "doas_deg = ";
        for (std::size_t k = 0; k < c.doas_deg.size(); ++k)
            os << (k ? "," : "") << exact(c.doas_deg[k]);
        os << '\n';
        os << "rank = " << c.rank_min;
        if (c.rank_max != c.rank_min)
            os << ".." << c.rank_max;
        os << '\n';
        os << "step.jio-ccm.projection = " << exact(c.steps.jio_ccm.projection) << '\n';
        os << "step.jio-ccm.weight = " << exact(c.steps.jio_ccm.weight) << '\n';
        os << "step.jio-ccm-gs.projection = " << exact(c.steps.jio_ccm_gs.projection) << '\n';
        os << "step.jio-ccm-gs.weight = " << exact(c.steps.jio_ccm_gs.weight) << '\n';
        os << "step.fullrank-ccm = " << exact(c.steps.fullrank_ccm) << '\n';
        os << "step.fullrank-cmv = " << exact(c.steps.fullrank_cmv) << '\n';
        os << "num_snapshots = " << c.num_snapshots << '\n';
        os << "num_runs = " << c.num_runs << '\n';
        os << "seed = " << c.seed << '\n';
        os << "mismatch_deg = " << exact(c.mismatch_deg) << '\n';
        os << "algorithms = ";
        for (std::size_t k = 0; k < c.algorithms.size(); ++k)
            os << (k ? "," : "") << to_string(c.algorithms[k]);
        os << '\n';
        return os.str();
    }

} // namespace ccmbf::harness
