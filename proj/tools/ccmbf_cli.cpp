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

// ccmbf: reproduces the reduced-rank CCM beamforming experiments and writes CSV curves.
//
//   ccmbf sinr-snapshots [--runs K] [--rank r] ...
//   ccmbf sinr-rank --rank 2..10
//   ccmbf mismatch
//   ccmbf complexity --rank 5
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "CLI11.hpp"
#include "ccmbf/experiment.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ccmbf;
using namespace ccmbf::harness;

namespace
{
    constexpr int kExitConfig = 2;
    constexpr int kExitNumerical = 3;

    struct Options
    {
        std::string config_path;
        std::string out_dir = ".";
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> runs;
        std::string rank;
        std::string algorithms;
        std::vector<std::string> overrides;
        bool paper_scale = false;
        std::size_t threads = 0;
    };

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config", "cannot read config file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    ExperimentConfig resolve(ExperimentKind kind, const Options &opt)
    {
        ExperimentConfig config = ExperimentConfig::defaults(kind);

        if (!opt.config_path.empty())
        {
            const auto values = parse_key_values(read_file(opt.config_path));
            apply_key_values(config, values);
            if (config.experiment != kind)
                throw ConfigError("experiment", "config file is for '" + std::string(to_string(config.experiment)) +
                                                    "' but the subcommand runs '" + std::string(to_string(kind)) + "'");
        }

        std::map<std::string, std::string> sets;
        for (const auto &item : opt.overrides)
        {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ConfigError("--set", "--set expects key=value, got '" + item + "'");
            sets[item.substr(0, eq)] = item.substr(eq + 1);
        }
        apply_key_values(config, sets);

        if (opt.paper_scale)
            config.num_runs = kFullScaleRuns;
        if (opt.runs)
            config.num_runs = *opt.runs;
        if (opt.seed)
            config.seed = *opt.seed;
        if (!opt.rank.empty())
            apply_rank_spec(config, opt.rank);
        if (!opt.algorithms.empty())
            config.algorithms = parse_beamformer_list(opt.algorithms);

        config.experiment = kind;
        config.validate();
        return config;
    }

    fs::path output_path(const Options &opt, ExperimentKind kind)
    {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);

        fs::create_directories(opt.out_dir);
        return fs::path(opt.out_dir) / (std::string(to_string(kind)) + "_" + stamp + ".csv");
    }

    int run(ExperimentKind kind, const Options &opt)
    {
        const ExperimentConfig config = resolve(kind, opt);
        const RunOptions run_options{opt.threads};

        std::ostringstream csv;
        std::optional<NumericalError> failure; // reported after the partial CSV is written
        switch (kind)
        {
        case ExperimentKind::SinrVsSnapshots:
        {
            const auto curves = run_sinr_vs_snapshots(config, run_options);
            write_snapshots_csv(csv, config, curves);
            for (const auto &c : curves)
                std::cout << to_string(c.algorithm) << ": SINR at N=" << config.num_snapshots << " = "
                          << format_number(c.curve.final_db()) << " dB\n";
            break;
        }
        case ExperimentKind::SinrVsRank:
        {
            const auto points = run_sinr_vs_rank(config, run_options);
            write_rank_csv(csv, config, points);
            for (const auto &p : points)
            {
                std::cout << "r=" << p.rank << ' ' << to_string(p.algorithm) << ": "
                          << format_number(p.sinr_db) << " dB\n";
                if (p.failed_run && !failure)
                    failure = NumericalError(*p.failed_run, "r=" + std::to_string(p.rank) + ' ' +
                                                                std::string(to_string(p.algorithm)) + ": " + p.failure);
            }
            break;
        }
        case ExperimentKind::MismatchCompare:
        {
            const auto result = run_mismatch_compare(config, run_options);
            write_mismatch_csv(csv, config, result);
            for (std::size_t k = 0; k < result.ideal.size(); ++k)
                std::cout << to_string(result.ideal[k].algorithm) << ": ideal "
                          << format_number(result.ideal[k].curve.final_db()) << " dB, mismatched "
                          << format_number(result.mismatched[k].curve.final_db()) << " dB\n";
            break;
        }
        case ExperimentKind::ComplexityTable:
        {
            const auto rows = run_complexity_table(config);
            write_complexity_csv(csv, config, rows);
            write_complexity_table(std::cout, rows);
            break;
        }
        }

        const fs::path path = output_path(opt, kind);
        std::ofstream out(path);
        if (!out)
            throw ConfigError("--out", "cannot write '" + path.string() + "'");
        out << csv.str();
        std::cout << "wrote " << path.string() << '\n';
        if (failure)
            throw *failure;
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Reduced-rank constrained constant modulus beamforming simulator"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App *sub) {
        sub->add_option("--config", opt.config_path, "Flat key = value config file");
        sub->add_option("--out", opt.out_dir, "Output directory for CSV files")->capture_default_str();
        sub->add_option("--seed", opt.seed, "Base RNG seed");
        sub->add_option("--runs", opt.runs, "Monte-Carlo runs (K)");
        sub->add_option("--rank", opt.rank, "Rank r or range r1..r2");
        sub->add_option("--algorithms", opt.algorithms,
                        "Comma list of fullrank-cmv, fullrank-ccm, jio-ccm, jio-ccm-gs");
        sub->add_flag("--paper-scale", opt.paper_scale, "Use K = 1000 runs");
        sub->add_option("--set", opt.overrides, "Override any config key (key=value), repeatable");
        sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    };

    const std::array<std::pair<const char *, ExperimentKind>, 4> commands = {{
        {"sinr-snapshots", ExperimentKind::SinrVsSnapshots},
        {"sinr-rank", ExperimentKind::SinrVsRank},
        {"mismatch", ExperimentKind::MismatchCompare},
        {"complexity", ExperimentKind::ComplexityTable},
    }};
    const std::array<const char *, 4> descriptions = {
        "Output SINR versus number of snapshots",
        "Output SINR versus rank at the last snapshot",
        "Ideal versus mismatched presumed SOI direction",
        "Arithmetic complexity per snapshot for all nine algorithms",
    };
    std::vector<std::pair<CLI::App *, ExperimentKind>> subs;
    for (std::size_t k = 0; k < commands.size(); ++k)
    {
        auto *sub = app.add_subcommand(commands[k].first, descriptions[k]);
        add_common(sub);
        subs.emplace_back(sub, commands[k].second);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }

    try
    {
        for (const auto &[sub, kind] : subs)
            if (sub->parsed())
                return run(kind, opt);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical failure (run " << e.run_index() << "): " << e.what() << '\n';
        return kExitNumerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
