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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include "ccmbf.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace ccmbf;
using namespace ccmbf::harness;

namespace
{
    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    int failures = 0;

    void criterion(int id, const char *name, double time_limit_s, const std::function<Outcome()> &body)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = body();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < time_limit_s;
        const bool pass = o.pass && in_time;
        if (!pass)
            ++failures;
        std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
                    time_limit_s);
        std::fflush(stdout);
    }

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, f, args...);
        return buf;
    }

    CVec random_vector(std::mt19937_64 &rng, Eigen::Index n, double variance)
    {
        std::normal_distribution<double> g(0.0, std::sqrt(variance / 2.0));
        CVec v(n);
        for (auto &x : v)
        {
            const double re = g(rng);
            x = {re, g(rng)};
        }
        return v;
    }

    double max_orthonormality_error(const CMat &T)
    {
        return (T.adjoint() * T - CMat::Identity(T.cols(), T.cols())).cwiseAbs().maxCoeff();
    }

    CMat column_projector(const CMat &M)
    {
        const CMat q = Eigen::HouseholderQR<CMat>(M).householderQ() * CMat::Identity(M.rows(), M.cols());
        return q * q.adjoint();
    }

    double final_of(const std::vector<AlgorithmCurve> &curves, Beamformer b)
    {
        for (const auto &c : curves)
            if (c.algorithm == b)
                return c.curve.final_db();
        throw std::logic_error("missing curve");
    }

    Outcome constraint_invariance()
    {
        std::mt19937_64 rng(1001);
        const CVec a = steering_vector({32, 0.5}, 90.0) / std::sqrt(32.0);
        JioState s = init_jio(32, 5, a, {0.002, 0.001});
        double worst_projection = 0.0, worst_weight = 0.0, worst_joint = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            const CVec x = random_vector(rng, 32, 1.0 / 32.0);
            const JioStepResult r = jio_ccm_iterate(s, x);
            const CVec abar_old = s.projected_steering();
            const CVec abar_new = r.state.projected_steering();
            worst_projection = std::max(worst_projection, (abar_new - abar_old).norm());
            worst_weight = std::max(worst_weight, std::abs(abar_new.dot(r.state.weight) - abar_old.dot(s.weight)));
            worst_joint = std::max(worst_joint, std::abs(r.state.constraint_value() - 1.0));
            s = r.state;
        }
        const bool pass = worst_projection < 1e-12 && worst_weight < 1e-12 && worst_joint < 1e-6;
        return {pass, fmt("max step drift a^H T %.2e, abar^H wbar %.2e (< 1e-12); joint residual %.2e (< 1e-6)",
                          worst_projection, worst_weight, worst_joint)};
    }

    Outcome gs_orthonormality()
    {
        Scenario sc;
        sc.geometry = {32, 0.5};
        sc.doas_deg = default_doas(7);
        sc.noise_power = 0.1;
        sc.num_snapshots = 500;
        double worst_orth = 0.0;
        for (std::size_t run = 0; run < 4; ++run)
        {
            const SnapshotBatch b = generate_snapshots(sc, run_seed(7, run));
            JioState s = init_jio(32, 5, steering_vector(sc.geometry, 90.0), {0.003, 0.0007});
            for (const CVec &x : b.snapshots)
            {
                s = jio_ccm_gs_iterate(s, x).state;
                worst_orth = std::max(worst_orth, max_orthonormality_error(s.projection));
            }
        }

        std::mt19937_64 rng(1002);
        std::uniform_int_distribution<int> dim(2, 32);
        std::uniform_real_distribution<double> sv(1.0, 100.0);
        double worst_span = 0.0;
        for (int trial = 0; trial < 1000; ++trial)
        {
            const int m = dim(rng);
            const int r = std::uniform_int_distribution<int>(1, m)(rng);
            const CMat U = Eigen::HouseholderQR<CMat>(random_vector(rng, m * m, 1.0).reshaped(m, m)).householderQ();
            const CMat V = Eigen::HouseholderQR<CMat>(random_vector(rng, r * r, 1.0).reshaped(r, r)).householderQ();
            CMat S = CMat::Zero(m, r);
            for (int k = 0; k < r; ++k)
                S(k, k) = sv(rng);
            const CMat M = U * S * V.adjoint();
            const CMat Q = gs_orthonormalize(M);
            worst_span = std::max(worst_span, (column_projector(M) - column_projector(Q)).norm());
            worst_orth = std::max(worst_orth, max_orthonormality_error(Q));
        }
        return {worst_orth < 1e-10 && worst_span < 1e-8,
                fmt("max |T^H T - I| %.2e (< 1e-10); max projector error %.2e (< 1e-8)", worst_orth, worst_span)};
    }

    Outcome complexity_golden()
    {
        struct Row
        {
            ComplexityAlgorithm a;
            std::int64_t add, mul;
        };
        const Row rows[] = {
            {ComplexityAlgorithm::FullRankCmv, 95, 129}, {ComplexityAlgorithm::FullRankCcm, 96, 131},
            {ComplexityAlgorithm::MswfCmv, 5320, 6491},  {ComplexityAlgorithm::MswfCcm, 5321, 6493},
            {ComplexityAlgorithm::Avf, 25717, 34336},    {ComplexityAlgorithm::JioCmv, 679, 710},
            {ComplexityAlgorithm::JioCmvGs, 1087, 1098}, {ComplexityAlgorithm::JioCcm, 680, 713},
            {ComplexityAlgorithm::JioCcmGs, 1088, 1101},
        };
        int matched = 0;
        std::string mismatches;
        for (const Row &row : rows)
        {
            const auto c = complexity_counts(row.a, 32, 5);
            if (c.additions == row.add && c.multiplications == row.mul)
                ++matched;
            else
                mismatches += " " + std::string(to_string(row.a));
        }
        const auto jio = complexity_counts(ComplexityAlgorithm::JioCcm, 32, 5);
        return {matched == 9, fmt("%d/9 rows exact; JIO-CCM = (%lld, %lld)%s", matched, (long long)jio.additions,
                                  (long long)jio.multiplications, mismatches.c_str())};
    }

    Outcome snapshot_ordering()
    {
        const auto c = ExperimentConfig::defaults(ExperimentKind::SinrVsSnapshots);
        const auto curves = run_sinr_vs_snapshots(c);
        const double gs = final_of(curves, Beamformer::JioCcmGs);
        const double jio = final_of(curves, Beamformer::JioCcm);
        const double ccm = final_of(curves, Beamformer::FullRankCcm);
        const double cmv = final_of(curves, Beamformer::FullRankCmv);
        const bool pass = gs >= jio && jio > ccm && ccm > cmv && jio - ccm >= 1.0;
        return {pass, fmt("K=%zu, SINR at N=500: JIO-CCM-GS %.2f, JIO-CCM %.2f, FR-CCM %.2f, FR-CMV %.2f dB; "
                          "JIO-CCM - FR-CCM = %.2f dB (need GS >= JIO > FR-CCM > FR-CMV, margin >= 1 dB)",
                          c.num_runs, gs, jio, ccm, cmv, jio - ccm)};
    }

    Outcome rank_peak()
    {
        auto c = ExperimentConfig::defaults(ExperimentKind::SinrVsRank);
        c.algorithms = {Beamformer::JioCcm, Beamformer::JioCcmGs};
        const auto points = run_sinr_vs_rank(c);
        bool pass = true;
        std::string detail;
        for (Beamformer b : c.algorithms)
        {
            std::size_t best = 0;
            double best_db = -std::numeric_limits<double>::infinity();
            std::string curve, diverged;
            for (const auto &p : points)
            {
                if (p.algorithm != b)
                    continue;
                if (std::isnan(p.sinr_db))
                {
                    diverged += " " + std::to_string(p.rank);
                    continue;
                }
                curve += fmt(" r%zu=%.2f", p.rank, p.sinr_db);
                if (p.sinr_db > best_db)
                {
                    best_db = p.sinr_db;
                    best = p.rank;
                }
            }
            pass = pass && best >= 4 && best <= 6;
            detail += fmt("%s best r=%zu [%s ]", std::string(to_string(b)).c_str(), best, curve.c_str());
            if (!diverged.empty())
                detail += " diverged at r=" + diverged;
            detail += "; ";
        }
        return {pass, detail + "need best r in {4,5,6}"};
    }

    Outcome mismatch_robustness()
    {
        const auto c = ExperimentConfig::defaults(ExperimentKind::MismatchCompare);
        const MismatchResult r = run_mismatch_compare(c);
        constexpr std::size_t kWindow = 50; // steady state: mean of the last 50 snapshots
        double cmv_loss = std::numeric_limits<double>::quiet_NaN();
        std::vector<std::pair<Beamformer, double>> losses;
        bool all_degrade = true;
        std::string detail = fmt("q=%zu, %.0f deg, K=%zu losses:", c.q, c.mismatch_deg, c.num_runs);
        for (std::size_t k = 0; k < r.ideal.size(); ++k)
        {
            const double ideal = r.ideal[k].curve.tail_mean_db(kWindow);
            const double mis = r.mismatched[k].curve.tail_mean_db(kWindow);
            const double loss = ideal - mis;
            all_degrade = all_degrade && loss > 0.0;
            losses.emplace_back(r.ideal[k].algorithm, loss);
            if (r.ideal[k].algorithm == Beamformer::FullRankCmv)
                cmv_loss = loss;
            detail += fmt(" %s %.2f->%.2f (%.2f dB)", std::string(to_string(r.ideal[k].algorithm)).c_str(), ideal,
                          mis, loss);
        }
        bool ccm_robust = !std::isnan(cmv_loss);
        for (const auto &[b, loss] : losses)
            if (b != Beamformer::FullRankCmv)
                ccm_robust = ccm_robust && loss <= cmv_loss;
        return {all_degrade && ccm_robust, detail + "; need every loss > 0 and CCM losses <= FR-CMV loss"};
    }

    Outcome closed_form_consistency()
    {
        Scenario sc;
        sc.geometry = {16, 0.5};
        sc.doas_deg = default_doas(3);
        sc.noise_power = noise_power_from_snr(1.0, 10.0);
        sc.num_snapshots = 2000;
        const CVec a = steering_vector(sc.geometry, sc.presumed_soi_doa_deg());
        const JioSteps steps{0.002, 0.001};
        constexpr std::size_t kRuns = 100;
        constexpr std::size_t kConvergedSnapshots = 20000; // the r = 1 SG chain is still climbing at N = 2000
        constexpr std::size_t kTail = 2000;

        const RunProcedure sg = [&](const Scenario &, const SnapshotBatch &b, const SinrEvaluator &sinr) {
            JioState s = init_jio(16, 1, a, steps);
            std::vector<double> out;
            for (const CVec &x : b.snapshots)
            {
                s = jio_ccm_iterate(s, x).state;
                out.push_back(sinr(effective_weight(s)));
            }
            return out;
        };
        // One point per alternation, so this cannot go through monte_carlo_sinr; same seeds, dB mean.
        const SinrEvaluator sinr(sc);
        std::vector<double> cf_mean(10, 0.0);
        for (std::size_t run = 0; run < kRuns; ++run)
        {
            const SnapshotBatch b = generate_snapshots(sc, run_seed(2024, run));
            const auto history = closed_form_alternation(init_jio(16, 1, a, steps), b, {10, 1e-3});
            for (std::size_t k = 0; k < history.size(); ++k)
                cf_mean[k] += sinr(effective_weight(history[k])) / double(kRuns);
        }
        Scenario long_sc = sc;
        long_sc.num_snapshots = kConvergedSnapshots;
        const SinrCurve sg_curve = monte_carlo_sinr(sg, long_sc, kRuns, 2024);
        const double sg_db = sg_curve.tail_mean_db(kTail);
        const double cf_db = cf_mean.back();
        std::string trace;
        for (double v : cf_mean)
            trace += fmt(" %.1f", v);
        return {std::abs(cf_db - sg_db) <= 1.0,
                fmt("closed form after 10 alternations (N=2000) %.2f dB vs converged SG (N=20000 tail) %.2f dB (|diff| %.2f, need <= 1); "
                    "alternation trace:%s",
                    cf_db, sg_db, std::abs(cf_db - sg_db), trace.c_str())};
    }

    Outcome matched_filter()
    {
        Scenario sc;
        sc.geometry = {32, 0.5};
        sc.doas_deg = {90.0};
        sc.noise_power = noise_power_from_snr(1.0, 10.0);
        const double v = output_sinr(steering_vector(sc.geometry, 90.0), sc);
        return {std::abs(v - 25.05) <= 0.01, fmt("%.4f dB (need 25.05 +/- 0.01)", v)};
    }
} // namespace

int main()
{
    criterion(1, "constraint invariance", 5, constraint_invariance);
    criterion(2, "GS orthonormality and span", 5, gs_orthonormality);
    criterion(3, "complexity golden table", 1, complexity_golden);
    criterion(4, "SINR ordering vs snapshots", 120, snapshot_ordering);
    criterion(5, "rank peak", 600, rank_peak);
    criterion(6, "mismatch robustness", 300, mismatch_robustness);
    criterion(7, "closed-form / SG consistency", 60, closed_form_consistency);
    criterion(8, "matched-filter SINR", 1, matched_filter);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
