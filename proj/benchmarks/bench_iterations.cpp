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

// Per-snapshot cost of the adaptive updates; compare against the complexity table.

#include "ccmbf.hpp"

#include <benchmark/benchmark.h>

using namespace ccmbf;

namespace
{
    SnapshotBatch reference_batch(std::size_t m, std::size_t n)
    {
        Scenario s;
        s.geometry = {m, 0.5};
        s.doas_deg = default_doas(7);
        s.noise_power = 0.1;
        s.num_snapshots = n;
        return generate_snapshots(s, 1);
    }

    void BM_FullRankCcmStep(benchmark::State &state)
    {
        const auto m = static_cast<std::size_t>(state.range(0));
        const SnapshotBatch b = reference_batch(m, 256);
        auto s = FullRankState::quiescent(steering_vector({m, 0.5}, 90.0), 2e-3);
        std::size_t i = 0;
        for (auto _ : state)
        {
            auto r = ccm_sg_step(s, b.snapshots[i++ & 255]);
            benchmark::DoNotOptimize(r.output);
            s = std::move(r.state);
        }
    }

    void BM_FullRankCmvStep(benchmark::State &state)
    {
        const auto m = static_cast<std::size_t>(state.range(0));
        const SnapshotBatch b = reference_batch(m, 256);
        auto s = FullRankState::quiescent(steering_vector({m, 0.5}, 90.0), 5e-5);
        std::size_t i = 0;
        for (auto _ : state)
        {
            auto r = cmv_sg_step(s, b.snapshots[i++ & 255]);
            benchmark::DoNotOptimize(r.output);
            s = std::move(r.state);
        }
    }

    void BM_JioCcmIterate(benchmark::State &state)
    {
        const auto r = static_cast<std::size_t>(state.range(0));
        const SnapshotBatch b = reference_batch(32, 256);
        const JioState start = init_jio(32, r, steering_vector({32, 0.5}, 90.0), {0.002, 0.001});
        JioState s = start;
        std::size_t i = 0;
        for (auto _ : state)
        {
            if ((i & 255) == 0) // restart each pass so long runs stay on one convergence transient
                s = start;
            auto step = jio_ccm_iterate(s, b.snapshots[i++ & 255]);
            benchmark::DoNotOptimize(step.output);
            s = std::move(step.state);
        }
    }

    void BM_JioCcmGsIterate(benchmark::State &state)
    {
        const auto r = static_cast<std::size_t>(state.range(0));
        const SnapshotBatch b = reference_batch(32, 256);
        const JioState start = init_jio(32, r, steering_vector({32, 0.5}, 90.0), {0.003, 0.0007});
        JioState s = start;
        std::size_t i = 0;
        for (auto _ : state)
        {
            if ((i & 255) == 0) // restart each pass so long runs stay on one convergence transient
                s = start;
            auto step = jio_ccm_gs_iterate(s, b.snapshots[i++ & 255]);
            benchmark::DoNotOptimize(step.output);
            s = std::move(step.state);
        }
    }

    void BM_GramSchmidt(benchmark::State &state)
    {
        const auto r = state.range(0);
        const CMat M = CMat::Random(32, r);
        for (auto _ : state)
            benchmark::DoNotOptimize(gs_orthonormalize(M));
    }

    void BM_OutputSinr(benchmark::State &state)
    {
        Scenario s;
        s.geometry = {32, 0.5};
        s.doas_deg = default_doas(7);
        const SinrEvaluator sinr(s);
        const CVec w = steering_vector(s.geometry, 90.0);
        for (auto _ : state)
            benchmark::DoNotOptimize(sinr(w));
    }
} // namespace

BENCHMARK(BM_FullRankCcmStep)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_FullRankCmvStep)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_JioCcmIterate)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(BM_JioCcmGsIterate)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(BM_GramSchmidt)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(BM_OutputSinr);

BENCHMARK_MAIN();
