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

#ifndef CCMBF_ARRAY_MODEL_HPP
#define CCMBF_ARRAY_MODEL_HPP

#include "ccmbf/types.hpp"

#include <cstdint>
#include <vector>

namespace ccmbf
{
    // Uniform linear array. Element k sits at k * spacing_over_wavelength wavelengths.
    struct ArrayGeometry
    {
        std::size_t num_sensors = 32;
        double spacing_over_wavelength = 0.5;

        void validate() const;
    };

    // Far-field narrowband scenario. doas_deg[0] is the signal of interest (SOI), the rest interferers.
    // Angles are measured from the array axis, so broadside is 90 degrees.
    struct Scenario
    {
        ArrayGeometry geometry;
        std::vector<double> doas_deg;        // theta_0 ... theta_{q-1}
        double source_power = 1.0;           // per source, SOI and interferers alike
        double noise_power = 0.1;            // per sensor
        double presumed_doa_offset_deg = 0.0; // steering error seen by the beamformers
        std::size_t num_snapshots = 500;

        std::size_t num_sources() const { return doas_deg.size(); }
        double soi_doa_deg() const { return doas_deg.front(); }
        double presumed_soi_doa_deg() const { return doas_deg.front() + presumed_doa_offset_deg; }

        // Throws DomainError. `allow_zero_power` relaxes source_power > 0 and noise_power > 0 to
        // >= 0 (test hook for pure-noise and noise-free batches).
        void validate(bool allow_zero_power = false) const;
    };

    struct SnapshotBatch
    {
        std::vector<CVec> snapshots;     // x(i), each of length m
        std::vector<double> soi_symbols; // s_0(i) in {+sqrt(P), -sqrt(P)}

        std::size_t size() const { return snapshots.size(); }
    };

    // Per-sensor noise power for a given input SNR in dB relative to one source.
    double noise_power_from_snr(double source_power, double snr_db);

    // Raw ULA response; entry k is exp(-2*pi*j*k*(d/lambda)*cos(theta)). Throws DomainError
    // unless 0 < theta_deg < 180.
    CVec steering_vector(const ArrayGeometry &geometry, double theta_deg);

    // Stacks steering vectors column-wise: A(theta) = [a(theta_0) ... a(theta_{q-1})].
    CMat steering_matrix(const ArrayGeometry &geometry, const std::vector<double> &doas_deg);

    // x(i) = sum_k a(theta_k) s_k(i) + n(i) with equiprobable real BPSK symbols and circular
    // complex white Gaussian noise. Deterministic in (scenario, seed).
    SnapshotBatch generate_snapshots(const Scenario &scenario, std::uint64_t seed,
                                     bool allow_zero_power = false);

    // Default DOA layout: SOI at 90 degrees; q-1 interferers evenly spread over [20, 160]
    // with a +/-10 degree guard band around the SOI.
    std::vector<double> default_doas(std::size_t num_sources);

    // Seed for Monte-Carlo run `run_index`; mixes the base seed so neighbouring runs decorrelate.
    std::uint64_t run_seed(std::uint64_t base_seed, std::size_t run_index);

} // namespace ccmbf

#endif
