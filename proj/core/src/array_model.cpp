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

#include "ccmbf/array_model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ccmbf
{
    void ArrayGeometry::validate() const
    {
        if (num_sensors < 1)
            throw DomainError("ArrayGeometry: num_sensors must be >= 1");
        if (!(spacing_over_wavelength > 0.0) || !std::isfinite(spacing_over_wavelength))
            throw DomainError("ArrayGeometry: spacing_over_wavelength must be > 0");
    }

    void Scenario::validate(bool allow_zero_power) const
    {
        geometry.validate();
        const std::size_t q = doas_deg.size();
        if (q < 1 || q > geometry.num_sensors)
        {
            std::ostringstream msg;
            msg << "Scenario: number of sources (" << q << ") must lie in [1, " << geometry.num_sensors << "]";
            throw DomainError(msg.str());
        }
        for (std::size_t k = 0; k < q; ++k)
        {
            if (!(doas_deg[k] > 0.0 && doas_deg[k] < 180.0))
                throw DomainError("Scenario: DOA " + std::to_string(doas_deg[k]) + " deg outside (0, 180)");
            for (std::size_t l = 0; l < k; ++l)
                if (doas_deg[k] == doas_deg[l])
                    throw DomainError("Scenario: duplicate DOA " + std::to_string(doas_deg[k]) + " deg");
        }
        const double presumed = presumed_soi_doa_deg();
        if (!(presumed > 0.0 && presumed < 180.0))
            throw DomainError("Scenario: presumed SOI direction outside (0, 180)");

        const bool powers_ok = allow_zero_power ? (source_power >= 0.0 && noise_power >= 0.0)
                                                : (source_power > 0.0 && noise_power > 0.0);
        if (!powers_ok || !std::isfinite(source_power) || !std::isfinite(noise_power))
            throw DomainError("Scenario: source_power and noise_power must be > 0");
        if (num_snapshots < 1)
            throw DomainError("Scenario: num_snapshots must be >= 1");
    }

    double noise_power_from_snr(double source_power, double snr_db)
    {
        return source_power * std::pow(10.0, -snr_db / 10.0);
    }

    CVec steering_vector(const ArrayGeometry &geometry, double theta_deg)
    {
        geometry.validate();
        if (!(theta_deg > 0.0 && theta_deg < 180.0))
            throw DomainError("steering_vector: angle " + std::to_string(theta_deg) +
                              " deg outside (0, 180); end-fire directions are ambiguous");

        const double phase_step = -2.0 * std::numbers::pi * geometry.spacing_over_wavelength *
                                  std::cos(theta_deg * std::numbers::pi / 180.0);
        CVec a(static_cast<Eigen::Index>(geometry.num_sensors));
        for (Eigen::Index k = 0; k < a.size(); ++k)
            a(k) = std::polar(1.0, phase_step * static_cast<double>(k));
        return a;
    }

    CMat steering_matrix(const ArrayGeometry &geometry, const std::vector<double> &doas_deg)
    {
        CMat A(static_cast<Eigen::Index>(geometry.num_sensors), static_cast<Eigen::Index>(doas_deg.size()));
        for (std::size_t k = 0; k < doas_deg.size(); ++k)
            A.col(static_cast<Eigen::Index>(k)) = steering_vector(geometry, doas_deg[k]);
        return A;
    }

    SnapshotBatch generate_snapshots(const Scenario &scenario, std::uint64_t seed, bool allow_zero_power)
    {
        scenario.validate(allow_zero_power);

        const CMat A = steering_matrix(scenario.geometry, scenario.doas_deg);
        const Eigen::Index m = A.rows();
        const Eigen::Index q = A.cols();
        const double amplitude = std::sqrt(scenario.source_power);
        const double noise_std = std::sqrt(scenario.noise_power / 2.0);

        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        std::normal_distribution<double> gauss(0.0, 1.0);

        SnapshotBatch batch;
        batch.snapshots.reserve(scenario.num_snapshots);
        batch.soi_symbols.reserve(scenario.num_snapshots);

        Eigen::VectorXd symbols(q);
        for (std::size_t i = 0; i < scenario.num_snapshots; ++i)
        {
            for (Eigen::Index k = 0; k < q; ++k)
                symbols(k) = coin(rng) ? amplitude : -amplitude;

            CVec x = A * symbols.cast<cx>();
            if (noise_std > 0.0)
            {
                for (Eigen::Index k = 0; k < m; ++k)
                {
                    const double re = gauss(rng);
                    const double im = gauss(rng);
                    x(k) += cx(noise_std * re, noise_std * im);
                }
            }
            batch.snapshots.push_back(std::move(x));
            batch.soi_symbols.push_back(symbols(0));
        }
        return batch;
    }

    std::vector<double> default_doas(std::size_t num_sources)
    {
        constexpr double kSoi = 90.0;
        constexpr double kLow = 20.0;
        constexpr double kGuard = 10.0;
        constexpr double kSegment = kSoi - kGuard - kLow; // 60 deg on each side

        std::vector<double> doas{kSoi};
        if (num_sources < 2)
            return doas;

        const std::size_t n = num_sources - 1;
        for (std::size_t k = 0; k < n; ++k)
        {
            // Midpoints of n equal cells over the 120 deg of usable arc
            const double p = static_cast<double>(2 * k + 1) * kSegment / static_cast<double>(n);
            doas.push_back(p < kSegment ? kLow + p : kSoi + kGuard + (p - kSegment));
        }
        return doas;
    }

    std::uint64_t run_seed(std::uint64_t base_seed, std::size_t run_index)
    {
        // splitmix64 finalizer
        std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(run_index) + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

} // namespace ccmbf
