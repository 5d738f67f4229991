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

#include "doctest.h"
#include "generators.hpp"

#include <Eigen/SVD>

using namespace ccmbf;

namespace
{
    const JioSteps kDefaultSteps{0.002, 0.001};

    CVec unit_steering(std::size_t m, double theta)
    {
        return steering_vector({m, 0.5}, theta) / std::sqrt(static_cast<double>(m));
    }

    // Rescales x so that the state's output has modulus one.
    CVec on_cm_circle(const JioState &s, CVec x)
    {
        return x / std::abs(output(s, x));
    }
} // namespace

TEST_CASE("init selects the first r coordinates and meets the constraint")
{
    const CVec a = unit_steering(32, 90.0);
    const JioState s = init_jio(32, 5, a, kDefaultSteps);
    CHECK(s.rank() == 5);
    CHECK(s.num_sensors() == 32);
    CHECK((s.projection - CMat::Identity(32, 5)).norm() == 0.0);
    CHECK(std::abs(s.constraint_value() - 1.0) < 1e-12);
}

TEST_CASE("init rejects r >= m and r = 0")
{
    const CVec a = unit_steering(4, 70.0);
    CHECK_THROWS_AS(init_jio(4, 4, a, kDefaultSteps), DomainError);
    CHECK_THROWS_AS(init_jio(4, 0, a, kDefaultSteps), DomainError);
    CHECK_NOTHROW(init_jio(4, 3, a, kDefaultSteps));
}

TEST_CASE("init with a steering vector hidden from the selector is degenerate")
{
    CVec a = CVec::Zero(6);
    a[4] = 1.0;
    CHECK_THROWS_AS(init_jio(6, 3, a, kDefaultSteps), DegenerateSubspaceError);
}

TEST_CASE("property: init meets the constraint for any geometry")
{
    gen::Engine rng(21);
    for (int trial = 0; trial < 200; ++trial)
    {
        const std::size_t m = gen::index(rng, 2, 40);
        const std::size_t r = gen::index(rng, 1, m - 1);
        const CVec a = gen::vector(rng, static_cast<Eigen::Index>(m));
        const JioState s = init_jio(m, r, a, kDefaultSteps);
        CHECK(std::abs(s.constraint_value() - 1.0) < 1e-12);
    }
}

TEST_CASE("projection with the selector returns the leading entries")
{
    gen::Engine rng(22);
    const JioState s = init_jio(10, 4, unit_steering(10, 80.0), kDefaultSteps);
    const CVec x = gen::vector(rng, 10);
    CHECK((project(s, x) - x.head(4)).norm() == 0.0);

    JioState zero = s;
    zero.projection.setZero();
    CHECK(project(zero, x).norm() == 0.0);
}

TEST_CASE("property: projection matches per-column inner products")
{
    gen::Engine rng(23);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t m = gen::index(rng, 2, 24);
        const std::size_t r = gen::index(rng, 1, m - 1);
        const JioState s = gen::jio_state(rng, m, r, gen::unit_vector(rng, Eigen::Index(m)), kDefaultSteps);
        const CVec x = gen::vector(rng, Eigen::Index(m));
        const CVec xbar = project(s, x);
        for (std::size_t l = 0; l < r; ++l)
        {
            cx dot = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                dot += std::conj(s.projection(Eigen::Index(k), Eigen::Index(l))) * x[Eigen::Index(k)];
            CHECK(std::abs(xbar[Eigen::Index(l)] - dot) < 1e-12);
        }
    }
}

TEST_CASE("output of the presumed steering is one and of zero is zero")
{
    const CVec a = unit_steering(16, 65.0);
    const JioState s = init_jio(16, 3, a, kDefaultSteps);
    CHECK(std::abs(output(s, a) - 1.0) < 1e-12);
    CHECK(output(s, CVec::Zero(16)) == cx{0.0, 0.0});
}

TEST_CASE("property: effective weight reproduces the reduced-rank output")
{
    gen::Engine rng(24);
    for (int trial = 0; trial < 20; ++trial)
    {
        const std::size_t m = gen::index(rng, 2, 32);
        const std::size_t r = gen::index(rng, 1, m - 1);
        const JioState s = gen::jio_state(rng, m, r, gen::unit_vector(rng, Eigen::Index(m)), kDefaultSteps);
        const CVec w = effective_weight(s);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const CVec x = gen::vector(rng, Eigen::Index(m));
            worst = std::max(worst, std::abs(w.dot(x) - output(s, x)));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("effective weight at init meets the constraint; zero filter gives zero")
{
    const CVec a = unit_steering(12, 100.0);
    JioState s = init_jio(12, 4, a, kDefaultSteps);
    CHECK(std::abs(effective_weight(s).dot(a) - 1.0) < 1e-12);
    s.weight.setZero();
    CHECK(effective_weight(s).norm() == 0.0);
}

TEST_CASE("projection update is idle on the CM circle and along a")
{
    gen::Engine rng(25);
    const CVec a = gen::unit_vector(rng, 8);
    const JioState s = gen::jio_state(rng, 8, 3, a, {0.05, 0.05});

    const CVec x = on_cm_circle(s, gen::vector(rng, 8));
    CHECK((sg_update_projection(s, x, output(s, x)) - s.projection).norm() < 1e-15);

    // x = a: x wbar^H - a wbar^H (a^H x) vanishes for unit-norm a
    const CVec xa = 2.5 * a;
    CHECK((sg_update_projection(s, xa, output(s, xa)) - s.projection).norm() < 1e-13);
}

TEST_CASE("weight update is idle on the CM circle and along abar")
{
    gen::Engine rng(26);
    const JioState s = gen::jio_state(rng, 8, 3, gen::unit_vector(rng, 8), {0.05, 0.05});
    const CVec x = on_cm_circle(s, gen::vector(rng, 8));
    CHECK((sg_update_weight(s, project(s, x), output(s, x)) - s.weight).norm() < 1e-15);

    const CVec abar = s.projected_steering();
    CHECK((sg_update_weight(s, 2.0 * abar, s.weight.dot(2.0 * abar)) - s.weight).norm() < 1e-13);
}

TEST_CASE("weight update with the SOI invisible in the subspace is degenerate")
{
    JioState s = init_jio(6, 2, CVec::Ones(6) / std::sqrt(6.0), kDefaultSteps);
    s.projection.setZero();
    s.projection(4, 0) = 1.0;
    s.presumed_steering = CVec::Zero(6);
    s.presumed_steering[2] = 1.0;
    CHECK_THROWS_AS(sg_update_weight(s, CVec::Ones(2), cx{3.0, 0.0}), DegenerateSubspaceError);
}

TEST_CASE("property: each update preserves its half of the constraint")
{
    gen::Engine rng(27);
    for (int trial = 0; trial < 500; ++trial)
    {
        const std::size_t m = gen::index(rng, 2, 32);
        const std::size_t r = gen::index(rng, 1, m - 1);
        const CVec a = gen::unit_vector(rng, Eigen::Index(m));
        const JioState s = gen::jio_state(rng, m, r, a, {gen::uniform(rng, 0, 0.01), gen::uniform(rng, 0, 0.01)});
        const CVec x = gen::vector(rng, Eigen::Index(m), 1.0 / double(m));
        const cx y = output(s, x);

        const CMat T = sg_update_projection(s, x, y);
        CHECK((a.adjoint() * T - a.adjoint() * s.projection).norm() < 1e-12);

        const CVec w = sg_update_weight(s, project(s, x), y);
        const CVec abar = s.projected_steering();
        CHECK(std::abs(abar.dot(w) - abar.dot(s.weight)) < 1e-12);
    }
}

TEST_CASE("iterate leaves the state unchanged on the CM circle or with zero steps")
{
    gen::Engine rng(28);
    const CVec a = gen::unit_vector(rng, 10);
    const JioState s = gen::jio_state(rng, 10, 4, a, kDefaultSteps);
    const CVec x = on_cm_circle(s, gen::vector(rng, 10));
    const JioStepResult r = jio_ccm_iterate(s, x);
    CHECK(r.output == output(s, x));
    CHECK((r.state.projection - s.projection).norm() < 1e-15);
    CHECK((r.state.weight - s.weight).norm() < 1e-15);

    JioState frozen = s;
    frozen.steps = {0.0, 0.0};
    for (int i = 0; i < 50; ++i)
    {
        const JioStepResult z = jio_ccm_iterate(frozen, gen::vector(rng, 10));
        CHECK(z.state.projection == frozen.projection);
        CHECK(z.state.weight == frozen.weight);
    }
}

TEST_CASE("property: joint constraint holds along long random chains")
{
    gen::Engine rng(29);
    const CVec a = unit_steering(32, 90.0);
    JioState s = init_jio(32, 5, a, kDefaultSteps);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        s = jio_ccm_iterate(s, gen::vector(rng, 32, 1.0 / 32.0)).state;
        worst = std::max(worst, std::abs(s.constraint_value() - 1.0));
    }
    REQUIRE(s.projection.allFinite());
    CHECK(worst < 1e-6);
}

TEST_CASE("closed-form projection at identity correlations")
{
    gen::Engine rng(30);
    const CVec a = gen::unit_vector(rng, 6);
    const CVec w = gen::vector(rng, 3);
    const CMat T = closed_form_projection(CMat::Identity(6, 6), CMat::Identity(3, 3), w, a, 0.0);
    const CMat expected = a * w.adjoint() / w.squaredNorm();
    CHECK((T - expected).norm() < 1e-12);
    CHECK(std::abs(w.dot(T.adjoint() * a) - 1.0) < 1e-12);
}

TEST_CASE("property: closed-form projection is rank one along R^-1 a and scale free")
{
    gen::Engine rng(31);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto m = Eigen::Index(gen::index(rng, 3, 16));
        const auto r = Eigen::Index(gen::index(rng, 2, std::size_t(m - 1)));
        const CMat R = gen::hpd(rng, m);
        const CMat Rw = gen::hpd(rng, r);
        const CVec w = gen::vector(rng, r);
        const CVec a = gen::unit_vector(rng, m);

        const CMat T = closed_form_projection(R, Rw, w, a, 0.0);
        CHECK(std::abs(w.dot(T.adjoint() * a) - 1.0) < 1e-10);

        const Eigen::JacobiSVD<CMat> svd(T);
        const auto sv = svd.singularValues();
        CHECK(sv[1] < 1e-10 * sv[0]);

        CVec z = R.ldlt().solve(a);
        z.normalize();
        for (Eigen::Index c = 0; c < r; ++c)
            CHECK((T.col(c) - z * z.dot(T.col(c))).norm() < 1e-9 * (1.0 + T.col(c).norm()));

        const double scale = gen::uniform(rng, 0.01, 100.0);
        CHECK((closed_form_projection(scale * R, Rw, w, a, 0.0) - T).norm() < 1e-10 * T.norm());
    }
}

TEST_CASE("closed-form weight examples")
{
    const CVec abar = (CVec(2) << 1.0, 1.0).finished();
    CMat R = CMat::Zero(2, 2);
    R(0, 0) = 1.0;
    R(1, 1) = 2.0;
    const CVec w = closed_form_weight(R, abar, 0.0);
    CHECK(std::abs(w[0] - 2.0 / 3.0) < 1e-14);
    CHECK(std::abs(w[1] - 1.0 / 3.0) < 1e-14);

    gen::Engine rng(32);
    const CVec b = gen::vector(rng, 4);
    CHECK((closed_form_weight(CMat::Identity(4, 4), b, 0.0) - b / b.squaredNorm()).norm() < 1e-14);
    CHECK_THROWS_AS(closed_form_weight(CMat::Identity(4, 4), CVec::Zero(4), 0.0), DegenerateSubspaceError);
}

TEST_CASE("property: closed-form weight meets the constraint and is scale free")
{
    gen::Engine rng(33);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto r = Eigen::Index(gen::index(rng, 1, 10));
        const CMat R = gen::hpd(rng, r);
        const CVec abar = gen::vector(rng, r);
        const CVec w = closed_form_weight(R, abar, 0.0);
        CHECK(std::abs(abar.dot(w) - 1.0) < 1e-12);
        const double c = gen::uniform(rng, 0.01, 100.0);
        CHECK((closed_form_weight(c * R, abar, 0.0) - w).norm() < 1e-10 * w.norm());
    }
}

TEST_CASE("closed-form alternation returns one constrained state per alternation")
{
    Scenario sc;
    sc.geometry = {16, 0.5};
    sc.doas_deg = default_doas(3);
    sc.num_snapshots = 400;
    const SnapshotBatch b = generate_snapshots(sc, 3);
    const CVec a = steering_vector(sc.geometry, 90.0);
    const JioState init = init_jio(16, 1, a, kDefaultSteps);

    const auto history = closed_form_alternation(init, b, {4, 1e-3});
    REQUIRE(history.size() == 4);
    for (const JioState &s : history)
    {
        CHECK(s.rank() == 1);
        CHECK(s.projection.allFinite());
        CHECK(std::abs(s.constraint_value() - 1.0) < 1e-10);
    }
}
