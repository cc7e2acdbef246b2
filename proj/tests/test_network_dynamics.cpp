/*
* Copyright (C) 2026 netepi contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "netepi/errors.h"
#include "netepi/network_dynamics.h"
#include "netepi/scalar_models.h"
#include "netepi/spectral.h"
#include "netepi/threshold.h"

#include "oracles.h"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using netepi::EpidemicState;
using netepi::ModelKind;
using netepi::ModelParams;

namespace
{

void check_box(const netepi::Trajectory& traj)
{
    for (const auto& st : traj.states) {
        for (const Eigen::VectorXd* v : {&st.s, &st.x, &st.r}) {
            REQUIRE(v->minCoeff() >= 0.0);
            REQUIRE(v->maxCoeff() <= 1.0);
        }
    }
}

Eigen::Matrix2d two_node()
{
    Eigen::Matrix2d a;
    a << 0, 2, 8, 0;
    return a;
}

} // namespace

TEST_CASE("rhs examples")
{
    netepi::Graph g(two_node());
    for (auto kind : {ModelKind::SI, ModelKind::SIS, ModelKind::SIR}) {
        auto d = netepi::rhs(EpidemicState::from_infected(Eigen::Vector2d::Zero()), {kind, 1.3, 0.7}, g);
        CHECK(d.s.isZero());
        CHECK(d.x.isZero());
        CHECK(d.r.isZero());
    }
    auto full = netepi::rhs(EpidemicState::from_infected(Eigen::Vector2d::Ones()), {ModelKind::SI, 2.0, 1.0}, g);
    CHECK(full.x.isZero());

    auto endemic =
        netepi::rhs(EpidemicState::from_infected(Eigen::Vector2d(5.0 / 8, 5.0 / 6)), {ModelKind::SIS, 1.0, 1.0}, g);
    CHECK(oracle::sup_norm(endemic.x) < 1e-15);

    CHECK_THROWS_AS(netepi::rhs(EpidemicState::from_infected(Eigen::Vector3d::Zero()), {ModelKind::SI, 1, 1}, g),
                    netepi::Error);
}

TEST_CASE("SI from the disease-free state stays there")
{
    netepi::Graph g(two_node());
    auto traj = netepi::integrate(EpidemicState::from_infected(Eigen::Vector2d::Zero()), {ModelKind::SI, 1.0, 1.0}, g,
                                  1.0);
    for (const auto& st : traj.states) {
        CHECK(st.x.isZero());
    }
    CHECK(traj.times.back() == 1.0);
}

TEST_CASE("trajectory bookkeeping: strictly increasing times, stride and final sample")
{
    netepi::Graph g(two_node());
    netepi::IntegrateOptions opts;
    opts.dt            = 0.03;
    opts.record_stride = 7;
    auto traj = netepi::integrate(EpidemicState::from_infected(Eigen::Vector2d(0.1, 0.1)), {ModelKind::SIS, 1, 1}, g,
                                  1.0, opts);
    // 34 steps, the last one shortened to land on t_end
    CHECK(traj.times.size() == 1 + 34 / 7 + 1);
    CHECK(traj.times.back() == 1.0);
    for (size_t k = 1; k < traj.times.size(); ++k) {
        CHECK(traj.times[k] > traj.times[k - 1]);
    }
    CHECK(netepi::default_step({ModelKind::SIR, 2.0, 0.25}) == doctest::Approx(5e-4));
    CHECK(netepi::default_step({ModelKind::SI, 4.0, 100.0}) == doctest::Approx(2.5e-4));
}

TEST_CASE("integrate rejects bad input and large excursions")
{
    netepi::Graph g(two_node());
    auto x0 = EpidemicState::from_infected(Eigen::Vector2d(0.5, 0.5));
    CHECK_THROWS_AS(netepi::integrate(x0, {ModelKind::SI, -1.0, 1.0}, g, 1.0), netepi::Error);
    CHECK_THROWS_AS(netepi::integrate(EpidemicState::from_infected(Eigen::Vector2d(1.5, 0.5)), {ModelKind::SI, 1, 1}, g,
                                      1.0),
                    netepi::Error);
    netepi::IntegrateOptions coarse;
    coarse.dt = 2.0;
    try {
        netepi::integrate(x0, {ModelKind::SIS, 5.0, 1.0}, g, 10.0, coarse);
        FAIL("expected the coarse step to fail");
    }
    catch (const netepi::Error& e) {
        CHECK((e.code() == netepi::ErrorCode::InvariantViolation || e.code() == netepi::ErrorCode::NotANumber));
    }
}

TEST_CASE("SI: box invariance, monotonicity, positivity and full contagion")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(1e-3, 0.2);
    for (int trial = 0; trial < 6; ++trial) {
        const auto n = static_cast<Eigen::Index>(2 + 3 * trial);
        netepi::Graph g(oracle::random_irreducible(n, rng, 0.15));
        Eigen::VectorXd x0 = Eigen::VectorXd::NullaryExpr(n, [&] { return unit(rng); });
        netepi::IntegrateOptions opts;
        opts.stop_at_steady_state = true;
        auto traj = netepi::integrate(EpidemicState::from_infected(x0), {ModelKind::SI, 1.0, 1.0}, g, 2000.0, opts);
        check_box(traj);
        for (size_t k = 1; k < traj.states.size(); ++k) {
            CHECK((traj.states[k].x.array() >= traj.states[k - 1].x.array()).all());
            CHECK(traj.states[k].x.minCoeff() > 0.0);
        }
        CHECK(traj.reached_steady_state);
        CHECK(oracle::sup_norm(traj.states.back().x - Eigen::VectorXd::Ones(n)) < 1e-3);
    }
}

TEST_CASE("SI on the symmetric 2-cycle reduces to the scalar model")
{
    Eigen::Matrix2d a;
    a << 0, 1, 1, 0;
    netepi::Graph g(a);
    for (double c : {0.01, 0.4}) {
        auto traj = netepi::integrate(EpidemicState::from_infected(Eigen::Vector2d(c, c)), {ModelKind::SI, 1.5, 1.0}, g,
                                      10.0);
        for (size_t k = 0; k < traj.states.size(); ++k) {
            const double ref = netepi::si_closed_form(c, 1.5, traj.times[k]);
            CHECK(std::abs(traj.states[k].x(0) - ref) < 1e-6);
            CHECK(std::abs(traj.states[k].x(1) - ref) < 1e-6);
        }
    }
}

TEST_CASE("SIR on the symmetric 2-cycle reaches the scalar final size")
{
    Eigen::Matrix2d a;
    a << 0, 1, 1, 0;
    netepi::Graph g(a);
    auto init = EpidemicState::from_infected_recovered(Eigen::Vector2d(0.05, 0.05), Eigen::Vector2d::Zero());
    netepi::IntegrateOptions opts;
    opts.record_stride = 1000;
    auto traj          = netepi::integrate(init, {ModelKind::SIR, 2.0, 0.25}, g, 150.0, opts);
    const double rinf  = netepi::sir_rinf(0.95, 0.0, 2.0, 0.25);
    CHECK(std::abs(traj.states.back().r(0) - rinf) < 1e-4);
    CHECK(std::abs(traj.states.back().r(1) - rinf) < 1e-4);
}

TEST_CASE("SIS below threshold obeys the exponential envelope")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        const auto n = static_cast<Eigen::Index>(3 + 4 * trial);
        netepi::Graph g(oracle::random_irreducible(n, rng));
        auto spec          = netepi::dominant_eig(g);
        const double beta  = 0.5;
        const double gamma = beta * spec.lambda_max / 0.8;
        Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(n, 0.05, 0.9);
        netepi::IntegrateOptions opts;
        opts.record_stride = 10;
        auto traj = netepi::integrate(EpidemicState::from_infected(x0), {ModelKind::SIS, beta, gamma}, g, 20.0, opts);
        check_box(traj);
        const double rate = beta * spec.lambda_max - gamma;
        const double m0   = spec.v_max.dot(x0);
        double prev       = m0;
        for (size_t k = 1; k < traj.states.size(); ++k) {
            const double m = spec.v_max.dot(traj.states[k].x);
            CHECK(m <= m0 * std::exp(rate * traj.times[k]) * (1 + 1e-12));
            CHECK(m < prev);
            prev = m;
        }
        CHECK(netepi::reproduction_number(g, beta, gamma).classification == netepi::Classification::Below);
    }
}

TEST_CASE("SIR: s decreasing, spectral radius decreasing, infection dies out, V conserved")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 4; ++trial) {
        const auto n = static_cast<Eigen::Index>(4 + 5 * trial);
        netepi::Graph g(oracle::random_irreducible(n, rng));
        const double lambda = netepi::dominant_eig(g).lambda_max;
        const double gamma  = 0.4;
        const double beta   = 2.5 * gamma / lambda;
        Eigen::VectorXd x0  = Eigen::VectorXd::Constant(n, 0.01);
        Eigen::VectorXd r0  = Eigen::VectorXd::Constant(n, 0.02);
        netepi::IntegrateOptions opts;
        opts.record_stride = 50;
        auto traj = netepi::integrate(EpidemicState::from_infected_recovered(x0, r0), {ModelKind::SIR, beta, gamma}, g,
                                      200.0, opts);
        check_box(traj);
        const Eigen::MatrixXd& a = g.adjacency();
        auto invariant           = [&](const EpidemicState& st) {
            return Eigen::VectorXd(st.s.array() * ((beta / gamma) * (a * st.r)).array().exp());
        };
        const Eigen::VectorXd v0 = invariant(traj.states.front());
        for (size_t k = 1; k < traj.states.size(); ++k) {
            const auto& st = traj.states[k];
            if (traj.states[k - 1].x.maxCoeff() > 1e-6) {
                CHECK((st.s.array() < traj.states[k - 1].s.array()).all());
            }
            CHECK((st.s.array() <= traj.states[k - 1].s.array()).all());
            const Eigen::VectorXd drift = ((invariant(st) - v0).array() / v0.array()).abs();
            CHECK(drift.maxCoeff() <= 1e-6);
        }
        auto series = netepi::effective_r_series(traj, g, beta, gamma);
        for (size_t k = 1; k < series.size(); ++k) {
            CHECK(series[k].r <= series[k - 1].r * (1 + 1e-11));
        }
        CHECK(traj.states.back().x.maxCoeff() < 1e-4);
    }
}

TEST_CASE("initial_growth_approx examples")
{
    netepi::Graph g(two_node());
    auto spec = netepi::dominant_eig(g);
    ModelParams si{ModelKind::SI, 1.0, 1.0};

    Eigen::VectorXd on_axis = 0.01 * spec.u_max;
    CHECK(oracle::sup_norm(netepi::initial_growth_approx(g, si, on_axis, 0.0) - on_axis) < 1e-15);

    Eigen::Vector2d x0(0.02, 0.001);
    Eigen::VectorXd expected = spec.v_max.dot(x0) / spec.v_max.dot(spec.u_max) * spec.u_max;
    CHECK(oracle::sup_norm(netepi::initial_growth_approx(g, si, x0, 0.0) - expected) < 1e-15);

    // compare with the matrix exponential of the linearised system; the remaining
    // error is the subdominant mode (eigenvalue -4) relative to the dominant one (+4)
    Eigen::VectorXd ones = 1e-4 * Eigen::Vector2d::Ones();
    Eigen::Matrix2d at   = two_node();
    Eigen::Vector2d exact = Eigen::Matrix2d(at.exp()) * ones;
    Eigen::VectorXd approx = netepi::initial_growth_approx(g, si, ones, 1.0);
    const double e8        = std::exp(8.0);
    CHECK(std::abs(approx(0) / exact(0) - 1 - (-1 / (3 * e8 + 1))) < 1e-10);
    CHECK(std::abs(approx(1) / exact(1) - 1 - (1 / (3 * e8 - 1))) < 1e-10);
    CHECK(std::abs(approx(0) / exact(0) - 1) < 2e-4);

    // SIS/SIR use the net rate beta lambda - gamma
    ModelParams sis{ModelKind::SIS, 1.0, 3.0};
    Eigen::VectorXd sis_approx = netepi::initial_growth_approx(g, sis, on_axis, 0.5);
    CHECK(oracle::sup_norm(sis_approx - std::exp(0.5) * on_axis) < 1e-14);
}

TEST_CASE("late-time decay rates")
{
    // window where every s_i lies in [floor, ceiling]
    auto window_of = [](const netepi::Trajectory& traj, double ceiling = 1e-3, double floor = 1e-9) {
        double lo = -1, hi = -1;
        for (size_t k = 0; k < traj.states.size(); ++k) {
            const Eigen::VectorXd& s = traj.states[k].s;
            if (lo < 0 && s.maxCoeff() < ceiling) {
                lo = traj.times[k];
            }
            if (s.minCoeff() > floor) {
                hi = traj.times[k];
            }
        }
        return std::make_pair(lo, hi);
    };

    SUBCASE("self-loop")
    {
        netepi::Graph g(Eigen::MatrixXd::Constant(1, 1, 3.0));
        auto traj  = netepi::integrate(EpidemicState::from_infected(Eigen::VectorXd::Constant(1, 0.05)),
                                       {ModelKind::SI, 0.5, 1.0}, g, 20.0);
        auto [lo, hi] = window_of(traj);
        auto slopes   = netepi::late_time_decay_rates(traj, lo, hi);
        CHECK(slopes(0) == doctest::Approx(-1.5).epsilon(1e-3));
    }
    SUBCASE("regular ring lattice")
    {
        netepi::Graph g(oracle::ring_lattice(12, 4));
        Eigen::VectorXd x0 = Eigen::VectorXd::Zero(12);
        x0(0)              = 0.1;
        auto traj = netepi::integrate(EpidemicState::from_infected(x0), {ModelKind::SI, 1.0, 1.0}, g, 25.0);
        auto [lo, hi] = window_of(traj);
        auto slopes   = netepi::late_time_decay_rates(traj, lo, hi);
        for (Eigen::Index i = 0; i < 12; ++i) {
            CHECK(std::abs(slopes(i) + 4.0) < 0.05 * 4.0);
            CHECK(std::abs(slopes(i) - slopes(0)) < 0.05 * 4.0);
        }
    }
    SUBCASE("star-like digraph orders slopes by degree")
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
        for (Eigen::Index i = 1; i < 5; ++i) {
            a(0, i) = 0.6;
            a(i, 0) = 0.5 + 0.25 * static_cast<double>(i);
        }
        netepi::Graph g(a);
        auto traj = netepi::integrate(EpidemicState::from_infected(Eigen::VectorXd::Constant(5, 0.05)),
                                      {ModelKind::SI, 1.0, 1.0}, g, 40.0);
        auto [lo, hi]           = window_of(traj, 1e-2, 1e-11);
        REQUIRE(lo < hi);
        auto slopes             = netepi::late_time_decay_rates(traj, lo, hi);
        Eigen::VectorXd degrees = netepi::degree_vector(g);
        for (Eigen::Index i = 0; i < 5; ++i) {
            for (Eigen::Index j = 0; j < 5; ++j) {
                if (degrees(i) > degrees(j)) {
                    CHECK(slopes(i) < slopes(j));
                }
            }
        }
        MESSAGE("star slopes: " << slopes.transpose() << " vs -d: " << -degrees.transpose());
    }
    SUBCASE("errors")
    {
        netepi::Graph g(Eigen::MatrixXd::Constant(1, 1, 1.0));
        auto early = netepi::integrate(EpidemicState::from_infected(Eigen::VectorXd::Constant(1, 0.01)),
                                       {ModelKind::SI, 1.0, 1.0}, g, 1.0);
        CHECK_THROWS_AS(netepi::late_time_decay_rates(early, 0.0, 1.0), netepi::Error);
        auto late = netepi::integrate(EpidemicState::from_infected(Eigen::VectorXd::Constant(1, 0.5)),
                                      {ModelKind::SI, 1.0, 1.0}, g, 10.0);
        CHECK_THROWS_AS(netepi::late_time_decay_rates(late, 5.0, 11.0), netepi::Error);
    }
}
