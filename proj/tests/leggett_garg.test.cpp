// Copyright 2026 The macroreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "macroreal/leggett_garg.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace macroreal;

namespace {

constexpr double kPi = std::numbers::pi;

SpinLength spin(double j) {
    return SpinLength::from_double(j);
}

DichotomicObservable sigma_z() {
    auto j = spin(0.5);
    return DichotomicObservable::from_involution(2.0 * build_spin_operators(j).Jz);
}

Operator north_rho(SpinLength j) {
    StateVector psi = StateVector::Zero(j.dim());
    psi(0) = 1;
    return psi * psi.adjoint();
}

// Two-level system with eigenstates u1, u2 and the balanced superposition.
struct TwoLevel {
    Evolution ev;
    Operator rho0;
    DichotomicObservable obs;
};

TwoLevel two_level(double dE) {
    Operator h = Operator::Zero(2, 2);
    h(1, 1) = dE;
    StateVector psi(2);
    psi << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Operator p = psi * psi.adjoint();
    return {Evolution(h), p, DichotomicObservable::from_projector(p)};
}

}  // namespace

TEST(dichotomic_observable, validity) {
    ASSERT_TRUE(sigma_z().is_valid());
    auto parity = DichotomicObservable::from_involution(parity_operator(spin(3)));
    ASSERT_TRUE(parity.is_valid());
    DichotomicObservable broken{Operator::Identity(2, 2), Operator::Identity(2, 2)};
    ASSERT_FALSE(broken.is_valid());
}

TEST(two_time_correlation, equal_times_give_one) {
    auto j = spin(2.5);
    auto ev = Evolution::rotation(j, 1.3);
    auto obs = DichotomicObservable::from_involution(parity_operator(j));
    std::vector<Operator> states{SpinState::maximally_mixed(j).rho, north_rho(j),
                                 SpinState::pure(j, coherent_state(j, {1.0, 0.5})).rho};
    for (const auto &rho : states) {
        ASSERT_NEAR(two_time_correlation(rho, ev, obs, 0.4, 0.4), 1.0, 1e-12);
    }
}

TEST(two_time_correlation, spin_half_precession) {
    auto j = spin(0.5);
    auto ev = Evolution::rotation(j, 1.7);
    for (double dt : {0.0, 0.3, 1.0, 2.5, 4.0}) {
        ASSERT_NEAR(two_time_correlation(north_rho(j), ev, sigma_z(), 0.2, 0.2 + dt), std::cos(1.7 * dt), 1e-12);
    }
    ASSERT_THROW(two_time_correlation(north_rho(j), ev, sigma_z(), 1.0, 0.5), std::invalid_argument);
}

TEST(two_time_correlation, parity_matches_analytic) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.01, 3.1);
    for (double jv : {0.5, 1.0, 5.0, 20.0}) {
        auto j = spin(jv);
        auto ev = Evolution::rotation(j, 1.0);
        auto obs = DichotomicObservable::from_involution(parity_operator(j));
        Operator rho = SpinState::maximally_mixed(j).rho;
        for (int trial = 0; trial < 50; ++trial) {
            double x = u(rng);
            ASSERT_NEAR(two_time_correlation(rho, ev, obs, 0.0, x), analytic_parity_correlation(j, x), 1e-9)
                << jv << " " << x;
        }
    }
    auto j = spin(10);
    auto ev = Evolution::rotation(j, 1.0);
    auto obs = DichotomicObservable::from_involution(parity_operator(j));
    double x = 1.054 / 21;
    ASSERT_NEAR(two_time_correlation(SpinState::maximally_mixed(j).rho, ev, obs, 0.0, x),
                analytic_parity_correlation(j, x), 1e-10);
}

TEST(analytic_parity_correlation, limits) {
    ASSERT_NEAR(analytic_parity_correlation(spin(7), 1e-13), 1.0, 1e-14);
    for (double x : {0.2, 1.0, 2.9}) ASSERT_NEAR(analytic_parity_correlation(spin(0.5), x), std::cos(x), 1e-14);
}

TEST(sampled_two_time_correlation, converges_to_exact) {
    auto j = spin(0.5);
    auto ev = Evolution::rotation(j, 1.0);
    double exact = std::cos(0.9);
    double est = sampled_two_time_correlation(north_rho(j), ev, sigma_z(), 0.0, 0.9, 200000, 21);
    ASSERT_NEAR(est, exact, 5 * std::sqrt((1 - exact * exact) / 200000));
    ASSERT_EQ(est, sampled_two_time_correlation(north_rho(j), ev, sigma_z(), 0.0, 0.9, 200000, 21));
}

TEST(lg_chsh, spin_half_maximum) {
    auto j = spin(0.5);
    auto ev = Evolution::rotation(j, 2.0);
    double dt = kPi / (4 * 2.0);
    auto r = lg_chsh([&](double a, double b) { return two_time_correlation(north_rho(j), ev, sigma_z(), a, b); },
                     {0, dt, 2 * dt, 3 * dt});
    ASSERT_NEAR(r.K, 2 * std::sqrt(2.0), 1e-9);
    ASSERT_TRUE(r.violated);
    ASSERT_EQ(r.bound, 2.0);
    ASSERT_NEAR(r.K, r.correlations[0] + r.correlations[1] + r.correlations[2] - r.correlations[3], 1e-12);
    ASSERT_NEAR(analytic_k_spin_half(kPi / 4), 2 * std::sqrt(2.0), 1e-12);
}

TEST(lg_chsh, trivial_correlations) {
    auto r = lg_chsh([](double, double) { return 1.0; }, {0, 1, 2, 3});
    ASSERT_EQ(r.K, 2.0);
    ASSERT_FALSE(r.violated);
    ASSERT_THROW(lg_chsh([](double, double) { return 1.0; }, {0, 2, 1, 3}), std::invalid_argument);
}

TEST(lg_chsh, classical_rotor_never_violates) {
    for (double dt = 0.005; dt < 6.4; dt += 0.01) {
        for (double phase : {0.0, 0.4, 1.3}) {
            auto r = lg_chsh([&](double a, double b) { return classical_rotor_correlation(1.0, a, b, phase); },
                             {0, dt, 2 * dt, 3 * dt});
            ASSERT_LE(r.K, 2 + 1e-12) << dt;
        }
        auto r = lg_chsh([](double a, double b) { return classical_rotor_ensemble_correlation(1.0, a, b); },
                         {0, dt, 2 * dt, 3 * dt});
        ASSERT_LE(r.K, 2 + 1e-12) << dt;
    }
    ASSERT_EQ(classical_rotor_correlation(1.0, 0.7, 0.7), 1.0);
}

TEST(classical_rotor, ensemble_matches_phase_average) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    const int samples = 1000000;
    for (double dt : {0.4, 1.9, 3.0}) {
        double s = 0;
        for (int i = 0; i < samples; ++i) s += classical_rotor_correlation(1.0, 0.0, dt, u(rng));
        double mean = s / samples;
        double exact = classical_rotor_ensemble_correlation(1.0, 0.0, dt);
        ASSERT_NEAR(mean, exact, 3 * std::sqrt((1 - exact * exact) / samples) + 1e-12) << dt;
    }
}

TEST(analytic_k_parity, landmarks) {
    ASSERT_NEAR(analytic_k_parity(1.054), 2.481, 1e-3);
    ASSERT_NEAR(analytic_k_parity(1.656), 2.0, 2e-3);
    ASSERT_NEAR(analytic_k_parity(1e-7), 2.0, 1e-12);
    auto best = maximize_k_parity();
    ASSERT_NEAR(best.x, 1.054, 0.005);
    ASSERT_NEAR(best.value, 2.481, 0.005);
    ASSERT_NEAR(k_parity_crossing(best.x), 1.656, 0.01);
}

TEST(analytic_k_parity, large_spin_matrix_path) {
    for (double jv : {10.0, 50.0, 200.0}) {
        auto j = spin(jv);
        auto ev = Evolution::rotation(j, 1.0);
        auto obs = DichotomicObservable::from_involution(parity_operator(j));
        Operator rho = SpinState::maximally_mixed(j).rho;
        double dt = 1.054 / j.dim();
        auto r = lg_chsh([&](double a, double b) { return two_time_correlation(rho, ev, obs, a, b); },
                         {0, dt, 2 * dt, 3 * dt});
        ASSERT_NEAR(r.K, 2.481, 0.02) << jv;
    }
}

TEST(lg_wigner, two_level_reduction) {
    ASSERT_NEAR(lg_wigner_two_level(kPi / 3), 1.5, 1e-12);
    ASSERT_NEAR(lg_wigner_two_level(kPi / 2), 1.0, 1e-12);
    ASSERT_NEAR(lg_wigner_survival(0.75, 0.25, 0.0), 1.5, 1e-12);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        double dE = 1.3;
        double x = u(rng);
        auto sys = two_level(dE);
        double dt = x / dE;
        auto r = lg_wigner([&](double a, double b) { return two_time_correlation(sys.rho0, sys.ev, sys.obs, a, b); },
                           {0, dt, 2 * dt});
        ASSERT_NEAR(r.K, lg_wigner_two_level(x), 1e-10);
        double p1 = std::pow(std::cos(x / 2), 2);
        double p2 = std::pow(std::cos(x), 2);
        double gamma = std::cos(x) < 0 ? kPi : 0.0;
        ASSERT_NEAR(lg_wigner_survival(p1, p2, gamma), lg_wigner_two_level(x), 1e-10);
    }
    ASSERT_THROW(lg_wigner_survival(1.2, 0.5, 0), std::invalid_argument);
}

TEST(macrorealism, enumerated_bound) {
    ASSERT_EQ(macrorealistic_k_max(), 2.0);
}
