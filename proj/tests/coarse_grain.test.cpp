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


#include "macroreal/coarse_grain.hpp"

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

SpinState coherent(SpinLength j, Direction d) {
    return SpinState::pure(j, coherent_state(j, d));
}

SpinState random_mixed(SpinLength j, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Operator a(j.dim(), j.dim());
    for (int r = 0; r < j.dim(); ++r) {
        for (int c = 0; c < j.dim(); ++c) a(r, c) = {g(rng), g(rng)};
    }
    Operator rho = a * a.adjoint();
    rho /= rho.trace().real();
    return SpinState::mixed(j, rho);
}

// Theta at the middle of the top slot band.
double top_band_mid(const SlotPartition &part) {
    return 0.5 * (part.bands[0].first + part.bands[0].second);
}

}  // namespace

TEST(make_partition, hemispheres) {
    auto part = make_partition(spin(100), 1, PartitionMode::hemispheres);
    ASSERT_EQ(part.size(), 2);
    ASSERT_NEAR(part.bands[0].second, kPi / 2, 1e-15);
    ASSERT_NEAR(part.bands[1].first, kPi / 2, 1e-15);
    ASSERT_EQ(part.slots[0].size(), 101u);  // m = 0 sits in the north slot
    ASSERT_EQ(part.slots[1].size(), 100u);
    ASSERT_EQ(part.band_of(0.3), 0);
    ASSERT_EQ(part.band_of(2.0), 1);
}

TEST(make_partition, slot_counts) {
    ASSERT_EQ(make_partition(spin(100), 201).size(), 1);
    auto p20 = make_partition(spin(100), 20);
    ASSERT_EQ(p20.size(), 11);
    ASSERT_TRUE(is_coarse(p20));
    ASSERT_FALSE(is_coarse(make_partition(spin(100), 10)));
    ASSERT_THROW(make_partition(spin(100), 0.5), std::invalid_argument);
    ASSERT_THROW(make_partition(spin(100), 202), std::invalid_argument);
    for (double dm : {1.0, 3.0, 7.5, 40.0}) {
        auto part = make_partition(spin(25.5), dm);
        ASSERT_EQ(part.size(), static_cast<int>(std::ceil(52 / dm)));
        size_t total = 0;
        for (const auto &s : part.slots) total += s.size();
        ASSERT_EQ(total, 52u);
        ASSERT_NEAR(part.bands.front().first, 0.0, 1e-15);
        ASSERT_NEAR(part.bands.back().second, kPi, 1e-15);
    }
}

TEST(vn_slot_projector, spin_half_and_idempotence) {
    auto part = make_partition(spin(0.5), 1, PartitionMode::hemispheres);
    Operator p0 = vn_slot_projector(part, 0);
    Operator p1 = vn_slot_projector(part, 1);
    ASSERT_EQ(p0(0, 0), 1.0);
    ASSERT_EQ(p0(1, 1), 0.0);
    ASSERT_EQ(p1(1, 1), 1.0);
    auto coarse = make_partition(spin(12), 5);
    Operator sum = Operator::Zero(25, 25);
    for (int s = 0; s < coarse.size(); ++s) {
        Operator p = vn_slot_projector(coarse, s);
        ASSERT_EQ(p * p, p);
        sum += p;
    }
    ASSERT_EQ(sum, Operator::Identity(25, 25));
    ASSERT_THROW(vn_slot_projector(coarse, coarse.size()), std::out_of_range);
}

TEST(vn_slot_projector, coherent_state_inside_slot) {
    auto j = spin(100);
    auto part = make_partition(j, 40);
    StateVector psi = coherent_state(j, {top_band_mid(part), 0.8});
    ASSERT_LT((vn_slot_projector(part, 0) * psi - psi).norm(), 1e-6);
}

TEST(povm_coefficient, completeness_and_symmetry) {
    auto j = spin(100);
    ASSERT_NEAR(povm_coefficient(j, {0, kPi}, 37), 1.0, 1e-12);
    auto hemi = make_partition(j, 1, PartitionMode::hemispheres);
    ASSERT_NEAR(povm_coefficient(j, hemi.bands[0], 0), 0.5, 1e-12);
    ASSERT_NEAR(povm_coefficient(j, hemi.bands[1], 0), 0.5, 1e-12);
    ASSERT_NEAR(povm_coefficient(j, hemi.bands[0], 100), 1.0, 1e-12);
    ASSERT_THROW(povm_coefficient(j, hemi.bands[0], 101), std::invalid_argument);
}

TEST(povm_coefficient, matches_direct_quadrature) {
    auto j = spin(100);
    auto hemi = make_partition(j, 1, PartitionMode::hemispheres);
    auto gl = gauss_legendre(400);
    for (int i : {0, 60, 95, 100, 105, 150}) {
        double k = j.m_at(i);
        double direct = 0;
        for (size_t n = 0; n < gl.nodes.size(); ++n) {
            double c = 0.5 * (gl.nodes[n] + 1);  // cos(theta) over [0, 1]
            double theta = std::acos(c);
            direct += 0.5 * gl.weights[n] * coherent_probabilities(j, theta)(i);
        }
        direct *= j.dim() / 2.0;
        ASSERT_NEAR(povm_coefficient(j, hemi.bands[0], k), direct, 1e-12) << k;
    }
}

TEST(build_povm, completeness_psd_and_kraus) {
    for (double jv : {0.5, 3.0, 25.0, 100.0, 400.0}) {
        auto j = spin(jv);
        double root = std::sqrt(jv);
        for (double dm : {2.0, std::ceil(root), std::ceil(4 * root)}) {
            if (dm > j.dim()) continue;
            auto povm = build_povm(make_partition(j, dm));
            RealVector total = RealVector::Zero(j.dim());
            for (int s = 0; s < povm.size(); ++s) {
                ASSERT_GE(povm.elements[s].minCoeff(), 0.0);
                ASSERT_LT((povm.kraus[s].cwiseAbs2() - povm.elements[s]).cwiseAbs().maxCoeff(), 1e-10);
                total += povm.elements[s];
            }
            ASSERT_LT((total.array() - 1).abs().maxCoeff(), 1e-10) << jv << " " << dm;
        }
    }
}

TEST(build_povm, hemisphere_step_width) {
    auto j = spin(100);
    auto povm = build_povm(make_partition(j, 1, PartitionMode::hemispheres));
    const RealVector &north = povm.elements[0];
    double k90 = 0;
    double k10 = 0;
    for (int i = 0; i < j.dim(); ++i) {
        if (north(i) >= 0.9) k90 = j.m_at(i);
        if (north(i) >= 0.1) k10 = j.m_at(i);
    }
    double width = k90 - k10;
    ASSERT_GE(width, 10);
    ASSERT_LE(width, 30);
}

TEST(slot_probabilities, simple_cases) {
    auto j = spin(100);
    auto hemi = make_partition(j, 1, PartitionMode::hemispheres);
    auto povm = build_povm(hemi);
    RealVector mm = slot_probabilities(SpinState::maximally_mixed(j), povm);
    ASSERT_NEAR(mm(0), 0.5, 1e-12);
    RealVector eq = slot_probabilities(coherent(j, {kPi / 2, 0}), povm);
    ASSERT_NEAR(eq(0), 0.5, 1e-10);
    ASSERT_NEAR(eq(1), 0.5, 1e-10);
    RealVector north = slot_probabilities(coherent(j, {0, 0}), povm);
    ASSERT_NEAR(north(0), 1.0, 1e-10);
}

TEST(slot_probabilities, trace_path_equals_q_path) {
    for (double jv : {2.0, 10.5, 60.0}) {
        auto j = spin(jv);
        auto part = make_partition(j, std::max(1.0, std::round(2 * std::sqrt(jv))));
        auto povm = build_povm(part);
        std::vector<SpinState> states{random_mixed(j, 5), coherent(j, {1.2, 0.4}), SpinState::maximally_mixed(j)};
        for (const auto &st : states) {
            RealVector a = slot_probabilities(st, povm);
            RealVector b = slot_probabilities_from_q(st, part);
            ASSERT_LT((a - b).cwiseAbs().maxCoeff(), 1e-8) << jv;
            ASSERT_NEAR(a.sum(), 1.0, 1e-12);
        }
    }
}

TEST(reduce_state, inside_slot_and_trivial) {
    auto j = spin(100);
    auto part = make_partition(j, 40);
    auto povm = build_povm(part);
    auto st = coherent(j, {top_band_mid(part), 2.0});
    auto reduced = reduce_state(st, povm, 0);
    ASSERT_NEAR(reduced.rho.trace().real(), 1.0, 1e-12);
    ASSERT_GT(fidelity(*reduced.psi, *st.psi), 1 - 1e-6);
    ASSERT_THROW(reduce_state(coherent(j, {0, 0}), povm, povm.size() - 1), std::domain_error);

    auto one = build_povm(make_partition(spin(4), 9));
    auto small = random_mixed(spin(4), 1);
    ASSERT_LT((reduce_state(small, one, 0).rho - small.rho).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(mixture_condition, diagonal_state_is_exact) {
    auto j = spin(30);
    Operator rho = Operator::Zero(j.dim(), j.dim());
    for (int i = 0; i < j.dim(); ++i) rho(i, i) = (i + 1.0);
    rho /= rho.trace().real();
    auto povm = build_povm(make_partition(j, 7));
    ASSERT_NEAR(mixture_condition_gap(SpinState::mixed(j, rho), povm), 0.0, 1e-9);
}

TEST(mixture_condition, equatorial_state_overlap) {
    for (double jv : {25.0, 100.0}) {
        auto j = spin(jv);
        auto povm = build_povm(make_partition(j, 1, PartitionMode::hemispheres));
        double overlap = 1 - mixture_condition_gap(coherent(j, {kPi / 2, 0}), povm);
        ASSERT_NEAR(overlap, 0.997, jv == 100.0 ? 0.001 : 0.002) << jv;
    }
}

TEST(noninvasiveness_gap, rotation_is_gentle) {
    auto j = spin(100);
    auto povm = build_povm(make_partition(j, 1, PartitionMode::hemispheres));
    auto ev = Evolution::rotation(j, 1.0);
    auto start = coherent(j, {0, 0});
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    for (int trial = 0; trial < 5; ++trial) {
        double a = u(rng);
        double b = u(rng);
        ASSERT_LT(noninvasiveness_gap(start, ev, povm, std::min(a, b), std::max(a, b)), 0.01);
    }
    ASSERT_NEAR(noninvasiveness_gap(start, ev, povm, 1.0, 1.0), 1 - mixture_overlap(
        SpinState::pure(j, rotation_evolution(j, 1.0) * *start.psi), povm, SphereGrid::for_spin(j)), 1e-12);
}

TEST(sufficient_condition, rotation_border_fraction) {
    auto j = spin(100);
    auto povm = build_povm(make_partition(j, 40));
    auto ev = Evolution::rotation(j, 1.0);
    std::vector<Direction> dirs;
    for (int i = 0; i < 40; ++i) dirs.push_back({std::acos(1 - 2 * (i + 0.5) / 40), 0.3 * i});
    std::vector<double> times{0.0, 0.7, 1.9};
    auto rep = sufficient_condition_check(ev, povm, dirs, times);
    // sigma / delta_m = 0.18; the 0.1 leakage cut sits about 1.3 combined
    // widths into each side of a border.
    double estimate = std::sqrt(50.0) / 40;
    ASSERT_GT(rep.border_fraction, estimate);
    ASSERT_LT(rep.border_fraction, 4 * estimate);
    ASSERT_GT(rep.max_leakage, 0.1);
    auto mid = sufficient_condition_check(ev, povm, {{0.462, 0}}, {0.0});
    ASSERT_LT(mid.max_leakage, 1e-3);
}

TEST(sufficient_condition, border_fraction_scaling) {
    auto fraction = [](double jv, double dm) {
        auto j = spin(jv);
        auto povm = build_povm(make_partition(j, dm));
        auto ev = Evolution::rotation(j, 0.0);
        std::vector<Direction> dirs;
        for (int i = 0; i < 400; ++i) dirs.push_back({std::acos(1 - 2 * (i + 0.5) / 400), 0.0});
        return sufficient_condition_check(ev, povm, dirs, {0.0}).border_fraction;
    };
    // Fraction ~ sqrt(j) / delta_m: fixed along delta_m = c sqrt(j), halved
    // when delta_m doubles.
    double a = fraction(100, 40);
    double b = fraction(400, 80);
    double c = fraction(400, 160);
    ASSERT_GT(a / b, 0.8);
    ASSERT_LT(a / b, 1.25);
    ASSERT_GT(b / c, 1.5);
    ASSERT_LT(b / c, 2.5);
}

TEST(char_fn, zero_frequency_and_cancellation) {
    auto j = spin(40);
    ASSERT_NEAR(quantum_char_fn(j, 0, 0, 1.0), 1.0, 1e-14);
    ASSERT_NEAR(classical_char_fn(j, 0, 0, 1.0), 1.0, 1e-14);
    ASSERT_NEAR(classical_char_fn(j, 0.3, 0.3, kPi), 1.0, 1e-14);
}

TEST(char_fn, closed_form_matches_joint_probabilities) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (double jv : {0.5, 2.0, 3.5}) {
        auto j = spin(jv);
        for (int trial = 0; trial < 20; ++trial) {
            double xi = 3 * u(rng);
            double eta = 3 * u(rng);
            double theta = kPi * u(rng);
            ASSERT_NEAR(quantum_char_fn(j, xi, eta, theta), brute_force_char_fn(j, xi, eta, theta), 1e-10);
        }
    }
}

TEST(char_fn, classical_limit_inside_cutoff) {
    auto j = spin(10000);
    double x = 0.01 / std::sqrt(j.value());
    for (double theta : {0.3, 1.0, 2.0}) {
        ASSERT_LT(std::abs(quantum_char_fn(j, x, x, theta) - classical_char_fn(j, x, x, theta)), 1e-4);
    }
}

TEST(char_fn, classical_limit_improves_with_j) {
    double previous = 1e300;
    for (double jv : {100.0, 1000.0, 10000.0}) {
        auto j = spin(jv);
        double cap = 0.1 / std::sqrt(jv);
        double worst = 0;
        for (int a = 1; a <= 10; ++a) {
            for (int b = 1; b <= 10; ++b) {
                for (double theta = 0; theta <= kPi; theta += kPi / 24) {
                    double xi = cap * a / 10;
                    double eta = cap * b / 10;
                    worst = std::max(worst, std::abs(quantum_char_fn(j, xi, eta, theta) -
                                                     classical_char_fn(j, xi, eta, theta)));
                }
            }
        }
        ASSERT_LT(worst, previous) << jv;
        previous = worst;
    }
}

TEST(char_fn, monte_carlo_classical_ensemble) {
    auto j = spin(50);
    for (double theta : {0.5, 2.0}) {
        double x = 0.02;
        auto est = classical_char_fn_monte_carlo(j, x, 1.5 * x, theta, 1000000, 13);
        ASSERT_NEAR(est.mean, classical_char_fn(j, x, 1.5 * x, theta), 3 * est.standard_error) << theta;
    }
}
