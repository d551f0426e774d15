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
#include <stdexcept>

#include "macroreal/special.hpp"

namespace macroreal {

namespace {

constexpr double kPi = std::numbers::pi;

double remainder_pi(double x) {
    return std::remainder(x, 2.0 * kPi);
}

double sign_of(double x) {
    return (x > 0) - (x < 0);
}

}  // namespace

DichotomicObservable DichotomicObservable::from_involution(const Operator &a) {
    Operator id = Operator::Identity(a.rows(), a.cols());
    return {(id + a) / 2.0, (id - a) / 2.0};
}

DichotomicObservable DichotomicObservable::from_projector(const Operator &p) {
    return {p, Operator::Identity(p.rows(), p.cols()) - p};
}

bool DichotomicObservable::is_valid(double tol) const {
    Operator id = Operator::Identity(plus.rows(), plus.cols());
    return (plus * plus - plus).cwiseAbs().maxCoeff() <= tol && (minus * minus - minus).cwiseAbs().maxCoeff() <= tol &&
           (plus * minus).cwiseAbs().maxCoeff() <= tol && (plus + minus - id).cwiseAbs().maxCoeff() <= tol;
}

double two_time_correlation(
    const Operator &rho0, const Evolution &evolution, const DichotomicObservable &obs, double ti, double tj) {
    if (tj < ti) {
        throw std::invalid_argument("two_time_correlation requires ti <= tj");
    }
    Operator ui = evolution.at(ti);
    Operator rho_i = ui * rho0 * ui.adjoint();
    // Unnormalized branches weighted by the outcome sign at ti.
    Operator signed_branches = obs.plus * rho_i * obs.plus - obs.minus * rho_i * obs.minus;
    Operator u = evolution.at(tj - ti);
    Operator evolved = u * signed_branches * u.adjoint();
    Operator a = obs.plus - obs.minus;
    return (a * evolved).trace().real();
}

double sampled_two_time_correlation(
    const Operator &rho0, const Evolution &evolution, const DichotomicObservable &obs, double ti, double tj,
    int64_t shots, uint64_t seed) {
    if (shots <= 0) {
        throw std::invalid_argument("shots must be positive");
    }
    Operator ui = evolution.at(ti);
    Operator rho_i = ui * rho0 * ui.adjoint();
    Operator u = evolution.at(tj - ti);
    double p_plus = (obs.plus * rho_i).trace().real();
    double q_plus[2] = {0.0, 0.0};
    const Operator *proj[2] = {&obs.plus, &obs.minus};
    double p_branch[2] = {p_plus, 1.0 - p_plus};
    for (int k = 0; k < 2; k++) {
        if (p_branch[k] <= 0) {
            continue;
        }
        Operator r = (*proj[k]) * rho_i * (*proj[k]) / p_branch[k];
        Operator e = u * r * u.adjoint();
        q_plus[k] = (obs.plus * e).trace().real();
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    int64_t sum = 0;
    for (int64_t s = 0; s < shots; s++) {
        int k = uniform(rng) < p_plus ? 0 : 1;
        int l = uniform(rng) < q_plus[k] ? 0 : 1;
        sum += (k == l) ? 1 : -1;
    }
    return static_cast<double>(sum) / static_cast<double>(shots);
}

double analytic_parity_correlation(SpinLength j, double omega_dt) {
    return sin_ratio(static_cast<double>(j.dim()), omega_dt);
}

LGResult lg_chsh(const CorrelationFn &correlation, const std::array<double, 4> &t) {
    for (int i = 0; i < 3; i++) {
        if (!(t[i] < t[i + 1])) {
            throw std::invalid_argument("lg_chsh requires t1 < t2 < t3 < t4");
        }
    }
    LGResult r;
    r.correlations = {correlation(t[0], t[1]), correlation(t[1], t[2]), correlation(t[2], t[3]), correlation(t[0], t[3])};
    r.K = r.correlations[0] + r.correlations[1] + r.correlations[2] - r.correlations[3];
    r.bound = 2.0;
    r.violated = r.K > r.bound;
    return r;
}

LGResult lg_wigner(const CorrelationFn &correlation, const std::array<double, 3> &t) {
    for (int i = 0; i < 2; i++) {
        if (!(t[i] < t[i + 1])) {
            throw std::invalid_argument("lg_wigner requires t1 < t2 < t3");
        }
    }
    LGResult r;
    r.correlations = {correlation(t[0], t[1]), correlation(t[1], t[2]), correlation(t[0], t[2])};
    r.K = r.correlations[0] + r.correlations[1] - r.correlations[2];
    r.bound = 1.0;
    r.violated = r.K > r.bound;
    return r;
}

double analytic_k_parity(double x) {
    return 3.0 * sinc(x) - sinc(3.0 * x);
}

double analytic_k_spin_half(double omega_dt) {
    return 3.0 * std::cos(omega_dt) - std::cos(3.0 * omega_dt);
}

Extremum maximize_k_parity(double x_max) {
    constexpr int kScan = 1000;
    double best_x = x_max / kScan;
    double best = analytic_k_parity(best_x);
    for (int i = 2; i <= kScan; i++) {
        double x = x_max * i / kScan;
        double v = analytic_k_parity(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double step = x_max / kScan;
    double a = std::max(best_x - step, 1e-12);
    double b = best_x + step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    while (b - a > 1e-12) {
        if (analytic_k_parity(c) > analytic_k_parity(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    double x = 0.5 * (a + b);
    return {x, analytic_k_parity(x)};
}

double k_parity_crossing(double x_peak, double x_max) {
    double a = x_peak;
    double b = x_max;
    if (analytic_k_parity(a) <= 2.0 || analytic_k_parity(b) >= 2.0) {
        throw std::invalid_argument("k_parity_crossing: interval does not bracket K = 2");
    }
    while (b - a > 1e-13) {
        double m = 0.5 * (a + b);
        if (analytic_k_parity(m) > 2.0) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double lg_wigner_survival(double p1, double p2, double gamma) {
    if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1) {
        throw std::invalid_argument("survival probabilities must lie in [0, 1]");
    }
    return 4.0 * p1 * std::sqrt(p2) * std::cos(gamma) - 4.0 * p2 + 1.0;
}

double lg_wigner_two_level(double dE_dt) {
    return 2.0 * std::cos(dE_dt) - std::cos(2.0 * dE_dt);
}

double classical_rotor_correlation(double omega, double ti, double tj, double phase) {
    return sign_of(std::cos(omega * ti + phase)) * sign_of(std::cos(omega * tj + phase));
}

double classical_rotor_ensemble_correlation(double omega, double ti, double tj) {
    double r = remainder_pi(omega * (tj - ti));
    return 1.0 - 2.0 * std::abs(r) / kPi;
}

double macrorealistic_k_max() {
    double best = -1e300;
    for (int bits = 0; bits < 16; bits++) {
        double q[4];
        for (int i = 0; i < 4; i++) {
            q[i] = ((bits >> i) & 1) ? 1.0 : -1.0;
        }
        best = std::max(best, q[0] * q[1] + q[1] * q[2] + q[2] * q[3] - q[0] * q[3]);
    }
    return best;
}

}  // namespace macroreal
