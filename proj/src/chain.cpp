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

#include "macroreal/chain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "macroreal/special.hpp"

namespace macroreal {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("coupling alpha must lie in (0, 1)");
    }
}

TwoPoint two_point_infinite(double alpha, int l) {
    double root = std::sqrt(1.0 - alpha * alpha);
    double z = alpha / (1.0 + root);
    double z2 = z * z;
    double mu = 1.0 / std::sqrt(1.0 + z2);
    double zl = std::pow(z, l);
    double g = zl / (2.0 * mu) * binomial_real(l - 0.5, l) * hypergeom_2f1(0.5, l + 0.5, l + 1.0, z2);
    double h = 0.5 * mu * zl * binomial_real(l - 1.5, l) * hypergeom_2f1(-0.5, l - 0.5, l + 1.0, z2);
    return {g, h};
}

TwoPoint two_point_finite(double alpha, int N, int l) {
    double g = 0.0;
    double h = 0.0;
    for (int k = 0; k < N; k++) {
        double theta = 2.0 * kPi * k / N;
        double nu = std::sqrt(1.0 - alpha * std::cos(theta));
        double c = std::cos(l * theta);
        g += c / nu;
        h += c * nu;
    }
    return {g / (2.0 * N), h / (2.0 * N)};
}

std::vector<int> block_sites(const BlockSpec &spec, bool second) {
    std::vector<int> out;
    int pos = 0;
    int left = spec.n;
    while (left > 0) {
        int w = std::min(spec.s, left);
        if (!second) {
            for (int i = 0; i < w; i++) {
                out.push_back(pos + i);
            }
        }
        pos += w + spec.d;
        if (second) {
            for (int i = 0; i < w; i++) {
                out.push_back(pos + i);
            }
        }
        pos += w + spec.d;
        left -= w;
    }
    return out;
}

double pair_sum(const std::vector<int> &x, const std::vector<int> &y, const std::vector<double> &table) {
    double total = 0.0;
    for (int a : x) {
        for (int b : y) {
            total += table.at(std::abs(a - b));
        }
    }
    return total;
}

// Integral over (0, upper) of envelope(k) sin^2(kL/2) cos(kr) with
// 16-point Gauss-Legendre panels resolving both the oscillation and the
// low-k scale of the envelope.
double oscillatory_integral(
    const std::function<double(double)> &envelope, double L, double r, double low_scale, double upper) {
    static const GaussLegendre gl = gauss_legendre(16);
    double h_osc = kPi / (2.0 * (r + L));
    double total = 0.0;
    double k = 0.0;
    while (k < upper) {
        double h = std::min(h_osc, std::max(low_scale, k) / 4.0);
        double b = std::min(k + h, upper);
        double half = 0.5 * (b - k);
        double mid = 0.5 * (b + k);
        double panel = 0.0;
        for (size_t n = 0; n < gl.nodes.size(); n++) {
            double x = mid + half * gl.nodes[n];
            double s = std::sin(0.5 * x * L);
            panel += gl.weights[n] * envelope(x) * s * s * std::cos(x * r);
        }
        total += half * panel;
        k = b;
    }
    return total;
}

// Weight of the non-oscillating part of sin^2(kL/2) cos(kr).
double constant_component(double L, double r) {
    if (r == 0.0) {
        return 0.5;
    }
    if (r == L) {
        return -0.25;
    }
    return 0.0;
}

double infinite_upper(double mass, double L, double r) {
    double smallest = L;
    for (double a : {r, std::abs(r - L), r + L}) {
        if (a > 1e-12) {
            smallest = std::min(smallest, a);
        }
    }
    double k = std::cbrt(1e13 / smallest);
    return std::max({k, 50.0 * mass, 200.0 / L});
}

void check_field_args(double mass, double L, double r) {
    if (!(mass > 0.0)) {
        throw std::domain_error("field propagator: mass 0 is infrared divergent");
    }
    if (!(L >= 1e-6)) {
        throw std::domain_error("field propagator: averaging length L must be >= 1e-6");
    }
    if (!(r >= 0.0)) {
        throw std::invalid_argument("field propagator: distance must be nonnegative");
    }
}

}  // namespace

TwoPoint two_point(const ChainParams &params, int l) {
    check_alpha(params.alpha);
    if (l < 0) {
        throw std::invalid_argument("two_point: l must be nonnegative");
    }
    if (params.N) {
        if (*params.N < 1 || 2 * l >= *params.N) {
            throw std::invalid_argument("two_point: need l < N/2");
        }
        return two_point_finite(params.alpha, *params.N, l);
    }
    return two_point_infinite(params.alpha, l);
}

TwoPointTable TwoPointTable::compute(const ChainParams &params, int l_max) {
    TwoPointTable t;
    for (int l = 0; l <= l_max; l++) {
        TwoPoint v = two_point(params, l);
        t.g.push_back(v.g);
        t.h.push_back(v.h);
    }
    return t;
}

std::vector<int> BlockSpec::sites_a() const {
    return block_sites(*this, false);
}

std::vector<int> BlockSpec::sites_b() const {
    return block_sites(*this, true);
}

int BlockSpec::span() const {
    auto b = sites_b();
    return b.empty() ? 0 : b.back() + 1;
}

CovarianceBlock block_covariance(const TwoPointTable &table, const BlockSpec &spec, CollectiveNorm norm) {
    if (spec.n < 1 || spec.s < 1 || spec.d < 0) {
        throw std::invalid_argument("block spec needs n >= 1, s >= 1, d >= 0");
    }
    auto a = spec.sites_a();
    auto b = spec.sites_b();
    if (spec.span() > static_cast<int>(table.g.size())) {
        throw std::invalid_argument("two-point table too short for block span");
    }
    double scale = 1.0 / spec.n;
    if (norm == CollectiveNorm::sum) {
        scale = 1.0;
    } else if (norm == CollectiveNorm::mean) {
        scale = 1.0 / (static_cast<double>(spec.n) * spec.n);
    }
    CovarianceBlock c;
    c.G = scale * pair_sum(a, a, table.g);
    c.H = scale * pair_sum(a, a, table.h);
    c.G_AB = scale * pair_sum(a, b, table.g);
    c.H_AB = scale * pair_sum(a, b, table.h);
    return c;
}

CovarianceBlock block_covariance(const ChainParams &params, const BlockSpec &spec) {
    TwoPointTable table = TwoPointTable::compute(params, std::max(spec.span(), 1));
    return block_covariance(table, spec);
}

double epsilon(const CovarianceBlock &cov, double commutator) {
    double d1 = cov.G - std::abs(cov.G_AB);
    double d2 = cov.H - std::abs(cov.H_AB);
    if (!(d1 > 0.0) || !(d2 > 0.0)) {
        throw std::domain_error("epsilon: covariance data is not physical (delta <= 0)");
    }
    double floor = 0.25 * commutator * commutator;
    return std::max(0.0, floor / (d1 * d2) - 1.0);
}

double duan_witness(const CovarianceBlock &cov) {
    return 2.0 * (cov.G - cov.G_AB + cov.H + cov.H_AB);
}

double epsilon_periodic_approx(double alpha, int n, int m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("epsilon_periodic_approx needs n, m >= 1");
    }
    TwoPoint p0 = two_point({alpha, std::nullopt}, 0);
    TwoPoint p1 = two_point({alpha, std::nullopt}, 1);
    double a = p0.g + (2.0 - (4.0 * m - 1.0) / n) * p1.g;
    double b = p0.h + (2.0 - 1.0 / n) * p1.h;
    return 1.0 / (4.0 * a * b) - 1.0;
}

FieldPropagators field_propagators(double mass, double L, double r, std::optional<double> cutoff) {
    check_field_args(mass, L, r);
    const double pref = 2.0 / (kPi * L);
    const double m2 = mass * mass;
    auto phi_env = [mass](double k) {
        return 1.0 / (k * k * std::hypot(k, mass));
    };
    if (cutoff) {
        if (!(*cutoff > 0.0)) {
            throw std::invalid_argument("cutoff must be positive");
        }
        auto pi_env = [mass](double k) {
            return std::hypot(k, mass) / (k * k);
        };
        return {
            pref * oscillatory_integral(phi_env, L, r, mass, *cutoff),
            pref * oscillatory_integral(pi_env, L, r, mass, *cutoff)};
    }

    double upper = infinite_upper(mass, L, r);
    double c0 = constant_component(L, r);
    double phi_tail = c0 * (std::sqrt(1.0 + m2 / (upper * upper)) - 1.0) / m2;
    double d_phi = pref * (oscillatory_integral(phi_env, L, r, mass, upper) + phi_tail);

    double d_pi;
    if (r == 0.0) {
        d_pi = std::numeric_limits<double>::infinity();
    } else if (r == L) {
        d_pi = -std::numeric_limits<double>::infinity();
    } else {
        // sqrt(k^2+m^2)/k^2 = 1/k + m^2 / (k^2 (sqrt(k^2+m^2) + k)); the 1/k
        // part integrates in closed form.
        double log_part = 0.25 * std::log(std::abs(r * r - L * L) / (r * r));
        auto rest_env = [m2, mass](double k) {
            return m2 / (k * k * (std::hypot(k, mass) + k));
        };
        double rest_tail = c0 * m2 / (4.0 * upper * upper);
        d_pi = pref * (log_part + oscillatory_integral(rest_env, L, r, mass, upper) + rest_tail);
    }
    return {d_phi, d_pi};
}

double field_commutator(double L, std::optional<double> cutoff) {
    if (!(L >= 1e-6)) {
        throw std::domain_error("field propagator: averaging length L must be >= 1e-6");
    }
    if (!cutoff) {
        return 1.0;
    }
    auto env = [](double k) {
        return 1.0 / (k * k);
    };
    return 4.0 / (kPi * L) * oscillatory_integral(env, L, 0.0, 1.0 / L, *cutoff);
}

double field_epsilon(double mass, double L, double r, std::optional<double> cutoff) {
    if (!cutoff && r == L) {
        throw std::domain_error("field_epsilon: D_pi diverges at r = L without a cutoff");
    }
    FieldPropagators at0 = field_propagators(mass, L, 0.0, cutoff);
    FieldPropagators atr = field_propagators(mass, L, r, cutoff);
    CovarianceBlock cov{at0.D_phi, at0.D_pi, atr.D_phi, atr.D_pi};
    return epsilon(cov, field_commutator(L, cutoff));
}

}  // namespace macroreal
