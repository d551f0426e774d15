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

#include "macroreal/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace macroreal {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Real coherent amplitudes at phi = 0.
RealVector coherent_real(SpinLength j, double theta) {
    return coherent_state(j, {theta, 0.0}).real();
}

double t_kq_element(SpinLength j, int k, int q, int a, int b) {
    HalfInt jj = j.j;
    HalfInt ma = j.m_half(a);
    HalfInt mb = j.m_half(b);
    double w = wigner_3j(jj, HalfInt::integer(k), jj, -ma, HalfInt::integer(q), mb);
    int jm = (jj.twice - ma.twice) / 2;
    double sign = (jm % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sqrt(2.0 * k + 1.0) * w;
}

double q_symbol_scale(SpinLength j, int k) {
    return std::sqrt(4.0 * kPi) * wigner_3j(j.j, HalfInt::integer(k), j.j, -j.j, HalfInt(0), j.j);
}

void check_p_range(SpinLength j) {
    if (j.twice() > kPFunctionMaxTwiceJ) {
        throw std::domain_error("p_function: j exceeds the stable range (j <= 30)");
    }
}

}  // namespace

SphereGrid SphereGrid::with_orders(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1) {
        throw std::invalid_argument("grid orders must be positive");
    }
    SphereGrid g;
    GaussLegendre gl = gauss_legendre(n_theta);
    g.cos_theta = gl.nodes;
    g.weight_theta = gl.weights;
    g.theta.resize(n_theta);
    for (int i = 0; i < n_theta; i++) {
        g.theta[i] = std::acos(gl.nodes[i]);
    }
    g.n_phi = n_phi;
    return g;
}

SphereGrid SphereGrid::for_spin(SpinLength j, int refine) {
    int nt = std::max(j.twice() + 2, 8) * std::max(refine, 1);
    int np = std::max(2 * j.twice() + 4, 8) * std::max(refine, 1);
    return with_orders(nt, np);
}

double SphereGrid::phi(int k) const {
    return 2.0 * kPi * k / n_phi;
}

double SphereGrid::weight(int i) const {
    return weight_theta[i] * 2.0 * kPi / n_phi;
}

double integrate(const SphereGrid &grid, const GridDensity &values) {
    double total = 0.0;
    for (int i = 0; i < grid.n_theta(); i++) {
        total += grid.weight(i) * values.row(i).sum();
    }
    return total;
}

double q_function(SpinLength j, const Operator &rho, const Direction &dir) {
    StateVector v = coherent_state(j, dir);
    return (j.dim() / (4.0 * kPi)) * v.dot(rho * v).real();
}

double q_function(const SpinState &state, const Direction &dir) {
    return q_function(state.j, state.rho, dir);
}

GridDensity q_on_grid(SpinLength j, const Operator &rho, const SphereGrid &grid) {
    const int d = j.dim();
    const int np = grid.n_phi;
    const double prefactor = d / (4.0 * kPi);
    std::vector<C> unit(np);
    for (int k = 0; k < np; k++) {
        unit[k] = std::polar(1.0, grid.phi(k));
    }
    GridDensity out(grid.n_theta(), np);
    std::vector<C> s(d);
    for (int i = 0; i < grid.n_theta(); i++) {
        RealVector c = coherent_real(j, grid.theta[i]);
        for (int delta = 0; delta < d; delta++) {
            C acc = 0;
            for (int a = 0; a + delta < d; a++) {
                acc += c(a) * c(a + delta) * rho(a, a + delta);
            }
            s[delta] = acc;
        }
        for (int k = 0; k < np; k++) {
            double value = s[0].real();
            int step = 0;
            for (int delta = 1; delta < d; delta++) {
                step += k;
                if (step >= np) {
                    step -= np;
                }
                value += 2.0 * (s[delta] * unit[step]).real();
            }
            out(i, k) = prefactor * value;
        }
    }
    return out;
}

double q_band_integral(SpinLength j, const Operator &rho, double theta1, double theta2) {
    if (theta1 > theta2) {
        std::swap(theta1, theta2);
    }
    const int d = j.dim();
    GaussLegendre gl = gauss_legendre(std::max(d, 4));
    double x_hi = std::cos(theta1);
    double x_lo = std::cos(theta2);
    double half_width = 0.5 * (x_hi - x_lo);
    double mid = 0.5 * (x_hi + x_lo);
    RealVector diag = rho.diagonal().real();
    double total = 0.0;
    for (size_t n = 0; n < gl.nodes.size(); n++) {
        double x = mid + half_width * gl.nodes[n];
        double theta = std::acos(std::clamp(x, -1.0, 1.0));
        RealVector p = coherent_probabilities(j, theta);
        total += gl.weights[n] * half_width * p.dot(diag);
    }
    return total * d / 2.0;
}

Eigen::VectorXcd multipole_components(SpinLength j, const Operator &rho) {
    const int d = j.dim();
    const int kmax = j.twice();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero((kmax + 1) * (kmax + 1));
    for (int k = 0; k <= kmax; k++) {
        for (int q = -k; q <= k; q++) {
            C acc = 0;
            for (int a = 0; a < d; a++) {
                // m_b = m_a - q  <=>  b = a + q.
                int b = a + q;
                if (b < 0 || b >= d) {
                    continue;
                }
                acc += t_kq_element(j, k, q, a, b) * rho(a, b);
            }
            out(k * k + q + k) = acc;
        }
    }
    return out;
}

namespace {

C p_value_from_table(
    SpinLength j, const Eigen::VectorXcd &rho_kq, const std::vector<double> &scale, const std::vector<double> &legendre,
    double phi) {
    const int kmax = j.twice();
    C total = 0;
    for (int k = 0; k <= kmax; k++) {
        C acc = 0;
        for (int q = -k; q <= k; q++) {
            int aq = std::abs(q);
            double p = legendre[k * (k + 1) / 2 + aq];
            C y = p * std::polar(1.0, aq * phi);
            if (q < 0) {
                y = std::conj(y) * ((aq % 2 == 0) ? 1.0 : -1.0);
            }
            acc += rho_kq(k * k + q + k) * y;
        }
        total += acc / scale[k];
    }
    return total;
}

std::vector<double> q_symbol_scales(SpinLength j) {
    std::vector<double> scale(j.twice() + 1);
    for (int k = 0; k <= j.twice(); k++) {
        scale[k] = q_symbol_scale(j, k);
    }
    return scale;
}

}  // namespace

double p_function(const SpinState &state, const Direction &dir, double *imag_residue) {
    check_p_range(state.j);
    Eigen::VectorXcd rho_kq = multipole_components(state.j, state.rho);
    auto legendre = normalized_legendre_table(state.j.twice(), dir.theta);
    C value = p_value_from_table(state.j, rho_kq, q_symbol_scales(state.j), legendre, dir.phi);
    if (imag_residue != nullptr) {
        *imag_residue = std::abs(value.imag());
    }
    return value.real();
}

GridDensity p_on_grid(const SpinState &state, const SphereGrid &grid) {
    check_p_range(state.j);
    Eigen::VectorXcd rho_kq = multipole_components(state.j, state.rho);
    auto scale = q_symbol_scales(state.j);
    GridDensity out(grid.n_theta(), grid.n_phi);
    for (int i = 0; i < grid.n_theta(); i++) {
        auto legendre = normalized_legendre_table(state.j.twice(), grid.theta[i]);
        for (int k = 0; k < grid.n_phi; k++) {
            out(i, k) = p_value_from_table(state.j, rho_kq, scale, legendre, grid.phi(k)).real();
        }
    }
    return out;
}

Operator reconstruct_from_p(SpinLength j, const GridDensity &p, const SphereGrid &grid) {
    const int d = j.dim();
    Operator rho = Operator::Zero(d, d);
    for (int i = 0; i < grid.n_theta(); i++) {
        for (int k = 0; k < grid.n_phi; k++) {
            StateVector v = coherent_state(j, {grid.theta[i], grid.phi(k)});
            rho += (grid.weight(i) * p(i, k)) * (v * v.adjoint());
        }
    }
    return rho;
}

double bhattacharyya_overlap(
    const SphereGrid &grid, const GridDensity &f, const GridDensity &g, double normalization_tol) {
    if (f.rows() != grid.n_theta() || g.rows() != grid.n_theta() || f.cols() != grid.n_phi ||
        g.cols() != grid.n_phi) {
        throw std::invalid_argument("bhattacharyya_overlap: density does not match grid");
    }
    if (std::abs(integrate(grid, f) - 1.0) > normalization_tol ||
        std::abs(integrate(grid, g) - 1.0) > normalization_tol) {
        throw std::invalid_argument("bhattacharyya_overlap: densities must be normalized");
    }
    GridDensity root = (f.max(0.0) * g.max(0.0)).sqrt();
    return std::clamp(integrate(grid, root), 0.0, 1.0);
}

}  // namespace macroreal
