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

#ifndef MACROREAL_SPHERE_HPP
#define MACROREAL_SPHERE_HPP

#include <Eigen/Dense>
#include <vector>

#include "macroreal/spin.hpp"

namespace macroreal {

/// Product grid: Gauss-Legendre in cos(theta) times uniform phi.
struct SphereGrid {
    std::vector<double> cos_theta;
    std::vector<double> theta;
    std::vector<double> weight_theta;
    int n_phi = 0;

    /// Order max(2j+2, 8) * refine in cos(theta), max(4j+4, 8) * refine in phi.
    static SphereGrid for_spin(SpinLength j, int refine = 1);
    static SphereGrid with_orders(int n_theta, int n_phi);

    int n_theta() const {
        return static_cast<int>(theta.size());
    }
    double phi(int k) const;
    /// Solid-angle weight of node (i, k).
    double weight(int i) const;
};

/// Density sampled on a SphereGrid, rows = theta nodes, cols = phi nodes.
using GridDensity = Eigen::ArrayXXd;

double integrate(const SphereGrid &grid, const GridDensity &values);

/// Q(Omega) = (2j+1)/(4 pi) <Omega|rho|Omega>.
double q_function(const SpinState &state, const Direction &dir);
double q_function(SpinLength j, const Operator &rho, const Direction &dir);

/// Q sampled on the grid. Works for any (not necessarily normalized) operator.
GridDensity q_on_grid(SpinLength j, const Operator &rho, const SphereGrid &grid);
inline GridDensity q_on_grid(const SpinState &state, const SphereGrid &grid) {
    return q_on_grid(state.j, state.rho, grid);
}

/// Integral of Q over the polar band theta1 <= theta <= theta2 (exact
/// quadrature, the phi-average of Q is a polynomial in cos(theta)).
double q_band_integral(SpinLength j, const Operator &rho, double theta1, double theta2);

/// Largest j accepted by the P-function.
constexpr int kPFunctionMaxTwiceJ = 60;

/// Multipole components rho_kq = Tr(T_kq^dagger rho), k = 0..2j, q = -k..k,
/// packed as index k*k + (q + k).
Eigen::VectorXcd multipole_components(SpinLength j, const Operator &rho);

/// Glauber-Sudarshan P with rho = integral of P(Omega) |Omega><Omega| dOmega.
/// Returns the real part; the imaginary residue is reported through
/// `imag_residue` when given. Throws std::domain_error for j > 30.
double p_function(const SpinState &state, const Direction &dir, double *imag_residue = nullptr);

/// P sampled on the grid (same guard).
GridDensity p_on_grid(const SpinState &state, const SphereGrid &grid);

/// rho reconstructed as the grid integral of P |Omega><Omega|.
Operator reconstruct_from_p(SpinLength j, const GridDensity &p, const SphereGrid &grid);

/// Integral of sqrt(f g). Throws std::invalid_argument if either density is
/// not normalized within `normalization_tol`.
double bhattacharyya_overlap(
    const SphereGrid &grid, const GridDensity &f, const GridDensity &g, double normalization_tol = 1e-6);

}  // namespace macroreal

#endif
