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

#ifndef MACROREAL_SPIN_HPP
#define MACROREAL_SPIN_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <optional>

#include "macroreal/special.hpp"

namespace macroreal {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Operator = CMatrix<double>;
using StateVector = CVector<double>;
using RealVector = Eigen::VectorXd;

/// Spin length j >= 1/2. Basis index i corresponds to m = j - i, so index 0
/// is the north pole |m = +j>.
struct SpinLength {
    HalfInt j{1};

    constexpr SpinLength() = default;
    constexpr explicit SpinLength(HalfInt value) : j(value) {
    }
    /// Throws std::invalid_argument unless j is a positive half-integer.
    static SpinLength from_double(double j);

    constexpr int twice() const {
        return j.twice;
    }
    constexpr double value() const {
        return j.value();
    }
    constexpr int dim() const {
        return j.twice + 1;
    }
    /// Eigenvalue m at basis index i.
    constexpr double m_at(int i) const {
        return 0.5 * (j.twice - 2 * i);
    }
    constexpr HalfInt m_half(int i) const {
        return HalfInt(j.twice - 2 * i);
    }
    constexpr bool operator==(const SpinLength &) const = default;
};

struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

/// Unit vector (x, y, z) of a direction.
Eigen::Vector3d unit_vector(const Direction &dir);
/// Inverse of unit_vector, with phi wrapped into [0, 2pi).
Direction direction_of(const Eigen::Vector3d &v);

/// Pure or mixed state over the Jz eigenbasis. The density matrix is always
/// populated; `psi` is kept for pure states.
struct SpinState {
    SpinLength j;
    Operator rho;
    std::optional<StateVector> psi;

    static SpinState pure(SpinLength j, const StateVector &amplitudes);
    /// Validates Hermiticity, unit trace and positivity (tolerances from Tolerances).
    static SpinState mixed(SpinLength j, const Operator &rho);
    static SpinState maximally_mixed(SpinLength j);
    bool is_pure() const {
        return psi.has_value();
    }
};

/// Numerical tolerances shared across the library.
struct Tolerances {
    double hermitian = 1e-12;
    double unitary = 1e-10;
    double norm = 1e-12;
    double trace = 1e-12;
    double positivity = 1e-10;
    double density_normalization = 1e-6;
    double deterministic = 1e-10;
};
Tolerances &tolerances();

template <typename Scalar = double>
struct SpinOperators {
    CMatrix<Scalar> Jx;
    CMatrix<Scalar> Jy;
    CMatrix<Scalar> Jz;
    CMatrix<Scalar> Jsq;
};

/// Ladder-operator construction of Jx, Jy, Jz and J^2.
template <typename Scalar = double>
SpinOperators<Scalar> build_spin_operators(SpinLength j) {
    using C = std::complex<Scalar>;
    const int d = j.dim();
    const Scalar jj = static_cast<Scalar>(j.value());
    CMatrix<Scalar> jp = CMatrix<Scalar>::Zero(d, d);
    CMatrix<Scalar> jz = CMatrix<Scalar>::Zero(d, d);
    for (int i = 0; i < d; i++) {
        Scalar m = static_cast<Scalar>(j.m_at(i));
        jz(i, i) = C(m, 0);
        if (i > 0) {
            jp(i - 1, i) = C(std::sqrt(jj * (jj + 1) - m * (m + 1)), 0);
        }
    }
    CMatrix<Scalar> jm = jp.adjoint();
    SpinOperators<Scalar> ops;
    ops.Jx = (jp + jm) * C(Scalar(0.5), 0);
    ops.Jy = (jp - jm) * C(0, Scalar(-0.5));
    ops.Jz = jz;
    ops.Jsq = ops.Jx * ops.Jx + ops.Jy * ops.Jy + ops.Jz * ops.Jz;
    return ops;
}

/// Spin component along a direction: n . J.
Operator spin_along(SpinLength j, const Direction &dir);

/// Coherent-state amplitudes <m|theta, phi>.
StateVector coherent_state(SpinLength j, const Direction &dir);

/// |<m|theta, phi>|^2 for all m (binomial law in cos^2(theta/2)).
RealVector coherent_probabilities(SpinLength j, double theta);

/// Time evolution generated by a Hermitian matrix, diagonalized once.
class Evolution {
   public:
    /// H must be Hermitian.
    explicit Evolution(const Operator &hamiltonian);
    /// omega * Jx, sharing the cached Jx eigensystem.
    static Evolution rotation(SpinLength j, double omega);

    /// exp(-i H t).
    Operator at(double t) const;
    int dim() const {
        return static_cast<int>(energies_.size());
    }
    const Operator &hamiltonian() const {
        return hamiltonian_;
    }

   private:
    Evolution(Operator h, RealVector energies, std::shared_ptr<const Operator> vectors);
    Operator hamiltonian_;
    RealVector energies_;
    std::shared_ptr<const Operator> vectors_;
};

/// exp(-i omega_t Jx).
Operator rotation_evolution(SpinLength j, double omega_t);

/// Direction reached from `start` after rotating by omega_t about x.
Direction rotated_direction(const Direction &start, double omega_t);

/// Diagonal parity (-1)^(j - m).
Operator parity_operator(SpinLength j);

/// Born-rule distribution over m, ordered like the basis (m = +j first).
RealVector outcome_distribution(const SpinState &state);

struct GaussianApprox {
    double mu;
    double sigma;
};
GaussianApprox gaussian_approx(SpinLength j, double theta_t);

/// Total-variation distance between the discretized Gaussian and the exact
/// binomial law of a coherent state at polar angle theta_t.
double gaussian_tv_distance(SpinLength j, double theta_t);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

bool is_hermitian(const Operator &op, double tol);
bool is_unitary(const Operator &op, double tol);

}  // namespace macroreal

#endif
