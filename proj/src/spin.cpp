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

#include "macroreal/spin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace macroreal {

namespace {

using C = std::complex<double>;

struct RealEigensystem {
    RealVector values;
    std::shared_ptr<const Operator> vectors;
};

RealEigensystem jx_eigensystem(SpinLength j) {
    static std::mutex mu;
    static std::map<int, RealEigensystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(j.twice());
    if (it != cache.end()) {
        return it->second;
    }
    Eigen::MatrixXd jx = build_spin_operators(j).Jx.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jx);
    RealEigensystem sys{solver.eigenvalues(), std::make_shared<const Operator>(solver.eigenvectors().cast<C>())};
    cache.emplace(j.twice(), sys);
    return sys;
}

// k * ln(x) with the convention 0 * ln(0) = 0.
double power_log(double k, double x) {
    if (k == 0) {
        return 0.0;
    }
    return k * std::log(x);
}

}  // namespace

Tolerances &tolerances() {
    static Tolerances t;
    return t;
}

SpinLength SpinLength::from_double(double j) {
    HalfInt h = HalfInt::from_double(j);
    if (h.twice < 1) {
        throw std::invalid_argument("spin length must be >= 1/2");
    }
    return SpinLength(h);
}

Eigen::Vector3d unit_vector(const Direction &dir) {
    return {std::sin(dir.theta) * std::cos(dir.phi), std::sin(dir.theta) * std::sin(dir.phi), std::cos(dir.theta)};
}

Direction direction_of(const Eigen::Vector3d &v) {
    Eigen::Vector3d u = v.normalized();
    double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    double phi = std::atan2(u.y(), u.x());
    if (phi < 0) {
        phi += 2 * std::numbers::pi;
    }
    return {theta, phi};
}

SpinState SpinState::pure(SpinLength j, const StateVector &amplitudes) {
    if (amplitudes.size() != j.dim()) {
        throw std::invalid_argument("state dimension does not match spin length");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e3 * tolerances().norm) {
        throw std::invalid_argument("pure state is not normalized");
    }
    SpinState s;
    s.j = j;
    s.rho = amplitudes * amplitudes.adjoint();
    s.psi = amplitudes;
    return s;
}

SpinState SpinState::mixed(SpinLength j, const Operator &rho) {
    if (rho.rows() != j.dim() || rho.cols() != j.dim()) {
        throw std::invalid_argument("density matrix dimension does not match spin length");
    }
    const Tolerances &tol = tolerances();
    if (!is_hermitian(rho, 1e3 * tol.hermitian)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e3 * tol.trace) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Operator> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol.positivity) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    SpinState s;
    s.j = j;
    s.rho = rho;
    return s;
}

SpinState SpinState::maximally_mixed(SpinLength j) {
    SpinState s;
    s.j = j;
    s.rho = Operator::Identity(j.dim(), j.dim()) / static_cast<double>(j.dim());
    return s;
}

Operator spin_along(SpinLength j, const Direction &dir) {
    auto ops = build_spin_operators(j);
    Eigen::Vector3d n = unit_vector(dir);
    return n.x() * ops.Jx + n.y() * ops.Jy + n.z() * ops.Jz;
}

RealVector coherent_probabilities(SpinLength j, double theta) {
    const int d = j.dim();
    const int two_j = j.twice();
    double c = std::cos(0.5 * theta);
    double s = std::sin(0.5 * theta);
    RealVector p(d);
    for (int i = 0; i < d; i++) {
        int up = two_j - i;  // j + m
        int down = i;        // j - m
        double l = log_binomial(two_j, up) + power_log(2.0 * up, std::abs(c)) + power_log(2.0 * down, std::abs(s));
        p(i) = std::exp(l);
    }
    return p;
}

StateVector coherent_state(SpinLength j, const Direction &dir) {
    const int d = j.dim();
    const int two_j = j.twice();
    double c = std::cos(0.5 * dir.theta);
    double s = std::sin(0.5 * dir.theta);
    StateVector v(d);
    for (int i = 0; i < d; i++) {
        int up = two_j - i;
        int down = i;
        double mag = std::exp(0.5 * log_binomial(two_j, up) + power_log(up, std::abs(c)) + power_log(down, std::abs(s)));
        if (c < 0 && up % 2 == 1) {
            mag = -mag;
        }
        if (s < 0 && down % 2 == 1) {
            mag = -mag;
        }
        double m = j.m_at(i);
        v(i) = mag * std::polar(1.0, -m * dir.phi);
    }
    return v;
}

Evolution::Evolution(const Operator &hamiltonian) : hamiltonian_(hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw std::invalid_argument("Hamiltonian must be square");
    }
    if (!is_hermitian(hamiltonian, 1e-10 * std::max(1.0, hamiltonian.cwiseAbs().maxCoeff()))) {
        throw std::invalid_argument("Hamiltonian must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> solver(hamiltonian);
    energies_ = solver.eigenvalues();
    vectors_ = std::make_shared<const Operator>(solver.eigenvectors());
}

Evolution::Evolution(Operator h, RealVector energies, std::shared_ptr<const Operator> vectors)
    : hamiltonian_(std::move(h)), energies_(std::move(energies)), vectors_(std::move(vectors)) {
}

Evolution Evolution::rotation(SpinLength j, double omega) {
    RealEigensystem sys = jx_eigensystem(j);
    Operator h = omega * build_spin_operators(j).Jx;
    return Evolution(h, omega * sys.values, sys.vectors);
}

Operator Evolution::at(double t) const {
    const Operator &v = *vectors_;
    Eigen::VectorXcd phases(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); k++) {
        phases(k) = std::polar(1.0, -energies_(k) * t);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

Operator rotation_evolution(SpinLength j, double omega_t) {
    return Evolution::rotation(j, 1.0).at(omega_t);
}

Direction rotated_direction(const Direction &start, double omega_t) {
    Eigen::Vector3d n = unit_vector(start);
    double c = std::cos(omega_t);
    double s = std::sin(omega_t);
    Eigen::Vector3d r(n.x(), c * n.y() - s * n.z(), s * n.y() + c * n.z());
    return direction_of(r);
}

Operator parity_operator(SpinLength j) {
    const int d = j.dim();
    Operator a = Operator::Zero(d, d);
    for (int i = 0; i < d; i++) {
        a(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    }
    return a;
}

RealVector outcome_distribution(const SpinState &state) {
    RealVector p = state.rho.diagonal().real();
    return p.cwiseMax(0.0);
}

GaussianApprox gaussian_approx(SpinLength j, double theta_t) {
    return {j.value() * std::cos(theta_t), std::sqrt(j.value() / 2.0) * std::abs(std::sin(theta_t))};
}

double gaussian_tv_distance(SpinLength j, double theta_t) {
    GaussianApprox g = gaussian_approx(j, theta_t);
    RealVector exact = coherent_probabilities(j, theta_t);
    const int d = j.dim();
    RealVector approx = RealVector::Zero(d);
    if (g.sigma < 1e-12) {
        int nearest = 0;
        double best = 1e300;
        for (int i = 0; i < d; i++) {
            double dist = std::abs(j.m_at(i) - g.mu);
            if (dist < best) {
                best = dist;
                nearest = i;
            }
        }
        approx(nearest) = 1.0;
    } else {
        for (int i = 0; i < d; i++) {
            double z = (j.m_at(i) - g.mu) / g.sigma;
            approx(i) = std::exp(-0.5 * z * z);
        }
        approx /= approx.sum();
    }
    return 0.5 * (exact - approx).cwiseAbs().sum();
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(a.dot(b));
}

bool is_hermitian(const Operator &op, double tol) {
    return op.rows() == op.cols() && (op - op.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator &op, double tol) {
    if (op.rows() != op.cols()) {
        return false;
    }
    return (op.adjoint() * op - Operator::Identity(op.rows(), op.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace macroreal
