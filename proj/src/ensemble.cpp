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


#include "macroreal/ensemble.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "macroreal/special.hpp"

namespace macroreal {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double min_eigenvalue(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Applies a Pauli string (ops[q] in 0..3) to a basis index; returns the image
// index and multiplies `phase` by the matrix element.
std::size_t pauli_image(std::size_t i, int N, const std::vector<int> &ops, cd &phase) {
    std::size_t out = i;
    for (int q = 0; q < N; ++q) {
        int op = ops[q];
        if (op == 3) continue;
        std::size_t mask = std::size_t{1} << (N - 1 - q);
        bool bit = (i & mask) != 0;
        switch (op) {
            case 0:
                out ^= mask;
                break;
            case 1:
                out ^= mask;
                phase *= bit ? -kI : kI;
                break;
            case 2:
                if (bit) phase = -phase;
                break;
        }
    }
    return out;
}

double expectation(const Eigen::VectorXcd &psi, int N, const std::vector<int> &ops) {
    cd acc = 0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        cd phase = 1;
        std::size_t k = pauli_image(static_cast<std::size_t>(i), N, ops, phase);
        acc += std::conj(psi(static_cast<Eigen::Index>(k))) * phase * psi(i);
    }
    return acc.real();
}

double expectation(const Eigen::MatrixXcd &rho, int N, const std::vector<int> &ops) {
    cd acc = 0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        cd phase = 1;
        std::size_t k = pauli_image(static_cast<std::size_t>(i), N, ops, phase);
        acc += phase * rho(i, static_cast<Eigen::Index>(k));
    }
    return acc.real();
}

template <typename State>
CollectiveMoments moments_of(const State &state, int n) {
    if (n < 1) throw std::invalid_argument("collective_moments: n must be >= 1");
    const int N = 2 * n;
    if (state.rows() != (Eigen::Index{1} << N)) {
        throw std::invalid_argument("collective_moments: dimension is not 2^(2n)");
    }
    CollectiveMoments out;
    out.n = n;
    std::vector<int> ops(N, 3);
    for (int k = 0; k < 3; ++k) {
        for (int a = 0; a < n; ++a) {
            ops[a] = k;
            out.s_a(k) += expectation(state, N, ops);
            ops[a] = 3;
            ops[n + a] = k;
            out.s_b(k) += expectation(state, N, ops);
            ops[n + a] = 3;
        }
    }
    out.s_a /= n;
    out.s_b /= n;
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
            double acc = 0;
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    ops[a] = k;
                    ops[n + b] = l;
                    acc += expectation(state, N, ops);
                    ops[a] = 3;
                    ops[n + b] = 3;
                }
            }
            out.t(k, l) = acc / (double(n) * n);
        }
    }
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

const Eigen::Matrix2cd &pauli(int index) {
    static const std::array<Eigen::Matrix2cd, 4> table = [] {
        std::array<Eigen::Matrix2cd, 4> t;
        t[0] << 0, 1, 1, 0;
        t[1] << 0, -kI, kI, 0;
        t[2] << 1, 0, 0, -1;
        t[3] << 1, 0, 0, 1;
        return t;
    }();
    if (index < 0 || index > 3) throw std::out_of_range("pauli: index must be 0..3");
    return table[static_cast<std::size_t>(index)];
}

PairState virtual_qubit_state(const CollectiveMoments &moments, bool check_psd) {
    PairState rho = PairState::Identity();
    const Eigen::Matrix2cd &id = pauli(3);
    for (int k = 0; k < 3; ++k) {
        rho += moments.s_a(k) * kron(pauli(k), id);
        rho += moments.s_b(k) * kron(id, pauli(k));
        for (int l = 0; l < 3; ++l) rho += moments.t(k, l) * kron(pauli(k), pauli(l));
    }
    rho *= 0.25;
    if (check_psd && min_eigenvalue(rho) < -tolerances().positivity) {
        throw std::domain_error("virtual_qubit_state: moments give a non-positive state");
    }
    return rho;
}

CollectiveMoments moments_from_pairs(const std::vector<PairState> &pairs, int n) {
    if (pairs.empty()) throw std::invalid_argument("moments_from_pairs: empty ensemble");
    PairState avg = PairState::Zero();
    for (const auto &p : pairs) avg += p;
    avg /= static_cast<double>(pairs.size());
    CollectiveMoments out;
    out.n = n;
    const Eigen::Matrix2cd &id = pauli(3);
    for (int k = 0; k < 3; ++k) {
        out.s_a(k) = (avg * kron(pauli(k), id)).trace().real();
        out.s_b(k) = (avg * kron(id, pauli(k))).trace().real();
        for (int l = 0; l < 3; ++l) out.t(k, l) = (avg * kron(pauli(k), pauli(l))).trace().real();
    }
    return out;
}

PairState partial_transpose(const PairState &rho) {
    PairState out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
            }
        }
    }
    return out;
}

double negativity(const PairState &rho) {
    Eigen::SelfAdjointEigenSolver<PairState> es(partial_transpose(rho), Eigen::EigenvaluesOnly);
    double neg = 0;
    for (int i = 0; i < 4; ++i) neg += std::min(0.0, es.eigenvalues()(i));
    return -neg;
}

double xxz_eigenvalue(double c, double hxx, double t_zz, int sign) {
    return 0.25 * (1.0 - std::sqrt(c * c + 4.0 * hxx * hxx) + sign * t_zz);
}

DickeResult dicke_collective(int N, int k, int n) {
    if (N < 2 || k < 0 || k > N) throw std::invalid_argument("dicke_collective: need N >= 2, 0 <= k <= N");
    if (n < 1 || 2 * n > N) throw std::invalid_argument("dicke_collective: need 1 <= n <= N/2");
    const double norm = double(N) * (N - 1);
    DickeResult r{};
    r.d = double(N - k) * (N - k - 1) / norm;
    r.e = double(k) * (k - 1) / norm;
    r.f = double(k) * (N - k) / norm;
    r.nu = 0.5 * (r.d + r.e) - 0.5 * std::sqrt((r.e - r.d) * (r.e - r.d) + 4 * r.f * r.f);
    r.E_ab = std::abs(std::min(0.0, r.nu));
    r.pair = PairState::Zero();
    r.pair(0, 0) = r.d;
    r.pair(3, 3) = r.e;
    r.pair.block<2, 2>(1, 1).setConstant(r.f);
    return r;
}

PairState dicke_pair_brute_force(int N, int k) {
    if (N < 2 || N > 12 || k < 0 || k > N) {
        throw std::invalid_argument("dicke_pair_brute_force: need 2 <= N <= 12, 0 <= k <= N");
    }
    const std::size_t dim = std::size_t{1} << N;
    const double amp = std::exp(-0.5 * log_binomial(N, k));
    const std::size_t rest = dim / 4;
    PairState rho = PairState::Zero();
    for (std::size_t r = 0; r < rest; ++r) {
        for (int ab = 0; ab < 4; ++ab) {
            if (std::popcount(r) + std::popcount(static_cast<unsigned>(ab)) != k) continue;
            for (int cd_ = 0; cd_ < 4; ++cd_) {
                if (std::popcount(r) + std::popcount(static_cast<unsigned>(cd_)) != k) continue;
                rho(ab, cd_) += amp * amp;
            }
        }
    }
    return rho;
}

double singlet_collective(int n) {
    if (n < 1) throw std::invalid_argument("singlet_collective: n must be >= 1");
    return 1.0 / (2.0 * n);
}

AdmixtureResult admixture_collective(int n, double p) {
    if (n < 1) throw std::invalid_argument("admixture_collective: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("admixture_collective: p must lie in [0, 1]");
    AdmixtureResult r{};
    r.t_xx = -p * (n + 2) / (3.0 * n);
    r.t_zz = -p * (n - 1) / (3.0 * n) - 1.0 / n;
    double e = (1.0 + p - n * (1.0 - p)) / (4.0 * n);
    r.E_ab = e > 1e-14 ? e : 0.0;
    if (p >= 1.0) {
        r.n_c = std::numeric_limits<double>::infinity();
    } else {
        r.n_c = std::ceil((1.0 + p) / (1.0 - p) - 1e-9);
    }
    return r;
}

CollectiveMoments collective_moments(const Eigen::VectorXcd &psi, int n) {
    return moments_of(psi, n);
}

CollectiveMoments collective_moments(const Eigen::MatrixXcd &rho, int n) {
    return moments_of(rho, n);
}

Eigen::VectorXcd generalized_singlet(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("generalized_singlet: need 1 <= n <= 6");
    const int N = 2 * n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << N);
    const std::size_t low = (std::size_t{1} << n) - 1;
    const double norm = 1.0 / std::sqrt(double(n + 1));
    for (std::size_t i = 0; i < static_cast<std::size_t>(psi.size()); ++i) {
        int ones_a = std::popcount(i >> n);
        int ones_b = std::popcount(i & low);
        if (ones_a + ones_b != n) continue;
        double sign = (ones_a % 2) ? -1.0 : 1.0;
        psi(static_cast<Eigen::Index>(i)) =
            sign * norm * std::exp(-0.5 * (log_binomial(n, ones_a) + log_binomial(n, ones_b)));
    }
    return psi;
}

Eigen::MatrixXcd admixture_state(int n, double p) {
    if (n < 1 || n > 4) throw std::invalid_argument("admixture_state: need 1 <= n <= 4");
    Eigen::VectorXcd psi = generalized_singlet(n);
    Eigen::MatrixXcd rho = p * psi * psi.adjoint();
    const std::size_t low = (std::size_t{1} << n) - 1;
    const double w = std::pow(0.5, n);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        std::size_t u = static_cast<std::size_t>(i);
        // pair alpha is anti-aligned on every site
        if (((u >> n) ^ (u & low)) == low) rho(i, i) += (1.0 - p) * w;
    }
    return rho;
}

CollectiveMoments singlet_moments_brute_force(int n) {
    return collective_moments(generalized_singlet(n), n);
}

Eigen::MatrixXcd multipartite_virtual(const std::vector<double> &t, int M, bool check_psd) {
    if (M < 1 || M > 6) throw std::invalid_argument("multipartite_virtual: need 1 <= M <= 6");
    const std::size_t terms = std::size_t{1} << (2 * M);
    if (t.size() != terms) throw std::invalid_argument("multipartite_virtual: tensor must have 4^M entries");
    const Eigen::Index dim = Eigen::Index{1} << M;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> ops(static_cast<std::size_t>(M));
    for (std::size_t idx = 0; idx < terms; ++idx) {
        if (t[idx] == 0.0) continue;
        std::size_t r = idx;
        for (int q = M - 1; q >= 0; --q) {
            ops[static_cast<std::size_t>(q)] = static_cast<int>(r % 4);
            r /= 4;
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            cd phase = 1;
            std::size_t k = pauli_image(static_cast<std::size_t>(i), M, ops, phase);
            rho(static_cast<Eigen::Index>(k), i) += t[idx] * phase;
        }
    }
    rho /= static_cast<double>(dim);
    if (check_psd && min_eigenvalue(rho) < -tolerances().positivity) {
        throw std::domain_error("multipartite_virtual: tensor gives a non-positive state");
    }
    return rho;
}

std::vector<double> correlation_tensor(const Eigen::MatrixXcd &rho, int M) {
    if (M < 1 || M > 6) throw std::invalid_argument("correlation_tensor: need 1 <= M <= 6");
    if (rho.rows() != (Eigen::Index{1} << M)) throw std::invalid_argument("correlation_tensor: dimension is not 2^M");
    const std::size_t terms = std::size_t{1} << (2 * M);
    std::vector<double> t(terms);
    std::vector<int> ops(static_cast<std::size_t>(M));
    for (std::size_t idx = 0; idx < terms; ++idx) {
        std::size_t r = idx;
        for (int q = M - 1; q >= 0; --q) {
            ops[static_cast<std::size_t>(q)] = static_cast<int>(r % 4);
            r /= 4;
        }
        t[idx] = expectation(rho, M, ops);
    }
    return t;
}

PropositionOneReport proposition1_check(const std::vector<PairState> &pairs) {
    if (pairs.empty()) throw std::invalid_argument("proposition1_check: empty ensemble");
    PairState avg = PairState::Zero();
    double mean_e = 0;
    for (const auto &p : pairs) {
        avg += p;
        mean_e += negativity(p);
    }
    avg /= static_cast<double>(pairs.size());
    mean_e /= static_cast<double>(pairs.size());
    PropositionOneReport r{};
    r.E_ab = negativity(avg);
    r.average_E = mean_e;
    r.gap = mean_e - r.E_ab;
    return r;
}

PairState bell_singlet() {
    Eigen::Vector4cd psi(0, 1, -1, 0);
    psi /= std::sqrt(2.0);
    return psi * psi.adjoint();
}

}  // namespace macroreal
