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

#ifndef MACROREAL_ENSEMBLE_HPP
#define MACROREAL_ENSEMBLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "macroreal/spin.hpp"

namespace macroreal {

/// 4x4 two-qubit density matrix, basis |00>, |01>, |10>, |11> with |0> the
/// +1 eigenstate of sigma_z.
using PairState = Eigen::Matrix4cd;

/// Normalized collective moments of two samples of n spin-1/2 each.
struct CollectiveMoments {
    int n = 1;
    Eigen::Vector3d s_a = Eigen::Vector3d::Zero();
    Eigen::Vector3d s_b = Eigen::Vector3d::Zero();
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// Pauli matrices sigma_x, sigma_y, sigma_z (index 0..2) and identity (index 3).
const Eigen::Matrix2cd &pauli(int index);

/// 1/4 [1 + s_a.sigma x 1 + 1 x s_b.sigma + sum t_kl sigma_k x sigma_l].
/// Throws std::domain_error if the result is not PSD within 1e-10.
PairState virtual_qubit_state(const CollectiveMoments &moments, bool check_psd = true);

/// Moments of an explicit collection of pair states rho_{alpha beta}
/// (alpha in A, beta in B), i.e. the Pauli coefficients of their average.
CollectiveMoments moments_from_pairs(const std::vector<PairState> &pairs, int n);

/// Partial transpose on the second qubit.
PairState partial_transpose(const PairState &rho);

/// (Tr|rho^T_B| - 1) / 2.
double negativity(const PairState &rho);

/// 1/4 [1 - sqrt(c^2 + 4 h^2) + sign * t_zz].
double xxz_eigenvalue(double c, double hxx, double t_zz, int sign = 1);

/// Dicke |N; k> reduced to a pair: coefficients d, e, f and E_ab.
struct DickeResult {
    double d;
    double e;
    double f;
    double nu;
    double E_ab;
    PairState pair;
};
DickeResult dicke_collective(int N, int k, int n);

/// Pair state of |N; k> built from the explicit N-qubit vector (N <= 12).
PairState dicke_pair_brute_force(int N, int k);

/// Virtual-qubit negativity of two samples of n spins in a generalized singlet.
double singlet_collective(int n);

struct AdmixtureResult {
    double E_ab;
    double n_c;  // +inf for p = 1
    double t_xx;
    double t_zz;
};
AdmixtureResult admixture_collective(int n, double p);

/// Collective moments of two spin-s (s = n/2) systems in the state
/// sum over m of (-1)^(s-m) |m>|-m> / sqrt(2s+1), built from dense matrices.
CollectiveMoments singlet_moments_brute_force(int n);

/// Moments of a 2n-qubit state; qubits 0..n-1 form sample A, n..2n-1 sample B.
/// Qubit 0 is the most significant bit of the basis index.
CollectiveMoments collective_moments(const Eigen::VectorXcd &psi, int n);
CollectiveMoments collective_moments(const Eigen::MatrixXcd &rho, int n);

/// 2n-qubit vector of the generalized singlet of two spin-n/2 samples.
Eigen::VectorXcd generalized_singlet(int n);

/// p |singlet><singlet| + (1-p) prod_alpha (|01><01| + |10><10|)/2 on pairs
/// (A_alpha, B_alpha). Dense, n <= 4.
Eigen::MatrixXcd admixture_state(int n, double p);

/// Virtual M-qubit state 2^-M sum t_{i1..iM} sigma_i1 x ... x sigma_iM;
/// `t` is indexed by base-4 digits (digit 3 = identity, t[all 3] = 1).
Eigen::MatrixXcd multipartite_virtual(const std::vector<double> &t, int M, bool check_psd = true);

/// Pauli correlation tensor of an M-qubit state (inverse of the above).
std::vector<double> correlation_tensor(const Eigen::MatrixXcd &rho, int M);

struct PropositionOneReport {
    double E_ab;
    double average_E;
    double gap;
};
/// Compares the collective negativity with the average pairwise negativity.
PropositionOneReport proposition1_check(const std::vector<PairState> &pairs);

/// Bell states.
PairState bell_singlet();

}  // namespace macroreal

#endif
