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

#ifndef MACROREAL_CHAIN_HPP
#define MACROREAL_CHAIN_HPP

#include <optional>
#include <vector>

namespace macroreal {

/// Harmonic chain with coupling 0 < alpha < 1; N empty means infinite.
struct ChainParams {
    double alpha = 0.5;
    std::optional<int> N;
};

struct TwoPoint {
    double g;
    double h;
};

/// Ground-state two-point functions g_l = <q_i q_{i+l}>, h_l = <p_i p_{i+l}>.
TwoPoint two_point(const ChainParams &params, int l);

/// Two-point values for l = 0..l_max, shared by the block sums.
struct TwoPointTable {
    std::vector<double> g;
    std::vector<double> h;
    static TwoPointTable compute(const ChainParams &params, int l_max);
};

/// Two blocks of n = sum of subblock sizes oscillators each. Subblocks of
/// size s alternate A, B, A, B, ... with gaps of d sites between every pair
/// of neighbours, starting with A at site 0:
///
///     A(s) d B(s) d A(s) d B(s) ...
///
/// When n is not a multiple of s the final A and B subblocks hold the
/// remaining n mod s sites. Contiguous blocks are s = n.
struct BlockSpec {
    int n = 1;
    int s = 1;
    int d = 0;

    static BlockSpec contiguous(int n, int d) {
        return {n, n, d};
    }
    static BlockSpec periodic(int s, int m, int d) {
        return {s * m, s, d};
    }
    int subblocks() const {
        return (n + s - 1) / s;
    }
    /// Site indices of A and B.
    std::vector<int> sites_a() const;
    std::vector<int> sites_b() const;
    int span() const;
};

/// G = <Q_A^2>, H = <P_A^2>, G_AB = <Q_A Q_B>, H_AB = <P_A P_B>.
struct CovarianceBlock {
    double G = 0.0;
    double H = 0.0;
    double G_AB = 0.0;
    double H_AB = 0.0;
};

enum class CollectiveNorm {
    mean_sqrt,  // (1/sqrt(n)) sum, preserving [Q, P] = i
    sum,        // plain sum
    mean,       // (1/n) sum
};

CovarianceBlock block_covariance(const ChainParams &params, const BlockSpec &spec);
CovarianceBlock block_covariance(const TwoPointTable &table, const BlockSpec &spec,
                                 CollectiveNorm norm = CollectiveNorm::mean_sqrt);

/// max(0, (d1 d2)_0 / (d1 d2) - 1) with d1 = G - |G_AB|, d2 = H - |H_AB|.
/// `commutator` is c in [Q, P] = i c; (d1 d2)_0 = c^2/4. Throws
/// std::domain_error if d1 or d2 is not positive.
double epsilon(const CovarianceBlock &cov, double commutator = 1.0);

/// Delta = 2 (G - G_AB + H + H_AB).
double duan_witness(const CovarianceBlock &cov);

/// 1 / (4 [g0 + (2 - (4m-1)/n) g1] [h0 + (2 - 1/n) h1]) - 1.
double epsilon_periodic_approx(double alpha, int n, int m);

struct FieldPropagators {
    double D_phi;
    double D_pi;  // +inf when divergent
};

/// Collective field propagators of a Klein-Gordon vacuum averaged over
/// length L, centers a distance r apart. Without a cutoff D_pi diverges
/// logarithmically at r = 0 and r = L; pass `cutoff` (in units of k) to
/// regularize. Throws std::domain_error for mass <= 0 (infrared
/// divergence) or L < 1e-6.
FieldPropagators field_propagators(double mass, double L, double r, std::optional<double> cutoff = std::nullopt);

/// Equal-center commutator c(cutoff) with [Phi_L, Pi_L] = i c; 1 without cutoff.
double field_commutator(double L, std::optional<double> cutoff = std::nullopt);

/// epsilon with G = D_phi(0), H = D_pi(0), G_AB = D_phi(r), H_AB = D_pi(r).
double field_epsilon(double mass, double L, double r, std::optional<double> cutoff = std::nullopt);

}  // namespace macroreal

#endif
