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


#ifndef MACROREAL_UNDECIDABILITY_HPP
#define MACROREAL_UNDECIDABILITY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace macroreal {

/// y = f(x) on one bit.
struct BooleanFn {
    bool f0 = false;
    bool f1 = false;
};

/// Tensor product of i^(m n) sigma_x^m sigma_z^n over sites. Site q is bit q of
/// the masks and the most significant qubit of the state index for q = 0.
struct PauliString {
    int N = 0;
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    /// "XZIY"-style letters, one per site.
    static PauliString parse(const std::string &letters);
    std::string str() const;
    bool is_identity() const {
        return m == 0 && n == 0;
    }
    /// Bits (m | n) packed as m in the low N bits, n above.
    std::uint64_t row() const {
        return static_cast<std::uint64_t>(m) | (static_cast<std::uint64_t>(n) << N);
    }
    bool operator==(const PauliString &o) const = default;
};

/// Symplectic product; true when the two strings commute.
bool commutes(const PauliString &a, const PauliString &b);

/// a * b = i^phase * c; returns c and stores the power of i (mod 4) in `phase`.
PauliString multiply(const PauliString &a, const PauliString &b, int &phase);

/// Parity sum_j [n_j f_j(0) + m_j f_j(1)] of the proposition linked with `p`.
int proposition_bit(const PauliString &p, const std::vector<BooleanFn> &fns);

/// All 4^N strings in index order (site letter I, X, Z, Y per two bits).
std::vector<PauliString> all_pauli_strings(int N);

Eigen::MatrixXcd pauli_matrix(const PauliString &p);
Eigen::VectorXcd apply_pauli(const PauliString &p, const Eigen::VectorXcd &psi);

/// tensor of sigma_x^f(0) sigma_z^f(1). Dense, N <= 12.
Eigen::MatrixXcd blackbox_unitary(const std::vector<BooleanFn> &fns);

struct MeasurementStats {
    double p_plus = 0;
    double p_minus = 0;
    bool deterministic = false;
    int shots = 0;
    int plus_count = 0;
    std::uint64_t seed = 0;
};
/// Exact probabilities from (1 +- P)/2 plus seeded sampled counts.
MeasurementStats measure_pauli(const Eigen::VectorXcd &psi, const PauliString &p, int shots, std::uint64_t seed);

/// N commuting independent Pauli strings with truth bits; the bits are the
/// eigenvalue exponents, eigenvalue = (-1)^bit.
struct AxiomSet {
    std::vector<PauliString> ops;
    std::vector<int> bits;

    int N() const {
        return ops.empty() ? 0 : ops.front().N;
    }
    /// Throws std::invalid_argument if dependent, non-commuting or mis-sized.
    void validate() const;

    static AxiomSet z_basis(int N);
    /// sigma_z sigma_z and sigma_x sigma_x.
    static AxiomSet bell();
    /// sigma_y sigma_y sigma_x, sigma_y sigma_x sigma_y, sigma_x sigma_y sigma_y, all with bit 1.
    static AxiomSet ghz();
    /// Random symplectic image of the z basis; random bits.
    static AxiomSet random(int N, std::uint64_t seed);
    /// Bits encoded by a black box acting on the +1 eigenstate.
    static AxiomSet encoded(std::vector<PauliString> ops, const std::vector<BooleanFn> &fns);
};

/// Joint eigenstate with eigenvalues (-1)^bits, built from projector products.
Eigen::VectorXcd axiom_state(const AxiomSet &axioms);

struct Decision {
    bool decidable = false;
    std::uint32_t k = 0;   // which axioms enter the product
    int derived_bit = 0;   // XOR of the selected axiom bits
    int phase_bit = 0;     // prod Omega^k = (-1)^phase_bit Theta
    int quantum_bit = 0;   // derived_bit ^ phase_bit
};
Decision decidability_test(const AxiomSet &axioms, const PauliString &theta);

struct AuditEntry {
    PauliString theta;
    Decision decision;
    MeasurementStats stats;
    bool uniform = false;
    bool consistent = false;
};
struct AuditReport {
    int N = 0;
    std::uint64_t seed = 0;
    std::vector<AuditEntry> entries;
    int decidable_count = 0;
    int deterministic_count = 0;
    int uniform_count = 0;
    bool all_consistent = true;
};
AuditReport decidable_randomness_audit(const AxiomSet &axioms, int shots, std::uint64_t seed,
                                       bool include_identity = true);

struct GHZReport {
    std::vector<double> axiom_expectations;
    std::uint32_t k = 0;
    int classical_bit = 0;
    double xxx_expectation = 0;
    int quantum_bit = 0;
    int product_phase_sign = 0;  // prod of axiom operators = sign * XXX
    bool product_verified = false;
};
GHZReport ghz_contradiction();

}  // namespace macroreal

#endif
