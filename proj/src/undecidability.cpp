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


#include "macroreal/undecidability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace macroreal {

namespace {

using cd = std::complex<double>;

cd i_power(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

int bit(std::uint32_t mask, int q) {
    return static_cast<int>((mask >> q) & 1u);
}

void check_sites(int N) {
    if (N < 1 || N > 12) throw std::invalid_argument("Pauli string: need 1 <= N <= 12");
}

// Row reduction over GF(2); each pivot row carries the mask of original rows.
struct Gf2Basis {
    std::vector<std::uint64_t> rows;
    std::vector<std::uint32_t> combos;
    std::vector<int> pivots;

    bool insert(std::uint64_t r, std::uint32_t combo) {
        reduce(r, combo);
        if (r == 0) return false;
        rows.push_back(r);
        combos.push_back(combo);
        pivots.push_back(std::countr_zero(r));
        return true;
    }
    void reduce(std::uint64_t &r, std::uint32_t &combo) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((r >> pivots[i]) & 1u) {
                r ^= rows[i];
                combo ^= combos[i];
            }
        }
    }
};

}  // namespace

PauliString PauliString::parse(const std::string &letters) {
    PauliString p;
    p.N = static_cast<int>(letters.size());
    check_sites(p.N);
    for (int q = 0; q < p.N; ++q) {
        switch (letters[static_cast<std::size_t>(q)]) {
            case 'I':
                break;
            case 'X':
                p.m |= 1u << q;
                break;
            case 'Z':
                p.n |= 1u << q;
                break;
            case 'Y':
                p.m |= 1u << q;
                p.n |= 1u << q;
                break;
            default:
                throw std::invalid_argument("Pauli string: letters must be I, X, Y or Z");
        }
    }
    return p;
}

std::string PauliString::str() const {
    std::string s;
    for (int q = 0; q < N; ++q) s += "IXZY"[bit(m, q) + 2 * bit(n, q)];
    return s;
}

bool commutes(const PauliString &a, const PauliString &b) {
    return (std::popcount(a.m & b.n) + std::popcount(a.n & b.m)) % 2 == 0;
}

PauliString multiply(const PauliString &a, const PauliString &b, int &phase) {
    if (a.N != b.N) throw std::invalid_argument("multiply: size mismatch");
    PauliString c{a.N, a.m ^ b.m, a.n ^ b.n};
    int e = 0;
    for (int q = 0; q < a.N; ++q) {
        e += bit(a.m, q) * bit(a.n, q) + bit(b.m, q) * bit(b.n, q) + 2 * bit(a.n, q) * bit(b.m, q) -
             bit(c.m, q) * bit(c.n, q);
    }
    phase = ((e % 4) + 4) % 4;
    return c;
}

int proposition_bit(const PauliString &p, const std::vector<BooleanFn> &fns) {
    if (static_cast<int>(fns.size()) != p.N) throw std::invalid_argument("proposition_bit: size mismatch");
    int s = 0;
    for (int q = 0; q < p.N; ++q) {
        s += bit(p.n, q) * fns[static_cast<std::size_t>(q)].f0 + bit(p.m, q) * fns[static_cast<std::size_t>(q)].f1;
    }
    return s % 2;
}

std::vector<PauliString> all_pauli_strings(int N) {
    check_sites(N);
    const std::uint64_t count = std::uint64_t{1} << (2 * N);
    std::vector<PauliString> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PauliString p;
        p.N = N;
        for (int q = 0; q < N; ++q) {
            unsigned d = (idx >> (2 * q)) & 3u;
            if (d & 1u) p.m |= 1u << q;
            if (d & 2u) p.n |= 1u << q;
        }
        out.push_back(p);
    }
    return out;
}

Eigen::VectorXcd apply_pauli(const PauliString &p, const Eigen::VectorXcd &psi) {
    check_sites(p.N);
    if (psi.size() != (Eigen::Index{1} << p.N)) throw std::invalid_argument("apply_pauli: dimension mismatch");
    Eigen::VectorXcd out(psi.size());
    int y_count = std::popcount(p.m & p.n);
    cd global = i_power(y_count);
    std::uint32_t flip = 0;
    std::uint32_t zmask = 0;
    for (int q = 0; q < p.N; ++q) {
        std::uint32_t state_bit = 1u << (p.N - 1 - q);
        if (bit(p.m, q)) flip |= state_bit;
        if (bit(p.n, q)) zmask |= state_bit;
    }
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        auto u = static_cast<std::uint32_t>(i);
        double sign = (std::popcount(u & zmask) % 2) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(u ^ flip)) = global * sign * psi(i);
    }
    return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    const Eigen::Index dim = Eigen::Index{1} << p.N;
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) out.col(c) = apply_pauli(p, Eigen::VectorXcd::Unit(dim, c));
    return out;
}

Eigen::MatrixXcd blackbox_unitary(const std::vector<BooleanFn> &fns) {
    const int N = static_cast<int>(fns.size());
    check_sites(N);
    PauliString p;
    p.N = N;
    for (int q = 0; q < N; ++q) {
        if (fns[static_cast<std::size_t>(q)].f0) p.m |= 1u << q;
        if (fns[static_cast<std::size_t>(q)].f1) p.n |= 1u << q;
    }
    // sigma_x sigma_z = -i sigma_y, so strip the Hermitian phase again
    return i_power(-std::popcount(p.m & p.n)) * pauli_matrix(p);
}

MeasurementStats measure_pauli(const Eigen::VectorXcd &psi, const PauliString &p, int shots, std::uint64_t seed) {
    if (shots < 0) throw std::invalid_argument("measure_pauli: shots must be >= 0");
    MeasurementStats s;
    double norm = psi.squaredNorm();
    double expval = psi.dot(apply_pauli(p, psi)).real() / norm;
    s.p_plus = std::clamp(0.5 * (1.0 + expval), 0.0, 1.0);
    s.p_minus = 1.0 - s.p_plus;
    s.deterministic = std::max(s.p_plus, s.p_minus) > 1.0 - 1e-10;
    s.shots = shots;
    s.seed = seed;
    if (shots > 0) {
        std::mt19937_64 rng(seed);
        std::binomial_distribution<int> dist(shots, s.p_plus);
        s.plus_count = dist(rng);
    }
    return s;
}

void AxiomSet::validate() const {
    if (ops.empty()) throw std::invalid_argument("axiom set: empty");
    const int n_sites = ops.front().N;
    if (static_cast<int>(ops.size()) != n_sites || bits.size() != ops.size()) {
        throw std::invalid_argument("axiom set: need N operators and N bits on N sites");
    }
    Gf2Basis basis;
    for (std::size_t p = 0; p < ops.size(); ++p) {
        if (ops[p].N != n_sites) throw std::invalid_argument("axiom set: site count mismatch");
        for (std::size_t r = 0; r < p; ++r) {
            if (!commutes(ops[p], ops[r])) throw std::invalid_argument("axiom set: operators do not commute");
        }
        if (!basis.insert(ops[p].row(), 1u << p)) throw std::invalid_argument("axiom set: dependent operators");
    }
}

AxiomSet AxiomSet::z_basis(int N) {
    check_sites(N);
    AxiomSet a;
    for (int q = 0; q < N; ++q) a.ops.push_back(PauliString{N, 0, 1u << q});
    a.bits.assign(static_cast<std::size_t>(N), 0);
    return a;
}

AxiomSet AxiomSet::bell() {
    return AxiomSet{{PauliString::parse("ZZ"), PauliString::parse("XX")}, {0, 0}};
}

AxiomSet AxiomSet::ghz() {
    return AxiomSet{{PauliString::parse("YYX"), PauliString::parse("YXY"), PauliString::parse("XYY")}, {1, 1, 1}};
}

AxiomSet AxiomSet::random(int N, std::uint64_t seed) {
    AxiomSet a = z_basis(N);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gate(0, 2);
    std::uniform_int_distribution<int> site(0, N - 1);
    for (int step = 0; step < 20 * N; ++step) {
        int g = gate(rng);
        int q = site(rng);
        int t = site(rng);
        for (auto &p : a.ops) {
            std::uint32_t mq = (p.m >> q) & 1u;
            std::uint32_t nq = (p.n >> q) & 1u;
            if (g == 0) {  // Hadamard
                p.m = (p.m & ~(1u << q)) | (nq << q);
                p.n = (p.n & ~(1u << q)) | (mq << q);
            } else if (g == 1) {  // phase gate
                p.n ^= mq << q;
            } else if (t != q) {  // CNOT q -> t
                p.m ^= mq << t;
                p.n ^= ((p.n >> t) & 1u) << q;
            }
        }
    }
    std::bernoulli_distribution coin(0.5);
    for (auto &b : a.bits) b = coin(rng) ? 1 : 0;
    return a;
}

AxiomSet AxiomSet::encoded(std::vector<PauliString> ops, const std::vector<BooleanFn> &fns) {
    AxiomSet a;
    for (const auto &p : ops) a.bits.push_back(proposition_bit(p, fns));
    a.ops = std::move(ops);
    return a;
}

Eigen::VectorXcd axiom_state(const AxiomSet &axioms) {
    axioms.validate();
    const Eigen::Index dim = Eigen::Index{1} << axioms.N();
    for (Eigen::Index start = 0; start < dim; ++start) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(dim, start);
        for (std::size_t p = 0; p < axioms.ops.size(); ++p) {
            double eig = axioms.bits[p] ? -1.0 : 1.0;
            v = 0.5 * (v + eig * apply_pauli(axioms.ops[p], v));
        }
        double nrm = v.norm();
        if (nrm > 1e-6) return v / nrm;
    }
    throw std::logic_error("axiom_state: projector product vanished");
}

Decision decidability_test(const AxiomSet &axioms, const PauliString &theta) {
    axioms.validate();
    if (theta.N != axioms.N()) throw std::invalid_argument("decidability_test: size mismatch");
    Gf2Basis basis;
    for (std::size_t p = 0; p < axioms.ops.size(); ++p) basis.insert(axioms.ops[p].row(), 1u << p);
    std::uint64_t r = theta.row();
    std::uint32_t combo = 0;
    basis.reduce(r, combo);
    Decision d;
    if (r != 0) return d;
    d.decidable = true;
    d.k = combo;
    PauliString prod{theta.N, 0, 0};
    int phase = 0;
    for (std::size_t p = 0; p < axioms.ops.size(); ++p) {
        if (!((combo >> p) & 1u)) continue;
        int step = 0;
        prod = multiply(prod, axioms.ops[p], step);
        phase += step;
        d.derived_bit ^= axioms.bits[p];
    }
    phase %= 4;
    if (!(prod == theta) || phase % 2 != 0) throw std::logic_error("decidability_test: inconsistent product");
    d.phase_bit = phase / 2;
    d.quantum_bit = d.derived_bit ^ d.phase_bit;
    return d;
}

AuditReport decidable_randomness_audit(const AxiomSet &axioms, int shots, std::uint64_t seed, bool include_identity) {
    AuditReport rep;
    rep.N = axioms.N();
    rep.seed = seed;
    const Eigen::VectorXcd psi = axiom_state(axioms);
    const auto thetas = all_pauli_strings(rep.N);
    std::vector<std::uint64_t> seeds(thetas.size());
    std::mt19937_64 master(seed);
    for (auto &s : seeds) s = master();
    for (std::size_t t = 0; t < thetas.size(); ++t) {
        if (!include_identity && thetas[t].is_identity()) continue;
        AuditEntry e;
        e.theta = thetas[t];
        e.decision = decidability_test(axioms, thetas[t]);
        e.stats = measure_pauli(psi, thetas[t], shots, seeds[t]);
        e.uniform = std::abs(e.stats.p_plus - 0.5) < 1e-10;
        if (e.decision.decidable) {
            double expected = e.decision.quantum_bit ? 0.0 : 1.0;
            e.consistent = e.stats.deterministic && std::abs(e.stats.p_plus - expected) < 1e-10;
        } else {
            bool commuting = true;
            for (const auto &op : axioms.ops) commuting = commuting && commutes(op, thetas[t]);
            e.consistent = e.uniform && !commuting;
        }
        rep.decidable_count += e.decision.decidable;
        rep.deterministic_count += e.stats.deterministic;
        rep.uniform_count += e.uniform;
        rep.all_consistent = rep.all_consistent && e.consistent;
        rep.entries.push_back(e);
    }
    return rep;
}

GHZReport ghz_contradiction() {
    const AxiomSet axioms = AxiomSet::ghz();
    Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    GHZReport r;
    for (const auto &op : axioms.ops) r.axiom_expectations.push_back(ghz.dot(apply_pauli(op, ghz)).real());
    const PauliString xxx = PauliString::parse("XXX");
    Decision d = decidability_test(axioms, xxx);
    r.k = d.k;
    r.classical_bit = d.derived_bit;
    r.xxx_expectation = ghz.dot(apply_pauli(xxx, ghz)).real();
    r.quantum_bit = r.xxx_expectation > 0 ? 0 : 1;
    r.product_phase_sign = d.phase_bit ? -1 : 1;
    Eigen::MatrixXcd prod = pauli_matrix(axioms.ops[0]) * pauli_matrix(axioms.ops[1]) * pauli_matrix(axioms.ops[2]);
    r.product_verified = (prod - double(r.product_phase_sign) * pauli_matrix(xxx)).norm() < 1e-12;
    return r;
}

}  // namespace macroreal
