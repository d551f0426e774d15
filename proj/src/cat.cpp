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

#include "macroreal/cat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace macroreal {

namespace {

using C = std::complex<double>;

// Correlation of the +-1 slot outcome (slot 0 = +1, slot 1 = -1) between
// measurements at ti and tj, Kraus update at ti.
double two_outcome_povm_correlation(
    const Operator &rho0, const Evolution &evolution, const CoarsePOVM &povm, double ti, double tj) {
    if (povm.size() != 2) {
        throw std::invalid_argument("two-outcome POVM expected");
    }
    Operator ui = evolution.at(ti);
    Operator rho_i = ui * rho0 * ui.adjoint();
    Operator m_plus = povm.kraus_operator(0);
    Operator m_minus = povm.kraus_operator(1);
    Operator signed_branches = m_plus * rho_i * m_plus - m_minus * rho_i * m_minus;
    Operator u = evolution.at(tj - ti);
    Operator evolved = u * signed_branches * u.adjoint();
    RealVector a = povm.elements[0] - povm.elements[1];
    return a.dot(evolved.diagonal().real());
}

}  // namespace

Operator CatModel::hamiltonian() const {
    const int d = j.dim();
    Operator h = Operator::Zero(d, d);
    h(d - 1, 0) = C(0, omega);
    h(0, d - 1) = C(0, -omega);
    return h;
}

Evolution CatModel::evolution() const {
    return Evolution(hamiltonian());
}

SpinState cat_state(const CatModel &model, double t) {
    const int d = model.j.dim();
    StateVector v = StateVector::Zero(d);
    v(0) += std::cos(model.omega * t);
    v(d - 1) += std::sin(model.omega * t);
    return SpinState::pure(model.j, v);
}

double hemisphere_correlation(const CatModel &model, double ti, double tj, bool sharp) {
    SlotPartition part = make_partition(model.j, 1.0, PartitionMode::hemispheres);
    CoarsePOVM povm = sharp ? build_vn_povm(part) : build_povm(part);
    Operator rho0 = cat_state(model, 0.0).rho;
    return two_outcome_povm_correlation(rho0, model.evolution(), povm, ti, tj);
}

LGResult hemisphere_lg(const CatModel &model, const std::array<double, 4> &t, bool sharp) {
    SlotPartition part = make_partition(model.j, 1.0, PartitionMode::hemispheres);
    CoarsePOVM povm = sharp ? build_vn_povm(part) : build_povm(part);
    Operator rho0 = cat_state(model, 0.0).rho;
    Evolution evolution = model.evolution();
    return lg_chsh(
        [&](double ti, double tj) {
            return two_outcome_povm_correlation(rho0, evolution, povm, ti, tj);
        },
        t);
}

double DecoherenceTrace::fitted(double t) const {
    if (std::isinf(nu)) {
        return t > 0 ? 0.5 : 1.0;
    }
    return 0.5 * (1.0 + std::exp(-nu * t));
}

DecoherenceTrace decoherence_trace(const CatModel &model, double dt, int n_steps) {
    if (n_steps < 1) {
        throw std::invalid_argument("n_steps must be >= 1");
    }
    DecoherenceTrace trace;
    trace.dt = dt;
    double c = std::cos(model.omega * dt);
    trace.a = c * c;
    trace.A.resize(n_steps + 1);
    trace.A[0] = 1.0;
    for (int n = 1; n <= n_steps; n++) {
        double prev = trace.A[n - 1];
        trace.A[n] = trace.a * prev + (1.0 - trace.a) * (1.0 - prev);
    }
    double sty = 0.0;
    double stt = 0.0;
    for (int n = 0; n <= n_steps; n++) {
        double y = std::abs(2.0 * trace.A[n] - 1.0);
        if (y <= 1e-6) {
            continue;
        }
        double t = n * dt;
        sty += t * std::log(y);
        stt += t * t;
        trace.fit_points++;
    }
    if (trace.fit_points <= 1 || stt == 0.0) {
        trace.nu = std::numeric_limits<double>::infinity();
    } else {
        trace.nu = std::max(0.0, -sty / stt);
    }
    if (dt == 0.0) {
        trace.nu = 0.0;
    }
    return trace;
}

double decoherence_closed_form(double a, int n) {
    return 0.5 * (1.0 + std::pow(2.0 * a - 1.0, n));
}

double decohered_noninvasiveness(const SurvivalLaw &law, double ti, double tj) {
    if (tj < ti) {
        throw std::invalid_argument("decohered_noninvasiveness requires ti <= tj");
    }
    double ai = law(ti);
    double a_rest = law(tj - ti);
    return std::abs(law(tj) - (ai * a_rest + (1.0 - ai) * (1.0 - a_rest)));
}

double decohered_noninvasiveness(const DecoherenceTrace &trace, int step_i, int step_j) {
    return decohered_noninvasiveness(
        [&](double t) {
            return trace.fitted(t);
        },
        step_i * trace.dt, step_j * trace.dt);
}

CircuitResult cat_circuit_simulate(int n_qubits, double omega_dt, int n_intervals) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw std::invalid_argument("cat_circuit_simulate supports 1 <= N <= 20 qubits");
    }
    if (n_intervals < 0) {
        throw std::invalid_argument("n_intervals must be nonnegative");
    }
    const size_t dim = size_t{1} << n_qubits;
    std::vector<double> amp(dim, 0.0);
    amp[dim - 1] = 1.0;
    CircuitResult result;

    auto cnot = [&](int control, int target) {
        size_t cmask = size_t{1} << control;
        size_t tmask = size_t{1} << target;
        for (size_t i = 0; i < dim; i++) {
            if ((i & cmask) && !(i & tmask)) {
                std::swap(amp[i], amp[i | tmask]);
            }
        }
        result.gates++;
    };
    auto rotate_first = [&](double angle) {
        double c = std::cos(angle);
        double s = std::sin(angle);
        for (size_t i = 0; i < dim; i += 2) {
            double a0 = amp[i];
            double a1 = amp[i + 1];
            amp[i] = c * a0 + s * a1;
            amp[i + 1] = c * a1 - s * a0;
        }
        result.gates++;
    };

    for (int k = 0; k < n_intervals; k++) {
        int64_t before = result.gates;
        for (int q = n_qubits - 2; q >= 0; q--) {
            cnot(q, q + 1);
        }
        rotate_first(omega_dt);
        for (int q = 0; q + 1 < n_qubits; q++) {
            cnot(q, q + 1);
        }
        result.gates_per_interval.push_back(result.gates - before);
    }
    result.amplitude_all_ones = amp[dim - 1];
    result.amplitude_all_zeros = (dim > 1) ? amp[0] : 0.0;
    double rest = 0.0;
    for (size_t i = 1; i + 1 < dim; i++) {
        rest += amp[i] * amp[i];
    }
    result.residual_norm = std::sqrt(rest);
    return result;
}

InfoBits info_bits(double j, double c) {
    if (!(j >= 1.0) || !(c >= 1.0)) {
        throw std::invalid_argument("info_bits requires j >= 1 and c >= 1");
    }
    return {1.0 + std::log2(j), 1.0 - std::log2(c) + 0.5 * std::log2(j)};
}

}  // namespace macroreal
