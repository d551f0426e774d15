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

#ifndef MACROREAL_CAT_HPP
#define MACROREAL_CAT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "macroreal/coarse_grain.hpp"
#include "macroreal/leggett_garg.hpp"
#include "macroreal/spin.hpp"

namespace macroreal {

/// H = i omega (|-j><+j| - |+j><-j|).
struct CatModel {
    SpinLength j;
    double omega = 1.0;

    Operator hamiltonian() const;
    Evolution evolution() const;
};

/// cos(omega t)|+j> + sin(omega t)|-j>.
SpinState cat_state(const CatModel &model, double t);

/// Hemisphere correlations through the smooth POVM (or sharp projectors
/// when `sharp` is set), starting from |+j>.
double hemisphere_correlation(const CatModel &model, double ti, double tj, bool sharp = false);
LGResult hemisphere_lg(const CatModel &model, const std::array<double, 4> &t, bool sharp = false);

struct DecoherenceTrace {
    double dt = 0.0;
    double a = 0.0;
    std::vector<double> A;  // A[0] = 1
    /// Decay rate of |2 A_n - 1| ~ exp(-nu t). +inf when a = 1/2 exactly
    /// (mixed after one step), 0 when the trace never decays (a in {0, 1}).
    double nu = 0.0;
    int fit_points = 0;

    /// 1/2 (1 + exp(-nu t)).
    double fitted(double t) const;
};

/// Alternating free evolution and full dephasing, A_n = a A_{n-1} + (1-a)(1-A_{n-1}).
DecoherenceTrace decoherence_trace(const CatModel &model, double dt, int n_steps);

/// Closed form 1/2 (1 + (2a - 1)^n).
double decoherence_closed_form(double a, int n);

/// Survival law A(t) of |+j> (probability to be found at +j after t).
using SurvivalLaw = std::function<double(double)>;

/// |A(tj) - [A(ti) A(tj-ti) + (1-A(ti)) (1-A(tj-ti))]|.
double decohered_noninvasiveness(const SurvivalLaw &law, double ti, double tj);
/// Same, with the exponential law fitted in `trace` and times on its step grid.
double decohered_noninvasiveness(const DecoherenceTrace &trace, int step_i, int step_j);

struct CircuitResult {
    double amplitude_all_ones = 0.0;  // |1...1>
    double amplitude_all_zeros = 0.0; // |0...0>
    double residual_norm = 0.0;       // weight outside the two basis states
    int64_t gates = 0;
    std::vector<int64_t> gates_per_interval;
};

/// Rotate qubit 1, fan out with a CNOT ladder, undo the ladder before the
/// next rotation. Dense statevector, N <= 20.
CircuitResult cat_circuit_simulate(int n_qubits, double omega_dt, int n_intervals);

struct InfoBits {
    double sharp;
    double coarse;
};
/// sharp = 1 + log2 j, coarse = 1 - log2 c + 1/2 log2 j.
InfoBits info_bits(double j, double c);

}  // namespace macroreal

#endif
