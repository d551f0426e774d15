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

#ifndef MACROREAL_LEGGETT_GARG_HPP
#define MACROREAL_LEGGETT_GARG_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "macroreal/spin.hpp"

namespace macroreal {

/// Observable with outcomes +1 / -1 given by two complementary projectors.
struct DichotomicObservable {
    Operator plus;
    Operator minus;

    /// From a Hermitian involution A (A^2 = 1): P_pm = (1 pm A)/2.
    static DichotomicObservable from_involution(const Operator &a);
    /// Outcome + is the projector itself, - its complement.
    static DichotomicObservable from_projector(const Operator &p);
    bool is_valid(double tol = 1e-10) const;
};

/// C_ij from exact branch probabilities with the Lueders update at t_i.
/// Branches with zero probability contribute nothing.
double two_time_correlation(
    const Operator &rho0, const Evolution &evolution, const DichotomicObservable &obs, double ti, double tj);

/// Seeded sampling estimate of C_ij (sequential measurements at ti and tj).
double sampled_two_time_correlation(
    const Operator &rho0, const Evolution &evolution, const DichotomicObservable &obs, double ti, double tj,
    int64_t shots, uint64_t seed);

/// sin[(2j+1) x] / [(2j+1) sin x], x = omega * dt.
double analytic_parity_correlation(SpinLength j, double omega_dt);

struct LGResult {
    std::vector<double> correlations;
    double K = 0.0;
    double bound = 0.0;
    bool violated = false;
};

using CorrelationFn = std::function<double(double ti, double tj)>;

/// K = C12 + C23 + C34 - C14 <= 2.
LGResult lg_chsh(const CorrelationFn &correlation, const std::array<double, 4> &t);
/// K = C12 + C23 - C13 <= 1.
LGResult lg_wigner(const CorrelationFn &correlation, const std::array<double, 3> &t);

/// 3 sin x / x - sin 3x / (3x).
double analytic_k_parity(double x);
/// 3 cos x - cos 3x for spin 1/2 with x = omega * dt.
double analytic_k_spin_half(double omega_dt);

struct Extremum {
    double x;
    double value;
};
/// Maximum of analytic_k_parity: coarse scan of 1000 points on (0, x_max]
/// followed by golden-section refinement.
Extremum maximize_k_parity(double x_max = 3.0);
/// First x > x_peak where analytic_k_parity drops to 2 (bisection).
double k_parity_crossing(double x_peak, double x_max = 3.0);

/// K = 4 p1 sqrt(p2) cos(gamma) - 4 p2 + 1 with p1 = p(dt), p2 = p(2 dt).
double lg_wigner_survival(double p1, double p2, double gamma);
/// Two-level reduction: 2 cos(dE dt) - cos(2 dE dt).
double lg_wigner_two_level(double dE_dt);

/// sgn(cos omega ti) * sgn(cos omega tj) for a single rotor trajectory with
/// initial phase `phase`.
double classical_rotor_correlation(double omega, double ti, double tj, double phase = 0.0);
/// Average of classical_rotor_correlation over a uniform initial phase.
double classical_rotor_ensemble_correlation(double omega, double ti, double tj);

/// Exhaustive check over the 16 deterministic +-1 assignments; returns the
/// largest K attainable by a macrorealistic joint distribution.
double macrorealistic_k_max();

}  // namespace macroreal

#endif
