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

#ifndef MACROREAL_COARSE_GRAIN_HPP
#define MACROREAL_COARSE_GRAIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "macroreal/sphere.hpp"
#include "macroreal/spin.hpp"

namespace macroreal {

enum class PartitionMode { aligned, hemispheres };

/// Slots of adjacent m values, numbered from the north pole down.
///
/// Edges are cut points on the m axis, from +j+1/2 down to -j-1/2. Slot s
/// holds the m with edges[s+1] <= m < edges[s]; its polar band has
/// cos(theta) = edge / (j+1/2) at both ends.
struct SlotPartition {
    SpinLength j;
    double delta_m = 1.0;
    PartitionMode mode = PartitionMode::aligned;
    std::vector<double> edges;
    std::vector<std::vector<int>> slots;  // basis indices
    std::vector<std::pair<double, double>> bands;

    int size() const {
        return static_cast<int>(slots.size());
    }
    /// Slot containing basis index i.
    int slot_of(int i) const;
    /// Slot whose band contains polar angle theta.
    int band_of(double theta) const;
};

/// Throws std::invalid_argument unless 1 <= delta_m <= 2j+1 (aligned mode).
SlotPartition make_partition(SpinLength j, double delta_m, PartitionMode mode = PartitionMode::aligned);

/// Partition from explicit edges (descending, first = j+1/2, last = -j-1/2).
SlotPartition make_partition_from_edges(SpinLength j, std::vector<double> edges);

/// Delta m >= 2 sqrt(j): the reported (not enforced) coarse-graining predicate.
bool is_coarse(const SlotPartition &part);

/// Sharp 0/1 diagonal projector onto a slot.
Operator vn_slot_projector(const SlotPartition &part, int slot);

/// Smooth-POVM coefficient for basis eigenvalue k (a half-integer value)
/// and polar band [theta1, theta2].
double povm_coefficient(SpinLength j, std::pair<double, double> band, double k);

/// Diagonal POVM elements and their square-root Kraus operators.
struct CoarsePOVM {
    SpinLength j;
    std::vector<RealVector> elements;
    std::vector<RealVector> kraus;

    int size() const {
        return static_cast<int>(elements.size());
    }
    Operator element(int s) const;
    Operator kraus_operator(int s) const;
};

CoarsePOVM build_povm(const SlotPartition &part);
/// The sharp projectors of `part` packaged as a POVM.
CoarsePOVM build_vn_povm(const SlotPartition &part);

/// Tr[rho P_s].
RealVector slot_probabilities(const SpinState &state, const CoarsePOVM &povm);
/// The same probabilities from integrating Q over each band.
RealVector slot_probabilities_from_q(const SpinState &state, const SlotPartition &part);

/// M_s rho M_s / w_s. Throws std::domain_error if w_s <= 1e-14.
SpinState reduce_state(const SpinState &state, const CoarsePOVM &povm, int slot);

/// Non-selective post-measurement state: sum over s of M_s rho M_s.
Operator measured_mixture(const Operator &rho, const CoarsePOVM &povm);

/// Overlap of Q(rho) and the weighted mixture of reduced-state Q's.
double mixture_overlap(const SpinState &state, const CoarsePOVM &povm, const SphereGrid &grid);
inline double mixture_condition_gap(const SpinState &state, const CoarsePOVM &povm, const SphereGrid &grid) {
    return 1.0 - mixture_overlap(state, povm, grid);
}
/// On the default grid for the spin length.
double mixture_condition_gap(const SpinState &state, const CoarsePOVM &povm);

/// 1 - overlap between Q at tj without measurement and Q at tj of the
/// branch mixture measured at ti.
double noninvasiveness_gap(
    const SpinState &rho0, const Evolution &evolution, const CoarsePOVM &povm, double ti, double tj,
    const SphereGrid &grid);
double noninvasiveness_gap(
    const SpinState &rho0, const Evolution &evolution, const CoarsePOVM &povm, double ti, double tj);

struct LeakageReport {
    double max_leakage = 0.0;
    double border_fraction = 0.0;  // leakage > 0.1
    std::vector<double> leakages;
};

/// leakage = 1 - max_s || P_s U(t) |Omega> ||^2 for every (direction, time)
/// pair of the sample.
LeakageReport sufficient_condition_check(
    const Evolution &evolution, const CoarsePOVM &povm, const std::vector<Direction> &directions,
    const std::vector<double> &times);

/// Closed form via kappa: sin[(2j+1) kappa/2] / [(2j+1) sin(kappa/2)].
double quantum_char_fn(SpinLength j, double xi, double eta, double theta);
/// sin[(2j+1) k/2] / [(2j+1) k/2], k^2 = xi^2 + eta^2 + 2 xi eta cos(theta).
double classical_char_fn(SpinLength j, double xi, double eta, double theta);

/// Sum over m1, m2 of exp(i(xi m1 + eta m2)) p(m1; m2) for the maximally
/// mixed state, a Jz measurement, rotation exp(-i theta Jx), Jz measurement.
double brute_force_char_fn(SpinLength j, double xi, double eta, double theta);

struct MonteCarloEstimate {
    double mean;
    double standard_error;
};
/// Isotropic classical spins of length j + 1/2, seeded.
MonteCarloEstimate classical_char_fn_monte_carlo(
    SpinLength j, double xi, double eta, double theta, int64_t samples, uint64_t seed);

}  // namespace macroreal

#endif
