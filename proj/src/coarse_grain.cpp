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

#include "macroreal/coarse_grain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "macroreal/special.hpp"

namespace macroreal {

namespace {

constexpr double kPi = std::numbers::pi;

double edge_to_u(SpinLength j, double edge) {
    double c = std::clamp(edge / (j.value() + 0.5), -1.0, 1.0);
    return 0.5 * (1.0 + c);
}

double edge_to_theta(SpinLength j, double edge) {
    return std::acos(std::clamp(edge / (j.value() + 0.5), -1.0, 1.0));
}

double theta_to_u(double theta) {
    double c = std::cos(0.5 * theta);
    return c * c;
}

// I_u(j + k + 1, j - k + 1) for basis index i (k = m_i).
double band_cdf(SpinLength j, int i, double u) {
    double k = j.m_at(i);
    return incomplete_beta(j.value() + k + 1.0, j.value() - k + 1.0, u);
}

}  // namespace

int SlotPartition::slot_of(int i) const {
    double m = j.m_at(i);
    for (int s = 0; s < size(); s++) {
        if (edges[s + 1] <= m && m < edges[s]) {
            return s;
        }
    }
    throw std::out_of_range("basis index outside the partition");
}

int SlotPartition::band_of(double theta) const {
    for (int s = 0; s < size(); s++) {
        if (theta >= bands[s].first && theta <= bands[s].second) {
            return s;
        }
    }
    throw std::out_of_range("polar angle outside [0, pi]");
}

SlotPartition make_partition_from_edges(SpinLength j, std::vector<double> edges) {
    const double top = j.value() + 0.5;
    if (edges.size() < 2 || std::abs(edges.front() - top) > 1e-12 || std::abs(edges.back() + top) > 1e-12) {
        throw std::invalid_argument("partition edges must run from j+1/2 to -j-1/2");
    }
    for (size_t s = 0; s + 1 < edges.size(); s++) {
        if (!(edges[s] > edges[s + 1])) {
            throw std::invalid_argument("partition edges must be strictly decreasing");
        }
    }
    edges.front() = top;
    edges.back() = -top;
    SlotPartition part;
    part.j = j;
    part.edges = edges;
    part.slots.resize(edges.size() - 1);
    for (size_t s = 0; s + 1 < edges.size(); s++) {
        part.bands.emplace_back(edge_to_theta(j, edges[s]), edge_to_theta(j, edges[s + 1]));
    }
    for (int i = 0; i < j.dim(); i++) {
        part.slots[part.slot_of(i)].push_back(i);
    }
    double widest = 0;
    for (size_t s = 0; s + 1 < edges.size(); s++) {
        widest = std::max(widest, edges[s] - edges[s + 1]);
    }
    part.delta_m = widest;
    return part;
}

SlotPartition make_partition(SpinLength j, double delta_m, PartitionMode mode) {
    const double top = j.value() + 0.5;
    if (mode == PartitionMode::hemispheres) {
        SlotPartition part = make_partition_from_edges(j, {top, 0.0, -top});
        part.mode = mode;
        return part;
    }
    if (!(delta_m >= 1.0) || delta_m > j.dim()) {
        throw std::invalid_argument("delta_m must satisfy 1 <= delta_m <= 2j+1");
    }
    int count = static_cast<int>(std::ceil(j.dim() / delta_m - 1e-12));
    std::vector<double> edges;
    for (int s = 0; s < count; s++) {
        edges.push_back(top - s * delta_m);
    }
    edges.push_back(-top);
    SlotPartition part = make_partition_from_edges(j, edges);
    part.delta_m = delta_m;
    part.mode = mode;
    return part;
}

bool is_coarse(const SlotPartition &part) {
    return part.delta_m >= 2.0 * std::sqrt(part.j.value());
}

Operator vn_slot_projector(const SlotPartition &part, int slot) {
    if (slot < 0 || slot >= part.size()) {
        throw std::out_of_range("slot index out of range");
    }
    const int d = part.j.dim();
    Operator p = Operator::Zero(d, d);
    for (int i : part.slots[slot]) {
        p(i, i) = 1.0;
    }
    return p;
}

double povm_coefficient(SpinLength j, std::pair<double, double> band, double k) {
    if (std::abs(k) > j.value() + 1e-12) {
        throw std::invalid_argument("eigenvalue outside [-j, j]");
    }
    double a = j.value() + k + 1.0;
    double b = j.value() - k + 1.0;
    return incomplete_beta(a, b, theta_to_u(band.first)) - incomplete_beta(a, b, theta_to_u(band.second));
}

Operator CoarsePOVM::element(int s) const {
    return elements.at(s).cast<std::complex<double>>().asDiagonal();
}

Operator CoarsePOVM::kraus_operator(int s) const {
    return kraus.at(s).cast<std::complex<double>>().asDiagonal();
}

CoarsePOVM build_povm(const SlotPartition &part) {
    const int d = part.j.dim();
    const int n = part.size();
    CoarsePOVM povm;
    povm.j = part.j;
    povm.elements.assign(n, RealVector::Zero(d));
    for (int i = 0; i < d; i++) {
        std::vector<double> cdf(n + 1);
        for (int s = 0; s <= n; s++) {
            double u = edge_to_u(part.j, part.edges[s]);
            cdf[s] = (s == 0) ? 1.0 : (s == n) ? 0.0 : band_cdf(part.j, i, u);
        }
        for (int s = 0; s < n; s++) {
            povm.elements[s](i) = std::max(0.0, cdf[s] - cdf[s + 1]);
        }
    }
    for (int s = 0; s < n; s++) {
        povm.kraus.push_back(povm.elements[s].cwiseSqrt());
    }
    return povm;
}

CoarsePOVM build_vn_povm(const SlotPartition &part) {
    const int d = part.j.dim();
    CoarsePOVM povm;
    povm.j = part.j;
    for (int s = 0; s < part.size(); s++) {
        RealVector e = RealVector::Zero(d);
        for (int i : part.slots[s]) {
            e(i) = 1.0;
        }
        povm.elements.push_back(e);
        povm.kraus.push_back(e);
    }
    return povm;
}

RealVector slot_probabilities(const SpinState &state, const CoarsePOVM &povm) {
    RealVector diag = state.rho.diagonal().real();
    RealVector w(povm.size());
    for (int s = 0; s < povm.size(); s++) {
        w(s) = povm.elements[s].dot(diag);
    }
    return w;
}

RealVector slot_probabilities_from_q(const SpinState &state, const SlotPartition &part) {
    RealVector w(part.size());
    for (int s = 0; s < part.size(); s++) {
        w(s) = q_band_integral(state.j, state.rho, part.bands[s].first, part.bands[s].second);
    }
    return w;
}

SpinState reduce_state(const SpinState &state, const CoarsePOVM &povm, int slot) {
    if (slot < 0 || slot >= povm.size()) {
        throw std::out_of_range("slot index out of range");
    }
    double w = povm.elements[slot].dot(state.rho.diagonal().real());
    if (!(w > 1e-14)) {
        throw std::domain_error("reduce_state: outcome has vanishing probability");
    }
    const RealVector &m = povm.kraus[slot];
    SpinState out;
    out.j = state.j;
    out.rho = (m.asDiagonal() * state.rho * m.asDiagonal()) / w;
    if (state.psi) {
        out.psi = StateVector(m.cast<std::complex<double>>().cwiseProduct(*state.psi) / std::sqrt(w));
    }
    return out;
}

Operator measured_mixture(const Operator &rho, const CoarsePOVM &povm) {
    const int d = static_cast<int>(rho.rows());
    Operator out = Operator::Zero(d, d);
    for (int s = 0; s < povm.size(); s++) {
        const RealVector &m = povm.kraus[s];
        for (int b = 0; b < d; b++) {
            for (int a = 0; a < d; a++) {
                out(a, b) += m(a) * m(b) * rho(a, b);
            }
        }
    }
    return out;
}

double mixture_overlap(const SpinState &state, const CoarsePOVM &povm, const SphereGrid &grid) {
    GridDensity q = q_on_grid(state.j, state.rho, grid);
    GridDensity qm = q_on_grid(state.j, measured_mixture(state.rho, povm), grid);
    return bhattacharyya_overlap(grid, q, qm);
}

double mixture_condition_gap(const SpinState &state, const CoarsePOVM &povm) {
    return mixture_condition_gap(state, povm, SphereGrid::for_spin(state.j));
}

double noninvasiveness_gap(
    const SpinState &rho0, const Evolution &evolution, const CoarsePOVM &povm, double ti, double tj,
    const SphereGrid &grid) {
    if (tj < ti) {
        throw std::invalid_argument("noninvasiveness_gap requires ti <= tj");
    }
    Operator ui = evolution.at(ti);
    Operator u = evolution.at(tj - ti);
    Operator rho_i = ui * rho0.rho * ui.adjoint();
    Operator undisturbed = u * rho_i * u.adjoint();
    Operator measured = u * measured_mixture(rho_i, povm) * u.adjoint();
    GridDensity qa = q_on_grid(rho0.j, undisturbed, grid);
    GridDensity qb = q_on_grid(rho0.j, measured, grid);
    return 1.0 - bhattacharyya_overlap(grid, qa, qb);
}

double noninvasiveness_gap(
    const SpinState &rho0, const Evolution &evolution, const CoarsePOVM &povm, double ti, double tj) {
    return noninvasiveness_gap(rho0, evolution, povm, ti, tj, SphereGrid::for_spin(rho0.j));
}

LeakageReport sufficient_condition_check(
    const Evolution &evolution, const CoarsePOVM &povm, const std::vector<Direction> &directions,
    const std::vector<double> &times) {
    LeakageReport report;
    int border = 0;
    for (double t : times) {
        Operator u = evolution.at(t);
        for (const Direction &dir : directions) {
            StateVector psi = u * coherent_state(povm.j, dir);
            RealVector weights = psi.cwiseAbs2();
            double best = 0.0;
            for (int s = 0; s < povm.size(); s++) {
                best = std::max(best, povm.elements[s].cwiseAbs2().dot(weights));
            }
            double leak = std::max(0.0, 1.0 - best);
            report.leakages.push_back(leak);
            report.max_leakage = std::max(report.max_leakage, leak);
            border += leak > 0.1;
        }
    }
    if (!report.leakages.empty()) {
        report.border_fraction = static_cast<double>(border) / report.leakages.size();
    }
    return report;
}

double quantum_char_fn(SpinLength j, double xi, double eta, double theta) {
    double c = std::cos(0.5 * xi) * std::cos(0.5 * eta) - std::sin(0.5 * xi) * std::sin(0.5 * eta) * std::cos(theta);
    double half_kappa = std::acos(std::clamp(c, -1.0, 1.0));
    return sin_ratio(static_cast<double>(j.dim()), half_kappa);
}

double classical_char_fn(SpinLength j, double xi, double eta, double theta) {
    double k2 = xi * xi + eta * eta + 2.0 * xi * eta * std::cos(theta);
    double k = std::sqrt(std::max(0.0, k2));
    return sinc(0.5 * j.dim() * k);
}

double brute_force_char_fn(SpinLength j, double xi, double eta, double theta) {
    Operator u = rotation_evolution(j, theta);
    const int d = j.dim();
    double total = 0.0;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            double p = std::norm(u(b, a)) / d;
            total += std::cos(xi * j.m_at(a) + eta * j.m_at(b)) * p;
        }
    }
    return total;
}

MonteCarloEstimate classical_char_fn_monte_carlo(
    SpinLength j, double xi, double eta, double theta, int64_t samples, uint64_t seed) {
    if (samples < 2) {
        throw std::invalid_argument("need at least two samples");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double radius = j.value() + 0.5;
    const double ny = std::sin(theta);
    const double nz = std::cos(theta);
    double sum = 0.0;
    double sum2 = 0.0;
    for (int64_t s = 0; s < samples; s++) {
        double z = 2.0 * uniform(rng) - 1.0;
        double phi = 2.0 * kPi * uniform(rng);
        double y = std::sqrt(std::max(0.0, 1.0 - z * z)) * std::sin(phi);
        double v = std::cos(radius * (xi * z + eta * (ny * y + nz * z)));
        sum += v;
        sum2 += v * v;
    }
    double n = static_cast<double>(samples);
    double mean = sum / n;
    double var = std::max(0.0, sum2 / n - mean * mean);
    return {mean, std::sqrt(var / (n - 1.0))};
}

}  // namespace macroreal
