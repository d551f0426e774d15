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


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "macroreal/cat.hpp"
#include "macroreal/chain.hpp"
#include "macroreal/coarse_grain.hpp"
#include "macroreal/ensemble.hpp"
#include "macroreal/leggett_garg.hpp"
#include "macroreal/sphere.hpp"
#include "macroreal/undecidability.hpp"

namespace macroreal::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double to_real(const std::string &s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw UserError("not a number: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

SelfCheck check(std::string name, bool ok, double value) {
    std::ostringstream d;
    d.precision(12);
    d << value;
    return {std::move(name), ok, d.str()};
}

SpinLength spin_arg(double j) {
    try {
        return SpinLength::from_double(j);
    } catch (const std::invalid_argument &e) {
        throw UserError(e.what());
    }
}

Operator pole_rho(SpinLength j) {
    StateVector psi = StateVector::Zero(j.dim());
    psi(0) = 1;
    return psi * psi.adjoint();
}

std::vector<std::uint64_t> row_seeds(std::uint64_t seed, size_t count) {
    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> out(count);
    for (auto &s : out) s = master();
    return out;
}

void require_seed(const std::optional<std::uint64_t> &seed, const char *why) {
    if (!seed) throw UserError(std::string("--seed is required ") + why);
}

// lg-chsh

struct LgChsh {
    double j = 0.5;
    double omega = 1.0;
    std::string observable = "auto";
    std::string sweep = "0.7853981633974483";
    std::int64_t shots = 0;
    std::optional<std::uint64_t> seed;
};

Table run_lg_chsh(const LgChsh &p) {
    SpinLength j = spin_arg(p.j);
    std::string kind = p.observable == "auto" ? (j.twice() == 1 ? "spin-half" : "parity") : p.observable;
    if (kind == "spin-half" && j.twice() != 1) throw UserError("observable spin-half needs j = 0.5");
    if (!(p.omega > 0)) throw UserError("--omega must be positive");
    if (p.shots > 0) require_seed(p.seed, "when --shots > 0");
    auto ev = Evolution::rotation(j, p.omega);
    DichotomicObservable obs = kind == "spin-half"
                                   ? DichotomicObservable::from_involution(2.0 * build_spin_operators(j).Jz)
                                   : DichotomicObservable::from_involution(parity_operator(j));
    Operator rho = kind == "spin-half" ? pole_rho(j) : SpinState::maximally_mixed(j).rho;
    auto xs = parse_real_list(p.sweep);
    auto seeds = row_seeds(p.seed.value_or(0), xs.size());
    Table t;
    t.columns = {"omega_dt", "C12", "C23", "C34", "C14", "K", "K_analytic", "violated"};
    double best = -1e300;
    double best_x = kNaN;
    std::int64_t violated = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        if (!(x > 0)) continue;
        double dt = x / p.omega;
        std::uint64_t pair = 0;
        auto corr = [&](double a, double b) {
            if (p.shots > 0) return sampled_two_time_correlation(rho, ev, obs, a, b, p.shots, seeds[i] + pair++);
            return two_time_correlation(rho, ev, obs, a, b);
        };
        auto r = lg_chsh(corr, {0, dt, 2 * dt, 3 * dt});
        double analytic = kind == "spin-half" ? analytic_k_spin_half(x) : analytic_k_parity(j.dim() * x);
        t.add_row({x, r.correlations[0], r.correlations[1], r.correlations[2], r.correlations[3], r.K, analytic,
                   r.violated});
        violated += r.violated;
        if (r.K > best) {
            best = r.K;
            best_x = x;
        }
    }
    t.summary = {{"observable", kind}, {"K_max", best}, {"omega_dt_at_max", best_x}, {"violating_rows", violated}};
    return t;
}

std::vector<SelfCheck> selftest_lg_chsh() {
    LgChsh half;
    double k = std::get<double>(run_lg_chsh(half).rows.at(0).at(5));
    LgChsh parity;
    parity.j = 50;
    parity.sweep = std::to_string(1.054 / 101);
    double kp = std::get<double>(run_lg_chsh(parity).rows.at(0).at(5));
    return {check("spin-1/2 K at pi/4 equals 2 sqrt 2", std::abs(k - 2 * std::sqrt(2.0)) < 1e-9, k),
            check("parity K at j=50, x=1.054 near 2.481", std::abs(kp - 2.481) < 0.02, kp)};
}

// lg-wigner

struct LgWigner {
    double dE = 1.0;
    std::string sweep = "1.0471975511965976";
};

Table run_lg_wigner(const LgWigner &p) {
    if (!(p.dE > 0)) throw UserError("--dE must be positive");
    Operator h = Operator::Zero(2, 2);
    h(1, 1) = p.dE;
    StateVector psi(2);
    psi << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Operator rho = psi * psi.adjoint();
    Evolution ev(h);
    auto obs = DichotomicObservable::from_projector(rho);
    Table t;
    t.columns = {"dE_dt", "C12", "C23", "C13", "K", "K_closed_form", "violated"};
    double best = -1e300;
    double best_x = kNaN;
    for (double x : parse_real_list(p.sweep)) {
        if (!(x > 0)) continue;
        double dt = x / p.dE;
        auto r = lg_wigner([&](double a, double b) { return two_time_correlation(rho, ev, obs, a, b); },
                           {0, dt, 2 * dt});
        t.add_row({x, r.correlations[0], r.correlations[1], r.correlations[2], r.K, lg_wigner_two_level(x),
                   r.violated});
        if (r.K > best) {
            best = r.K;
            best_x = x;
        }
    }
    t.summary = {{"K_max", best}, {"dE_dt_at_max", best_x}};
    return t;
}

std::vector<SelfCheck> selftest_lg_wigner() {
    double k = std::get<double>(run_lg_wigner({}).rows.at(0).at(4));
    return {check("two-level K at pi/3 equals 1.5", std::abs(k - 1.5) < 1e-10, k)};
}

// parity-violation

struct ParityViolation {
    std::string sweep = "0.05:3:0.05";
    double j = 0;
};

Table run_parity_violation(const ParityViolation &p) {
    std::optional<SpinLength> j;
    if (p.j > 0) j = spin_arg(p.j);
    std::optional<Evolution> ev;
    DichotomicObservable obs;
    Operator rho;
    if (j) {
        ev = Evolution::rotation(*j, 1.0);
        obs = DichotomicObservable::from_involution(parity_operator(*j));
        rho = SpinState::maximally_mixed(*j).rho;
    }
    Table t;
    t.columns = {"x", "K_analytic", "K_matrix"};
    for (double x : parse_real_list(p.sweep)) {
        if (!(x > 0)) continue;
        double km = kNaN;
        if (j) {
            double dt = x / j->dim();
            km = lg_chsh([&](double a, double b) { return two_time_correlation(rho, *ev, obs, a, b); },
                         {0, dt, 2 * dt, 3 * dt})
                     .K;
        }
        t.add_row({x, analytic_k_parity(x), km});
    }
    auto peak = maximize_k_parity();
    t.summary = {{"peak_x", peak.x}, {"peak_K", peak.value}, {"crossing_x", k_parity_crossing(peak.x)}};
    return t;
}

std::vector<SelfCheck> selftest_parity_violation() {
    auto t = run_parity_violation({"1.054", 50});
    double x = std::get<double>(t.summary[0].second);
    double k = std::get<double>(t.summary[1].second);
    double c = std::get<double>(t.summary[2].second);
    double km = std::get<double>(t.rows.at(0).at(2));
    return {check("peak at x = 1.054 +- 0.005", std::abs(x - 1.054) <= 0.005, x),
            check("peak K = 2.481 +- 0.005", std::abs(k - 2.481) <= 0.005, k),
            check("crossing at 1.656 +- 0.01", std::abs(c - 1.656) <= 0.01, c),
            check("matrix pipeline j=50 within 0.02", std::abs(km - k) < 0.02, km)};
}

// coarse-overlap

struct CoarseOverlap {
    double j = 100;
    double delta_m = 0;
    std::string theta = "1.5707963267948966";
    double phi = 0;
};

Table run_coarse_overlap(const CoarseOverlap &p) {
    SpinLength j = spin_arg(p.j);
    if (j.twice() > 1600) throw UserError("--j above 800 is too large for the dense grid");
    SlotPartition part;
    try {
        part = p.delta_m > 0 ? make_partition(j, p.delta_m) : make_partition(j, 1, PartitionMode::hemispheres);
    } catch (const std::invalid_argument &e) {
        throw UserError(e.what());
    }
    auto povm = build_povm(part);
    auto grid = SphereGrid::for_spin(j);
    Table t;
    t.columns = {"theta", "phi", "overlap", "gap"};
    double worst = 1;
    for (double th : parse_real_list(p.theta)) {
        if (th < 0 || th > kPi) throw UserError("theta must lie in [0, pi]");
        auto st = SpinState::pure(j, coherent_state(j, {th, p.phi}));
        double o = mixture_overlap(st, povm, grid);
        t.add_row({th, p.phi, o, 1 - o});
        worst = std::min(worst, o);
    }
    t.summary = {{"slots", std::int64_t{part.size()}}, {"coarse", is_coarse(part)}, {"min_overlap", worst}};
    return t;
}

std::vector<SelfCheck> selftest_coarse_overlap() {
    CoarseOverlap p;
    p.j = 25;
    double o = std::get<double>(run_coarse_overlap(p).rows.at(0).at(2));
    return {check("equatorial overlap at j=25 is 0.997 +- 0.003", std::abs(o - 0.997) <= 0.003, o)};
}

// char-fn

struct CharFn {
    double j = 10000;
    double scale = 0.1;
    std::string theta = "0.3,1,2";
    std::int64_t samples = 0;
    std::optional<std::uint64_t> seed;
};

Table run_char_fn(const CharFn &p) {
    SpinLength j = spin_arg(p.j);
    if (p.samples > 0) require_seed(p.seed, "when --samples > 0");
    double x = p.scale / std::sqrt(j.value());
    auto thetas = parse_real_list(p.theta);
    auto seeds = row_seeds(p.seed.value_or(0), thetas.size());
    Table t;
    t.columns = {"theta", "xi", "eta", "quantum", "classical", "abs_diff", "mc_mean", "mc_stderr"};
    double worst = 0;
    for (size_t i = 0; i < thetas.size(); ++i) {
        double q = quantum_char_fn(j, x, x, thetas[i]);
        double c = classical_char_fn(j, x, x, thetas[i]);
        double mean = kNaN;
        double se = kNaN;
        if (p.samples > 0) {
            auto mc = classical_char_fn_monte_carlo(j, x, x, thetas[i], p.samples, seeds[i]);
            mean = mc.mean;
            se = mc.standard_error;
        }
        t.add_row({thetas[i], x, x, q, c, std::abs(q - c), mean, se});
        worst = std::max(worst, std::abs(q - c));
    }
    t.summary = {{"max_abs_diff", worst}};
    return t;
}

std::vector<SelfCheck> selftest_char_fn() {
    double diff = std::get<double>(run_char_fn({}).summary[0].second);
    auto j = SpinLength::from_double(2);
    double brute = std::abs(quantum_char_fn(j, 0.7, 1.1, 0.9) - brute_force_char_fn(j, 0.7, 1.1, 0.9));
    return {check("j=1e4, xi=eta=0.1/sqrt(j): |q - c| < 1e-3", diff < 1e-3, diff),
            check("closed form equals joint-probability sum at j=2", brute < 1e-10, brute)};
}

// cat-lg

struct CatLg {
    double j = 20;
    double omega = 1;
    std::string sweep = "0.39269908169872414";
    bool sharp = false;
};

Table run_cat_lg(const CatLg &p) {
    CatModel model{spin_arg(p.j), p.omega};
    if (!(p.omega > 0)) throw UserError("--omega must be positive");
    Table t;
    t.columns = {"omega_dt", "C12", "C23", "C34", "C14", "K", "K_cos_law", "violated"};
    double best = -1e300;
    for (double x : parse_real_list(p.sweep)) {
        if (!(x > 0)) continue;
        double dt = x / p.omega;
        auto r = hemisphere_lg(model, {0, dt, 2 * dt, 3 * dt}, p.sharp);
        // effective spin-1/2 turning by 2 omega t
        double law = 3 * std::cos(2 * x) - std::cos(6 * x);
        t.add_row({x, r.correlations[0], r.correlations[1], r.correlations[2], r.correlations[3], r.K, law,
                   r.violated});
        best = std::max(best, r.K);
    }
    t.summary = {{"K_max", best}};
    return t;
}

std::vector<SelfCheck> selftest_cat_lg() {
    double k = std::get<double>(run_cat_lg({}).rows.at(0).at(5));
    return {check("hemisphere K at omega dt = pi/8, j=20 equals 2 sqrt 2", std::abs(k - 2 * std::sqrt(2.0)) < 1e-6,
                  k)};
}

// decoherence

struct Decoherence {
    double j = 10;
    double omega = 1;
    double dt = 0.3141592653589793;
    int steps = 50;
};

Table run_decoherence(const Decoherence &p) {
    if (p.steps < 1 || p.steps > 1000000) throw UserError("--steps must lie in [1, 1e6]");
    CatModel model{spin_arg(p.j), p.omega};
    auto trace = decoherence_trace(model, p.dt, p.steps);
    Table t;
    t.columns = {"n", "t", "A_n", "closed_form", "fitted", "cos2_unmeasured"};
    for (int n = 0; n <= p.steps; ++n) {
        double time = n * p.dt;
        double c = std::cos(p.omega * time);
        t.add_row({std::int64_t{n}, time, trace.A[n], decoherence_closed_form(trace.a, n), trace.fitted(time), c * c});
    }
    t.summary = {{"a", trace.a}, {"nu", trace.nu}, {"fit_points", std::int64_t{trace.fit_points}}};
    return t;
}

std::vector<SelfCheck> selftest_decoherence() {
    auto t = run_decoherence({});
    double worst = 0;
    double fit = 0;
    for (const auto &row : t.rows) {
        worst = std::max(worst, std::abs(std::get<double>(row[2]) - std::get<double>(row[3])));
        fit = std::max(fit, std::abs(std::get<double>(row[2]) - std::get<double>(row[4])));
    }
    return {check("recurrence equals closed form to 1e-14", worst < 1e-14, worst),
            check("exponential fit within 0.01", fit < 0.01, fit)};
}

// cat-circuit

struct CatCircuit {
    int qubits = 3;
    double omega_dt = 0.3;
    int intervals = 1;
};

Table run_cat_circuit(const CatCircuit &p) {
    if (p.qubits < 1 || p.qubits > 20) throw UserError("--qubits must lie in [1, 20]");
    if (p.intervals < 1 || p.intervals > 2000) throw UserError("--intervals must lie in [1, 2000]");
    Table t;
    t.columns = {"interval", "angle", "amplitude_all_ones", "amplitude_all_zeros", "cos", "sin", "residual_norm",
                 "gates"};
    std::int64_t per = 0;
    for (int k = 1; k <= p.intervals; ++k) {
        auto r = cat_circuit_simulate(p.qubits, p.omega_dt, k);
        double angle = k * p.omega_dt;
        t.add_row({std::int64_t{k}, angle, r.amplitude_all_ones, r.amplitude_all_zeros, std::cos(angle),
                   std::sin(angle), r.residual_norm, r.gates});
        per = r.gates_per_interval.back();
    }
    t.summary = {{"gates_per_interval", per}, {"expected_per_interval", std::int64_t{2 * (p.qubits - 1) + 1}}};
    return t;
}

std::vector<SelfCheck> selftest_cat_circuit() {
    auto t = run_cat_circuit({});
    double ones = std::get<double>(t.rows[0][2]);
    double zeros = std::get<double>(t.rows[0][3]);
    double err = std::max(std::abs(ones - std::cos(0.3)), std::abs(zeros - std::sin(0.3)));
    auto ten = cat_circuit_simulate(10, 0.1, 1).gates;
    auto five = cat_circuit_simulate(5, 0.1, 1).gates;
    return {check("N=3, one interval at 0.3 gives (cos, sin)", err < 1e-12, err),
            check("gate tally ratio N=10 / N=5 is 19/9", ten * 9 == five * 19, double(ten) / double(five))};
}

// chain-epsilon

struct ChainEpsilon {
    double alpha = 0.99;
    std::string n = "1:12";
    std::string d = "0";
    int s = 0;
    int N = 0;
};

Table run_chain_epsilon(const ChainEpsilon &p) {
    if (!(p.alpha > 0 && p.alpha < 1)) throw UserError("--alpha must lie in (0, 1)");
    if (p.s < 0) throw UserError("--s must be >= 0");
    ChainParams params{p.alpha, std::nullopt};
    if (p.N > 0) params.N = p.N;
    auto ns = parse_int_list(p.n);
    auto ds = parse_int_list(p.d);
    for (int v : ns) {
        if (v < 1 || v > 500) throw UserError("--n values must lie in [1, 500]");
    }
    for (int v : ds) {
        if (v < 0 || v > 500) throw UserError("--d values must lie in [0, 500]");
    }
    Table t;
    t.columns = {"alpha", "n", "m", "s", "d", "epsilon", "duan"};
    std::int64_t entangled = 0;
    for (int d : ds) {
        for (int n : ns) {
            BlockSpec spec{n, p.s > 0 ? std::min(p.s, n) : n, d};
            if (params.N && 2 * spec.span() >= *params.N) throw UserError("--N too small for the block span");
            auto cov = block_covariance(params, spec);
            double e = epsilon(cov);
            entangled += e > 0;
            t.add_row({p.alpha, std::int64_t{n}, std::int64_t{spec.subblocks()}, std::int64_t{spec.s},
                       std::int64_t{d}, e, duan_witness(cov)});
        }
    }
    t.summary = {{"entangled_rows", entangled}};
    return t;
}

std::vector<SelfCheck> selftest_chain_epsilon() {
    ChainEpsilon p;
    p.n = "1:6";
    p.d = "1";
    std::string pattern;
    for (const auto &row : run_chain_epsilon(p).rows) pattern += std::get<double>(row[5]) > 0 ? '+' : '0';
    p.n = "12";
    p.d = "0";
    double prev = 1e300;
    bool ordered = true;
    for (int s : {1, 2, 5}) {
        p.s = s;
        double e = std::get<double>(run_chain_epsilon(p).rows.at(0).at(5));
        ordered = ordered && e < prev;
        prev = e;
    }
    return {{"alpha=0.99, d=1: entangled exactly for n = 2, 3, 4", pattern == "0+++00", pattern},
            {"periodic n=12: eps(s=1) > eps(s=2) > eps(s=5)", ordered, ordered ? "ordered" : "not ordered"}};
}

// field-propagator

struct FieldPropagator {
    double mass = 1;
    double L = 1;
    std::string r = "1.5:4:0.5";
    double cutoff = 0;
};

Table run_field_propagator(const FieldPropagator &p) {
    if (!(p.mass > 0)) throw UserError("--mass must be positive (mass 0 is infrared divergent)");
    if (!(p.L >= 1e-6)) throw UserError("--L must be >= 1e-6");
    std::optional<double> cutoff;
    if (p.cutoff > 0) cutoff = p.cutoff;
    Table t;
    t.columns = {"r", "D_phi", "D_pi", "epsilon"};
    double worst = 0;
    for (double r : parse_real_list(p.r)) {
        if (r < 0) throw UserError("--r values must be nonnegative");
        auto d = field_propagators(p.mass, p.L, r, cutoff);
        double e = kNaN;
        if (r > 0 && (cutoff || r != p.L)) {
            e = field_epsilon(p.mass, p.L, r, cutoff);
            worst = std::max(worst, e);
        }
        t.add_row({r, d.D_phi, d.D_pi, e});
    }
    t.summary = {{"commutator", field_commutator(p.L, cutoff)}, {"max_epsilon", worst}};
    return t;
}

std::vector<SelfCheck> selftest_field_propagator() {
    double worst = 0;
    for (double mass : {0.5, 2.0}) {
        FieldPropagator p;
        p.mass = mass;
        p.r = "1.5,2,4";
        p.cutoff = 100;
        worst = std::max(worst, std::get<double>(run_field_propagator(p).summary[1].second));
    }
    return {check("no entanglement for r > L", worst == 0, worst)};
}

// ensemble-dicke

struct EnsembleDicke {
    int N = 20;
    int n = 1;
};

Table run_ensemble_dicke(const EnsembleDicke &p) {
    if (p.N < 2 || p.N > 100000) throw UserError("--N must lie in [2, 1e5]");
    if (p.n < 1 || 2 * p.n > p.N) throw UserError("--n must lie in [1, N/2]");
    Table t;
    t.columns = {"N", "k", "d", "e", "f", "nu", "E_ab"};
    double best = 0;
    for (int k = 0; k <= p.N; ++k) {
        auto r = dicke_collective(p.N, k, p.n);
        t.add_row({std::int64_t{p.N}, std::int64_t{k}, r.d, r.e, r.f, r.nu, r.E_ab});
        best = std::max(best, r.E_ab);
    }
    t.summary = {{"E_max", best}, {"half_over_N_minus_1", 0.5 / (p.N - 1)}};
    return t;
}

std::vector<SelfCheck> selftest_ensemble_dicke() {
    auto t = run_ensemble_dicke({});
    double e = std::get<double>(t.summary[0].second);
    double brute = 0;
    for (int k = 0; k <= 4; ++k) {
        brute = std::max(brute, std::abs(dicke_collective(4, k, 1).E_ab - negativity(dicke_pair_brute_force(4, k))));
    }
    return {check("E_ab(k = N/2) = 1/(2(N-1)) at N=20", std::abs(e - 0.5 / 19) < 1e-12, e),
            check("N=4 matches the explicit state", brute < 1e-10, brute)};
}

// ensemble-singlet

struct EnsembleSinglet {
    std::string n = "1:20";
};

Table run_ensemble_singlet(const EnsembleSinglet &p) {
    Table t;
    t.columns = {"n", "s", "t_ii", "E_ab", "E_brute_force"};
    for (int n : parse_int_list(p.n)) {
        if (n < 1) throw UserError("--n values must be >= 1");
        double brute = n <= 6 ? negativity(virtual_qubit_state(singlet_moments_brute_force(n))) : kNaN;
        t.add_row({std::int64_t{n}, n / 2.0, -(n + 2.0) / (3.0 * n), singlet_collective(n), brute});
    }
    return t;
}

std::vector<SelfCheck> selftest_ensemble_singlet() {
    double worst = 0;
    for (const auto &row : run_ensemble_singlet({"1:6"}).rows) {
        double n = static_cast<double>(std::get<std::int64_t>(row[0]));
        worst = std::max(worst, std::abs(std::get<double>(row[3]) - 1 / (2 * n)));
        worst = std::max(worst, std::abs(std::get<double>(row[4]) - 1 / (2 * n)));
    }
    return {check("E_ab = 1/(2n), closed form and explicit state", worst < 1e-10, worst)};
}

// ensemble-admixture

struct EnsembleAdmixture {
    std::string n = "1:10";
    std::string p = "0:1:0.1";
};

Table run_ensemble_admixture(const EnsembleAdmixture &a) {
    Table t;
    t.columns = {"n", "s", "p", "t_xx", "t_zz", "E_ab", "n_c"};
    for (double p : parse_real_list(a.p)) {
        if (p < 0 || p > 1) throw UserError("--p values must lie in [0, 1]");
        for (int n : parse_int_list(a.n)) {
            if (n < 1) throw UserError("--n values must be >= 1");
            auto r = admixture_collective(n, p);
            t.add_row({std::int64_t{n}, n / 2.0, p, r.t_xx, r.t_zz, r.E_ab, r.n_c});
        }
    }
    return t;
}

std::vector<SelfCheck> selftest_ensemble_admixture() {
    auto t = run_ensemble_admixture({"2", "0.5"});
    double e = std::get<double>(t.rows.at(0).at(5));
    double nc = std::get<double>(t.rows.at(0).at(6));
    auto m = collective_moments(admixture_state(2, 0.5), 2);
    double brute = negativity(virtual_qubit_state(m));
    return {check("p=0.5: n_c = 3", nc == 3, nc), check("p=0.5, n=2: E_ab = 1/16", std::abs(e - 1.0 / 16) < 1e-12, e),
            check("explicit state agrees", std::abs(brute - e) < 1e-10, brute)};
}

// undecidability-audit

struct UndecidabilityAudit {
    int N = 2;
    std::string axioms = "bell";
    std::string bits;
    int shots = 10000;
    std::optional<std::uint64_t> seed;
};

AxiomSet build_axioms(const UndecidabilityAudit &p) {
    AxiomSet a;
    if (p.axioms == "z") {
        a = AxiomSet::z_basis(p.N);
    } else if (p.axioms == "bell") {
        a = AxiomSet::bell();
    } else if (p.axioms == "ghz") {
        a = AxiomSet::ghz();
    } else if (p.axioms == "random") {
        a = AxiomSet::random(p.N, *p.seed);
    } else {
        try {
            for (const auto &s : split(p.axioms, ',')) a.ops.push_back(PauliString::parse(s));
        } catch (const std::invalid_argument &e) {
            throw UserError(e.what());
        }
        a.bits.assign(a.ops.size(), 0);
    }
    if (!p.bits.empty()) {
        auto bits = parse_int_list(p.bits);
        if (bits.size() != a.ops.size()) throw UserError("--bits needs one bit per axiom");
        for (size_t i = 0; i < bits.size(); ++i) a.bits[i] = bits[i] & 1;
    }
    if (a.N() != p.N) throw UserError("--N does not match the axiom set (" + std::to_string(a.N()) + " sites)");
    try {
        a.validate();
    } catch (const std::invalid_argument &e) {
        throw UserError(e.what());
    }
    return a;
}

Table run_undecidability_audit(const UndecidabilityAudit &p) {
    require_seed(p.seed, "for undecidability-audit");
    if (p.N < 1 || p.N > 6) throw UserError("--N must lie in [1, 6]");
    if (p.shots < 0) throw UserError("--shots must be >= 0");
    AxiomSet axioms = build_axioms(p);
    auto rep = decidable_randomness_audit(axioms, p.shots, *p.seed);
    Table t;
    t.columns = {"theta", "decidable", "k", "derived_bit", "phase_bit", "quantum_bit", "p_plus", "deterministic",
                 "plus_count", "frequency", "consistent"};
    for (const auto &e : rep.entries) {
        double freq = p.shots > 0 ? double(e.stats.plus_count) / p.shots : kNaN;
        t.add_row({e.theta.str(), e.decision.decidable, std::int64_t{e.decision.k}, std::int64_t{e.decision.derived_bit},
                   std::int64_t{e.decision.phase_bit}, std::int64_t{e.decision.quantum_bit}, e.stats.p_plus,
                   e.stats.deterministic, std::int64_t{e.stats.plus_count}, freq, e.consistent});
    }
    std::string ops;
    for (size_t i = 0; i < axioms.ops.size(); ++i) {
        ops += (i ? " " : "") + axioms.ops[i].str() + "=" + std::to_string(axioms.bits[i]);
    }
    t.summary = {{"axioms", ops},
                 {"decidable_count", std::int64_t{rep.decidable_count}},
                 {"deterministic_count", std::int64_t{rep.deterministic_count}},
                 {"uniform_count", std::int64_t{rep.uniform_count}},
                 {"all_consistent", rep.all_consistent}};
    return t;
}

std::vector<SelfCheck> selftest_undecidability_audit() {
    std::vector<SelfCheck> out;
    for (int N = 1; N <= 4; ++N) {
        UndecidabilityAudit p;
        p.N = N;
        p.axioms = "random";
        p.shots = 1000;
        p.seed = 11 + N;
        auto t = run_undecidability_audit(p);
        auto dec = std::get<std::int64_t>(t.summary[1].second);
        bool consistent = std::get<bool>(t.summary[4].second);
        out.push_back(check("N=" + std::to_string(N) + ": 2^N decidable, determinism iff decidability",
                            dec == (1 << N) && consistent, double(dec)));
    }
    return out;
}

// ghz

Table run_ghz() {
    auto r = ghz_contradiction();
    AxiomSet a = AxiomSet::ghz();
    Table t;
    t.columns = {"operator", "expectation", "axiom_bit"};
    for (size_t i = 0; i < a.ops.size(); ++i) {
        t.add_row({a.ops[i].str(), r.axiom_expectations[i], std::int64_t{a.bits[i]}});
    }
    t.add_row({std::string("XXX"), r.xxx_expectation, std::int64_t{r.quantum_bit}});
    t.summary = {{"k", std::int64_t{r.k}},
                 {"classical_bit", std::int64_t{r.classical_bit}},
                 {"quantum_bit", std::int64_t{r.quantum_bit}},
                 {"product_phase_sign", std::int64_t{r.product_phase_sign}},
                 {"product_verified", r.product_verified}};
    return t;
}

std::vector<SelfCheck> selftest_ghz() {
    auto r = ghz_contradiction();
    return {check("classical derivation gives bit 1", r.classical_bit == 1, r.classical_bit),
            check("GHZ state gives XXX = +1 (bit 0)", r.quantum_bit == 0, r.xxx_expectation),
            check("YYX YXY XYY = -XXX by dense product", r.product_verified && r.product_phase_sign == -1,
                  r.product_phase_sign)};
}

}  // namespace

std::vector<double> parse_real_list(const std::string &text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        auto parts = split(text, ':');
        if (parts.size() < 2 || parts.size() > 3) throw UserError("range must be a:b or a:b:step, got '" + text + "'");
        double a = to_real(parts[0]);
        double b = to_real(parts[1]);
        double step = parts.size() == 3 ? to_real(parts[2]) : 1.0;
        if (!(step > 0) || b < a) throw UserError("range needs a <= b and step > 0: '" + text + "'");
        auto count = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9)) + 1;
        if (count > 1000000) throw UserError("range has more than 1e6 points");
        for (std::int64_t i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
        return out;
    }
    for (const auto &s : split(text, ',')) out.push_back(to_real(s));
    if (out.empty()) throw UserError("empty value list");
    return out;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (double v : parse_real_list(text)) {
        if (v != std::floor(v) || std::abs(v) > 1e9) throw UserError("expected integers in '" + text + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<Command> make_commands() {
    std::vector<Command> cmds;

    auto lg = std::make_shared<LgChsh>();
    cmds.push_back({"lg-chsh", "Four-time Leggett-Garg K for spin-1/2 or parity measurements under rotation",
                    [lg](CLI::App &app) {
                        app.add_option("--j", lg->j, "Spin length");
                        app.add_option("--omega", lg->omega, "Rotation frequency");
                        app.add_option("--observable", lg->observable, "auto, spin-half or parity")
                            ->check(CLI::IsMember({"auto", "spin-half", "parity"}));
                        app.add_option("--sweep-omega-dt", lg->sweep, "omega*dt values (a:b:step or list)");
                        app.add_option("--shots", lg->shots, "Sampled shots per correlation (0 = exact)");
                        app.add_option("--seed", lg->seed, "RNG seed (required with --shots)");
                    },
                    [lg] { return run_lg_chsh(*lg); }, selftest_lg_chsh});

    auto wg = std::make_shared<LgWigner>();
    cmds.push_back({"lg-wigner", "Three-time Wigner-type K for the two-level system",
                    [wg](CLI::App &app) {
                        app.add_option("--dE", wg->dE, "Level splitting");
                        app.add_option("--sweep-dE-dt", wg->sweep, "dE*dt values");
                    },
                    [wg] { return run_lg_wigner(*wg); }, selftest_lg_wigner});

    auto pv = std::make_shared<ParityViolation>();
    cmds.push_back({"parity-violation", "Large-spin parity K(x) curve, peak and crossing",
                    [pv](CLI::App &app) {
                        app.add_option("--sweep-x", pv->sweep, "x = (2j+1) omega dt values");
                        app.add_option("--j", pv->j, "Also run the matrix pipeline at this spin (0 = off)");
                    },
                    [pv] { return run_parity_violation(*pv); }, selftest_parity_violation});

    auto co = std::make_shared<CoarseOverlap>();
    cmds.push_back({"coarse-overlap", "Overlap of Q(rho) with its coarse-measured mixture for coherent states",
                    [co](CLI::App &app) {
                        app.add_option("--j", co->j, "Spin length");
                        app.add_option("--delta-m", co->delta_m, "Slot width (0 = hemispheres)");
                        app.add_option("--theta", co->theta, "Polar angles of the coherent state");
                        app.add_option("--phi", co->phi, "Azimuth");
                    },
                    [co] { return run_coarse_overlap(*co); }, selftest_coarse_overlap});

    auto cf = std::make_shared<CharFn>();
    cmds.push_back({"char-fn", "Quantum vs classical characteristic function at xi = eta = scale/sqrt(j)",
                    [cf](CLI::App &app) {
                        app.add_option("--j", cf->j, "Spin length");
                        app.add_option("--scale", cf->scale, "xi = eta = scale / sqrt(j)");
                        app.add_option("--theta", cf->theta, "Rotation angles");
                        app.add_option("--samples", cf->samples, "Monte Carlo samples (0 = off)");
                        app.add_option("--seed", cf->seed, "RNG seed (required with --samples)");
                    },
                    [cf] { return run_char_fn(*cf); }, selftest_char_fn});

    auto cl = std::make_shared<CatLg>();
    cmds.push_back({"cat-lg", "Hemisphere Leggett-Garg K under the cat Hamiltonian",
                    [cl](CLI::App &app) {
                        app.add_option("--j", cl->j, "Spin length");
                        app.add_option("--omega", cl->omega, "Cat frequency");
                        app.add_option("--sweep-omega-dt", cl->sweep, "omega*dt values");
                        app.add_flag("--sharp", cl->sharp, "Sharp hemisphere projectors instead of the POVM");
                    },
                    [cl] { return run_cat_lg(*cl); }, selftest_cat_lg});

    auto de = std::make_shared<Decoherence>();
    cmds.push_back({"decoherence", "Survival probabilities under alternating evolution and dephasing",
                    [de](CLI::App &app) {
                        app.add_option("--j", de->j, "Spin length");
                        app.add_option("--omega", de->omega, "Cat frequency");
                        app.add_option("--dt", de->dt, "Interval between dephasing events");
                        app.add_option("--steps", de->steps, "Number of intervals");
                    },
                    [de] { return run_decoherence(*de); }, selftest_decoherence});

    auto cc = std::make_shared<CatCircuit>();
    cmds.push_back({"cat-circuit", "CNOT-ladder circuit for the cat dynamics: amplitudes and gate tally",
                    [cc](CLI::App &app) {
                        app.add_option("--qubits", cc->qubits, "Number of qubits (<= 20)");
                        app.add_option("--omega-dt", cc->omega_dt, "Rotation angle per interval");
                        app.add_option("--intervals", cc->intervals, "Number of intervals");
                    },
                    [cc] { return run_cat_circuit(*cc); }, selftest_cat_circuit});

    auto ch = std::make_shared<ChainEpsilon>();
    cmds.push_back({"chain-epsilon", "Collective-block entanglement epsilon and Duan witness in the harmonic chain",
                    [ch](CLI::App &app) {
                        app.add_option("--alpha", ch->alpha, "Coupling in (0, 1)");
                        app.add_option("--n", ch->n, "Block sizes");
                        app.add_option("--d", ch->d, "Separations");
                        app.add_option("--s", ch->s, "Subblock size (0 = contiguous)");
                        app.add_option("--N", ch->N, "Finite chain length (0 = infinite)");
                    },
                    [ch] { return run_chain_epsilon(*ch); }, selftest_chain_epsilon});

    auto fp = std::make_shared<FieldPropagator>();
    cmds.push_back({"field-propagator", "Klein-Gordon collective propagators and epsilon for two regions",
                    [fp](CLI::App &app) {
                        app.add_option("--mass", fp->mass, "Field mass (> 0)");
                        app.add_option("--L", fp->L, "Averaging length");
                        app.add_option("--r", fp->r, "Center distances");
                        app.add_option("--cutoff", fp->cutoff, "Momentum cutoff (0 = none)");
                    },
                    [fp] { return run_field_propagator(*fp); }, selftest_field_propagator});

    auto dk = std::make_shared<EnsembleDicke>();
    cmds.push_back({"ensemble-dicke", "Collective negativity of Dicke states for k = 0..N",
                    [dk](CLI::App &app) {
                        app.add_option("--N", dk->N, "Number of spins");
                        app.add_option("--n", dk->n, "Sample size (1..N/2)");
                    },
                    [dk] { return run_ensemble_dicke(*dk); }, selftest_ensemble_dicke});

    auto sg = std::make_shared<EnsembleSinglet>();
    cmds.push_back({"ensemble-singlet", "Collective negativity of the generalized singlet",
                    [sg](CLI::App &app) { app.add_option("--n", sg->n, "Sample sizes"); },
                    [sg] { return run_ensemble_singlet(*sg); }, selftest_ensemble_singlet});

    auto ad = std::make_shared<EnsembleAdmixture>();
    cmds.push_back({"ensemble-admixture", "Singlet with z-correlated noise: E_ab and critical size",
                    [ad](CLI::App &app) {
                        app.add_option("--n", ad->n, "Sample sizes");
                        app.add_option("--p", ad->p, "Singlet weights");
                    },
                    [ad] { return run_ensemble_admixture(*ad); }, selftest_ensemble_admixture});

    auto ua = std::make_shared<UndecidabilityAudit>();
    cmds.push_back({"undecidability-audit", "Decidability vs measurement randomness over all Pauli strings",
                    [ua](CLI::App &app) {
                        app.add_option("--N", ua->N, "Number of qubits");
                        app.add_option("--axioms", ua->axioms, "z, bell, ghz, random or a list like ZZ,XX");
                        app.add_option("--bits", ua->bits, "Axiom truth bits, e.g. 0,1");
                        app.add_option("--shots", ua->shots, "Shots per measured string");
                        app.add_option("--seed", ua->seed, "RNG seed (required)");
                    },
                    [ua] { return run_undecidability_audit(*ua); }, selftest_undecidability_audit});

    cmds.push_back({"ghz", "GHZ contradiction: classical derivation vs quantum expectation",
                    [](CLI::App &) {}, run_ghz, selftest_ghz});
    return cmds;
}

}  // namespace macroreal::cli
