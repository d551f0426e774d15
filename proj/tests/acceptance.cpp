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


// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion passes when every check in it holds. Checks flagged as known
// gaps are expected to fail (the stated target is out of reach of a faithful
// implementation); they are still run and reported, and the process exits 0
// only if every failing check is a known gap.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "macroreal/cat.hpp"
#include "macroreal/chain.hpp"
#include "macroreal/coarse_grain.hpp"
#include "macroreal/ensemble.hpp"
#include "macroreal/leggett_garg.hpp"
#include "macroreal/sphere.hpp"
#include "macroreal/undecidability.hpp"

using namespace macroreal;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    std::string what;
    bool ok;
    bool known_gap = false;
};

class Checks {
   public:
    void add(bool ok, const char *fmt, auto... args) {
        char buf[256];
        std::snprintf(buf, sizeof buf, fmt, args...);
        list.push_back({buf, ok, false});
    }
    void gap(bool ok, const char *fmt, auto... args) {
        add(ok, fmt, args...);
        list.back().known_gap = true;
    }
    std::vector<Check> list;
};

struct Criterion {
    const char *name;
    double seconds;
    std::function<void(Checks &)> run;
};

SpinLength spin(double j) {
    return SpinLength::from_double(j);
}

Operator north_rho(SpinLength j) {
    StateVector psi = StateVector::Zero(j.dim());
    psi(0) = 1;
    return psi * psi.adjoint();
}

void spin_half_lg(Checks &c) {
    double analytic = analytic_k_spin_half(kPi / 4);
    c.add(std::abs(analytic - 2 * std::sqrt(2.0)) < 1e-10, "analytic K=%.15f", analytic);
    auto j = spin(0.5);
    auto ev = Evolution::rotation(j, 1.0);
    auto obs = DichotomicObservable::from_involution(2.0 * build_spin_operators(j).Jz);
    double dt = kPi / 4;
    auto r = lg_chsh([&](double a, double b) { return two_time_correlation(north_rho(j), ev, obs, a, b); },
                     {0, dt, 2 * dt, 3 * dt});
    c.add(std::abs(r.K - 2 * std::sqrt(2.0)) < 1e-9, "projective K=%.15f", r.K);
}

void parity_violation(Checks &c) {
    auto best = maximize_k_parity();
    double cross = k_parity_crossing(best.x);
    c.add(std::abs(best.x - 1.054) <= 0.005, "peak x=%.5f", best.x);
    c.add(std::abs(best.value - 2.481) <= 0.005, "peak K=%.5f", best.value);
    c.add(std::abs(cross - 1.656) <= 0.01, "crossing x=%.5f", cross);
    auto j = spin(50);
    auto ev = Evolution::rotation(j, 1.0);
    auto obs = DichotomicObservable::from_involution(parity_operator(j));
    Operator rho = SpinState::maximally_mixed(j).rho;
    double worst = 0;
    for (int i = 0; i <= 56; ++i) {
        double x = 0.2 + 0.05 * i;
        double dt = x / j.dim();
        auto r = lg_chsh([&](double a, double b) { return two_time_correlation(rho, ev, obs, a, b); },
                         {0, dt, 2 * dt, 3 * dt});
        worst = std::max(worst, std::abs(r.K - analytic_k_parity(x)));
    }
    c.add(worst < 0.02, "j=50 max |K_matrix - K_analytic| on [0.2,3] = %.5f", worst);
}

void wigner_two_level(Checks &c) {
    double k = lg_wigner_two_level(kPi / 3);
    c.add(std::abs(k - 1.5) < 1e-10, "closed form K=%.15f", k);
    Operator h = Operator::Zero(2, 2);
    h(1, 1) = 1.0;
    StateVector psi(2);
    psi << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Operator p = psi * psi.adjoint();
    Evolution ev(h);
    auto obs = DichotomicObservable::from_projector(p);
    double dt = kPi / 3;
    auto r = lg_wigner([&](double a, double b) { return two_time_correlation(p, ev, obs, a, b); }, {0, dt, 2 * dt});
    c.add(std::abs(r.K - 1.5) < 1e-10, "pipeline K=%.15f", r.K);
}

double hemisphere_overlap(double jv) {
    auto j = spin(jv);
    auto povm = build_povm(make_partition(j, 1, PartitionMode::hemispheres));
    auto eq = SpinState::pure(j, coherent_state(j, {kPi / 2, 0}));
    return mixture_overlap(eq, povm, SphereGrid::for_spin(j));
}

void hemisphere_worst_case(Checks &c) {
    double at100 = hemisphere_overlap(100);
    c.add(std::abs(at100 - 0.997) <= 0.002, "j=100 overlap=%.5f", at100);
    for (double jv : {25.0, 400.0}) {
        double o = hemisphere_overlap(jv);
        c.add(std::abs(o - 0.997) <= 0.003, "j=%g overlap=%.5f", jv, o);
    }
}

void rotation_macrorealism(Checks &c) {
    auto j = spin(100);
    auto povm = build_povm(make_partition(j, 1, PartitionMode::hemispheres));
    auto ev = Evolution::rotation(j, 1.0);
    auto start = SpinState::pure(j, coherent_state(j, {0, 0}));
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        double a = u(rng);
        double b = u(rng);
        worst = std::max(worst, noninvasiveness_gap(start, ev, povm, std::min(a, b), std::max(a, b)));
    }
    c.add(worst < 0.01, "rotation j=100 worst gap over 20 pairs=%.5f", worst);

    CatModel model{spin(20), 1.0};
    auto cat_povm = build_povm(make_partition(model.j, 1, PartitionMode::hemispheres));
    double gap = noninvasiveness_gap(cat_state(model, 0), model.evolution(), cat_povm, kPi / 4, kPi / 2);
    // Overlap of a pole with the even pole mixture is 1/sqrt(2): gap 0.293.
    c.gap(gap > 0.3, "cat j=20 gap at (pi/4, pi/2)=%.5f (target > 0.3)", gap);
}

void decoherence_restoration(Checks &c) {
    CatModel model{spin(10), 1.0};
    auto trace = decoherence_trace(model, kPi / 10, 50);
    double worst = 0;
    for (int i = 0; i <= 50; ++i) {
        for (int k = i; k <= 50; ++k) worst = std::max(worst, decohered_noninvasiveness(trace, i, k));
    }
    c.add(worst < 1e-10, "exponential law max gap=%.3e", worst);
    SurvivalLaw bare = [](double t) { return std::pow(std::cos(t), 2); };
    double best = 0;
    for (int i = 0; i <= 50; ++i) {
        for (int k = i; k <= 50; ++k) best = std::max(best, decohered_noninvasiveness(bare, i * trace.dt, k * trace.dt));
    }
    c.add(best > 0.1, "bare cos^2 law max gap=%.5f", best);
}

void char_fn_limit(Checks &c) {
    auto j = spin(10000);
    double inside = 0.1 / std::sqrt(j.value());
    double outside = 2 / std::sqrt(j.value());
    double worst_in = 0;
    double worst_out = 0;
    for (double theta : {0.3, 1.0, 2.0}) {
        worst_in = std::max(worst_in, std::abs(quantum_char_fn(j, inside, inside, theta) -
                                               classical_char_fn(j, inside, inside, theta)));
        worst_out = std::max(worst_out, std::abs(quantum_char_fn(j, outside, outside, theta) -
                                                 classical_char_fn(j, outside, outside, theta)));
    }
    c.add(worst_in < 1e-3, "xi=eta=0.1/sqrt(j): max diff=%.3e", worst_in);
    // The two closed forms differ only through the kappa - k term, O(xi^3).
    c.gap(worst_out > 0.05, "xi=eta=2/sqrt(j): max diff=%.3e (target > 0.05)", worst_out);
}

void chain_structure(Checks &c) {
    ChainParams params{0.99, std::nullopt};
    auto table = TwoPointTable::compute(params, 80);
    auto eps = [&](const BlockSpec &spec) { return epsilon(block_covariance(table, spec)); };
    bool contiguous = true;
    for (int n = 1; n <= 8; ++n) contiguous = contiguous && eps(BlockSpec::contiguous(n, 0)) > 0;
    c.add(contiguous, "d=0, n=1..8 all entangled: %s", contiguous ? "yes" : "no");
    std::string pattern;
    for (int n = 1; n <= 6; ++n) pattern += eps(BlockSpec::contiguous(n, 1)) > 0 ? '+' : '0';
    c.add(pattern == "0+++00", "d=1, n=1..6 pattern %s", pattern.c_str());
    int stray = 0;
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 12; ++n) stray += eps(BlockSpec::contiguous(n, d)) > 0;
    }
    c.add(stray == 0, "d>=2, n<=12 entangled cases: %d", stray);
    double s1 = eps(BlockSpec{12, 1, 0});
    double s2 = eps(BlockSpec{12, 2, 0});
    double s5 = eps(BlockSpec{12, 5, 0});
    c.add(s1 > s2 && s2 > s5, "n=12 periodic eps s=1,2,5: %.4f > %.4f > %.4f", s1, s2, s5);
}

void field_null(Checks &c) {
    int points = 0;
    double largest = 0;
    double largest_cut = 0;
    for (double mass : {0.5, 1.0, 2.0}) {
        for (double L : {1.0, 2.0}) {
            for (double ratio : {1.5, 2.0, 4.0}) {
                largest = std::max(largest, field_epsilon(mass, L, ratio * L));
                largest_cut = std::max(largest_cut, field_epsilon(mass, L, ratio * L, 100.0 / L));
                ++points;
            }
        }
    }
    c.add(points >= 18 && largest == 0, "%d points, max eps=%g", points, largest);
    c.add(largest_cut == 0, "with k cutoff 100/L, max eps=%g", largest_cut);
}

void ensemble_closed_forms(Checks &c) {
    double dicke = 0;
    for (int N : {4, 8, 20}) dicke = std::max(dicke, std::abs(dicke_collective(N, N / 2, 1).E_ab - 1.0 / (2 * (N - 1))));
    c.add(dicke < 1e-12, "Dicke k=N/2 max error=%.2e", dicke);
    double singlet = 0;
    for (int n = 1; n <= 20; ++n) singlet = std::max(singlet, std::abs(singlet_collective(n) - 1.0 / (2 * n)));
    c.add(singlet < 1e-12, "singlet max error=%.2e", singlet);
    bool critical = true;
    for (int i = 1; i <= 9; ++i) {
        double p = i / 10.0;
        double n_c = admixture_collective(1, p).n_c;
        critical = critical && n_c == std::ceil((1 + p) / (1 - p) - 1e-9);
        for (int n = 1; n <= 25; ++n) critical = critical && ((admixture_collective(n, p).E_ab > 0) == (n < n_c));
    }
    c.add(critical, "admixture n_c for p=0.1..0.9: %s", critical ? "ok" : "mismatch");
    double brute = 0;
    for (int N : {4, 6, 8}) {
        for (int k = 0; k <= N; ++k) {
            brute = std::max(brute, (dicke_collective(N, k, 1).pair - dicke_pair_brute_force(N, k)).norm());
        }
    }
    for (int n = 1; n <= 5; ++n) {
        brute = std::max(brute, std::abs(negativity(virtual_qubit_state(singlet_moments_brute_force(n))) -
                                         singlet_collective(n)));
    }
    for (int n = 1; n <= 3; ++n) {
        for (double p : {0.2, 0.6, 0.9}) {
            auto m = collective_moments(admixture_state(n, p), n);
            brute = std::max(brute, std::abs(negativity(virtual_qubit_state(m)) - admixture_collective(n, p).E_ab));
        }
    }
    c.add(brute < 1e-10, "brute-force oracles max deviation=%.2e", brute);
}

void undecidability_audit(Checks &c) {
    const int shots = 10000;
    bool counts = true;
    bool equivalence = true;
    int undecidable = 0;
    int outside = 0;
    for (int N = 1; N <= 4; ++N) {
        auto rep = decidable_randomness_audit(AxiomSet::random(N, 500 + N), shots, 77 + N);
        counts = counts && rep.decidable_count == (1 << N);
        equivalence = equivalence && rep.all_consistent && rep.deterministic_count == rep.decidable_count &&
                      rep.uniform_count == (1 << (2 * N)) - (1 << N);
        for (const auto &e : rep.entries) {
            if (e.decision.decidable) continue;
            ++undecidable;
            double sigma = std::sqrt(0.25 / shots);
            if (std::abs(double(e.stats.plus_count) / shots - 0.5) > 3 * sigma) ++outside;
        }
    }
    c.add(counts, "decidable count 2^N for N=1..4: %s", counts ? "yes" : "no");
    c.add(equivalence, "determinism <=> decidability (1e-10): %s", equivalence ? "yes" : "no");
    // 3 sigma excursions are expected in 0.27% of the undecidable cases.
    int allowed = static_cast<int>(std::ceil(0.0027 * undecidable + 3 * std::sqrt(0.0027 * undecidable)));
    c.add(outside <= allowed, "undecidable frequencies beyond 3 sigma: %d of %d (allowed %d)", outside, undecidable,
          allowed);
    auto ghz = ghz_contradiction();
    c.add(ghz.classical_bit == 1 && ghz.quantum_bit == 0 && ghz.product_phase_sign == -1 && ghz.product_verified,
          "GHZ classical %d, quantum %d, product sign %d", ghz.classical_bit, ghz.quantum_bit, ghz.product_phase_sign);
}

void property_suites(Checks &c) {
    const std::complex<double> i(0, 1);
    double algebra = 0;
    for (double jv : {0.5, 1.0, 1.5, 5.0, 20.0, 50.0}) {
        auto ops = build_spin_operators(spin(jv));
        algebra = std::max(algebra, (ops.Jx * ops.Jy - ops.Jy * ops.Jx - i * ops.Jz).cwiseAbs().maxCoeff());
        algebra = std::max(algebra, (ops.Jy * ops.Jz - ops.Jz * ops.Jy - i * ops.Jx).cwiseAbs().maxCoeff());
    }
    c.add(algebra < 1e-10, "spin commutators max residual=%.2e", algebra);

    double completeness = 0;
    double kraus = 0;
    for (double jv : {0.5, 3.0, 25.0, 100.0}) {
        auto j = spin(jv);
        for (double dm : {2.0, std::ceil(2 * std::sqrt(jv))}) {
            if (dm > j.dim()) continue;
            auto povm = build_povm(make_partition(j, dm));
            RealVector total = RealVector::Zero(j.dim());
            for (int s = 0; s < povm.size(); ++s) {
                total += povm.elements[s];
                kraus = std::max(kraus, (povm.kraus[s].cwiseAbs2() - povm.elements[s]).cwiseAbs().maxCoeff());
            }
            completeness = std::max(completeness, (total.array() - 1).abs().maxCoeff());
        }
    }
    c.add(completeness < 1e-10 && kraus < 1e-10, "POVM completeness %.2e, Kraus %.2e", completeness, kraus);

    double round_trip = 0;
    for (double jv : {0.5, 1.0, 2.5, 6.0, 10.0}) {
        auto j = spin(jv);
        auto grid = SphereGrid::for_spin(j);
        auto st = SpinState::pure(j, coherent_state(j, {0.9, 2.0}));
        round_trip = std::max(round_trip,
                              (reconstruct_from_p(j, p_on_grid(st, grid), grid) - st.rho).cwiseAbs().maxCoeff());
    }
    c.add(round_trip < 1e-6, "Q/P round trip j<=10 max error=%.2e", round_trip);

    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    double gap = 1;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PairState> pairs;
        for (int k = 0; k < 9; ++k) {
            Eigen::Matrix4cd a;
            for (auto &x : a.reshaped()) x = {g(rng), g(rng)};
            PairState rho = a * a.adjoint();
            pairs.push_back(rho / rho.trace().real());
        }
        gap = std::min(gap, proposition1_check(pairs).gap);
    }
    c.add(gap >= -1e-12, "convexity gap min over 200 ensembles=%.3e", gap);
    double kmax = macrorealistic_k_max();
    c.add(kmax == 2.0, "macrorealistic K max by enumeration=%g", kmax);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"spin-half-lg-maximum", 1, spin_half_lg},
        {"large-spin-parity-violation", 30, parity_violation},
        {"two-level-wigner-maximum", 1, wigner_two_level},
        {"which-hemisphere-worst-case", 120, hemisphere_worst_case},
        {"rotation-macrorealism", 300, rotation_macrorealism},
        {"decoherence-restoration", 60, decoherence_restoration},
        {"characteristic-function-limit", 60, char_fn_limit},
        {"chain-entanglement-structure", 60, chain_structure},
        {"field-null-result", 300, field_null},
        {"ensemble-closed-forms", 30, ensemble_closed_forms},
        {"undecidability-audit", 60, undecidability_audit},
        {"property-suites", 300, property_suites},
    };
    int failed = 0;
    int unexpected = 0;
    for (const auto &crit : criteria) {
        Checks checks;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit.run(checks);
        } catch (const std::exception &e) {
            checks.add(false, "exception: %s", e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        checks.add(seconds < crit.seconds, "runtime %.2f s (limit %g s)", seconds, crit.seconds);
        bool ok = std::all_of(checks.list.begin(), checks.list.end(), [](const Check &k) { return k.ok; });
        bool only_gaps = std::all_of(checks.list.begin(), checks.list.end(),
                                     [](const Check &k) { return k.ok || k.known_gap; });
        failed += !ok;
        unexpected += !only_gaps;
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", crit.name);
        for (const auto &k : checks.list) {
            std::printf("    [%s] %s\n", k.ok ? "ok" : (k.known_gap ? "known gap" : "FAILED"), k.what.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed; %d failed only on known gaps\n", int(criteria.size()) - failed,
                criteria.size(), failed - unexpected);
    return unexpected == 0 ? 0 : 1;
}
