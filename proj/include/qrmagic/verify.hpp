// Copyright 2026 The qrmagic Authors
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

#ifndef QRMAGIC_VERIFY_HPP_
#define QRMAGIC_VERIFY_HPP_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qrmagic/distill.hpp"
#include "qrmagic/pipeline.hpp"
#include "qrmagic/serialize.hpp"
#include "qrmagic/sim.hpp"

namespace qrmagic {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> skipped;

    bool passed() const {
        for (auto &c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    Json to_json() const {
        Json arr = Json::array();
        for (auto &c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return Json{{"suite", suite}, {"passed", passed()}, {"checks", arr}, {"skipped", skipped}};
    }
};

struct TableThreshold {
    int64_t p;
    unsigned d;
    double value;
};

/// Published thresholds; 0 marks a length without a distillation region.
inline const std::vector<TableThreshold> &published_thresholds() {
    static const std::vector<TableThreshold> t{
        {5, 2, 0.34535},  {23, 2, 0.32237}, {29, 2, 0.24190}, {47, 2, 0.05050}, {53, 2, 0.27343},
        {71, 2, 0.00664}, {7, 2, 0},        {13, 2, 0},       {31, 2, 0},       {37, 2, 0},
        {61, 2, 0},       {11, 3, 0.38715}, {17, 3, 0.34394}, {23, 3, 0.16636}, {41, 3, 0.31877},
        {5, 3, 0},        {29, 3, 0},       {47, 3, 0}};
    return t;
}

struct TableDistance {
    int64_t p;
    unsigned d;
    unsigned classical;
};

inline const std::vector<TableDistance> &published_distances() {
    static const std::vector<TableDistance> t{
        {5, 2, 4},   {7, 2, 4},   {13, 2, 6},  {23, 2, 8},  {29, 2, 12}, {31, 2, 8},
        {37, 2, 12}, {47, 2, 12}, {53, 2, 16}, {61, 2, 18}, {71, 2, 12}, {5, 3, 4},
        {11, 3, 6},  {17, 3, 8},  {23, 3, 9},  {29, 3, 12}, {41, 3, 14}, {47, 3, 15}};
    return t;
}

/// Span of the cyclic shifts of u(x) a(x), with a(x) a random mix of (x-1)
/// and (x^n-1)/(x^m-1) factors; resampled until 1 < k < n and both the code
/// and its dual have at most 2^20 words.
inline LinearCode random_cyclic_code(std::mt19937_64 &rng) {
    static const unsigned orders[] = {2, 3, 4, 9};
    for (;;) {
        unsigned q = orders[rng() % 4];
        size_t n = 3 + rng() % 9;
        FieldSpec f = FieldSpec::of_order(q);
        SmallField F(f);
        Row u(n);
        for (auto &c : u) c = (uint8_t)(rng() % q);
        auto mul_shift_sum = [&](const Row &a, size_t m) {
            // a(x) (1 + x^m + x^2m + ...) mod x^n - 1, m | n
            Row r(n, 0);
            for (size_t s = 0; s < n; s += m) {
                for (size_t j = 0; j < n; j++) r[(j + s) % n] = F.add(r[(j + s) % n], a[j]);
            }
            return r;
        };
        if (rng() % 2) {
            Row r(n, 0);
            for (size_t j = 0; j < n; j++) r[(j + 1) % n] = F.add(r[(j + 1) % n], u[j]);
            for (size_t j = 0; j < n; j++) r[j] = F.sub(r[j], u[j]);
            u = r;
        }
        if (rng() % 2) {
            std::vector<size_t> divs;
            for (size_t m = 1; m < n; m++) {
                if (n % m == 0) divs.push_back(m);
            }
            u = mul_shift_sum(u, divs[rng() % divs.size()]);
        }
        std::vector<Row> rows;
        for (size_t s = 0; s < n; s++) {
            Row r(n);
            for (size_t j = 0; j < n; j++) r[(j + s) % n] = u[j];
            rows.push_back(r);
        }
        LinearCode c = code_spanned_by(f, n, rows);
        size_t k = c.dimension();
        if (k > 1 && k < n && (double)std::max(k, n - k) * std::log2((double)q) <= 20.0) return c;
    }
}

namespace detail {

inline void check_enumerator(VerifyReport &rep, const std::string &name, const WeightEnumerator &got,
                             const WeightEnumerator &want) {
    rep.add(name, got == want, got == want ? "" : "coefficients differ");
}

}  // namespace detail

/// Published enumerators, thresholds, and code parameters replayed.
inline VerifyReport verify_tables(unsigned workers = 1) {
    VerifyReport rep;
    rep.suite = "tables";
    std::vector<std::pair<int64_t, unsigned>> brute{{5, 2}, {7, 2}, {13, 2}, {23, 2}, {29, 2}, {5, 3}, {11, 3}, {17, 3}};
    for (auto [p, d] : brute) {
        auto f = load_fixture(d * d, (size_t)p);
        if (!f) {
            rep.skipped.push_back("fixture q=" + std::to_string(d * d) + " p=" + std::to_string(p));
            continue;
        }
        std::string tag = "q=" + std::to_string(d * d) + " p=" + std::to_string(p);
        detail::check_enumerator(rep, "brute " + tag, stabilizer_enumerator(p, d, Method::brute, workers).w, f->w);
        detail::check_enumerator(rep, "invariant " + tag, invariant_stabilizer_enumerator(p, d), f->w);
    }
    for (auto [p, d] : std::vector<std::pair<int64_t, unsigned>>{{23, 3}, {37, 2}, {47, 2}}) {
        auto f = load_fixture(d * d, (size_t)p);
        if (!f) continue;
        detail::check_enumerator(rep, "invariant q=" + std::to_string(d * d) + " p=" + std::to_string(p),
                                 invariant_stabilizer_enumerator(p, d), f->w);
    }
    for (auto &t : published_thresholds()) {
        std::string tag = std::string(t.d == 2 ? "T" : "Strange") + " p=" + std::to_string(t.p);
        SourcedEnumerator e;
        try {
            e = stabilizer_enumerator(t.p, t.d, Method::automatic, workers);
        } catch (const InfeasibleError &err) {
            rep.skipped.push_back("threshold " + tag + ": " + err.what());
            continue;
        }
        ThresholdResult r = t.d == 2 ? t_threshold(e.w, choose_lambda(e.w)) : strange_threshold(e.w);
        bool ok = std::fabs(r.threshold - t.value) <= 1e-4;
        if (t.value == 0) {
            double fixed = t.d == 2 ? t_update_at_zero_exact(e.w, choose_lambda(e.w)).convert_to<double>()
                                    : strange_update_at_zero_exact(e.w).convert_to<double>();
            ok = r.threshold == 0 && std::fabs(fixed) < 1e-9;
        }
        rep.add("threshold " + tag, ok, "got " + format_double(r.threshold) + " (" + e.source + ")");
    }
    for (auto &t : published_distances()) {
        std::string tag = "distance d=" + std::to_string(t.d) + " p=" + std::to_string(t.p);
        LinearCode c = qr_code(t.p, t.d * t.d, QRVariant::expurgated);
        DistanceCertificate cert = classical_distance(c, t.classical, workers);
        rep.add(tag, cert.confirmed && quantum_distance_from_classical(t.classical) == t.classical - 1, cert.method);
    }
    for (auto [p, d] : std::vector<std::pair<int64_t, unsigned>>{
             {7, 2}, {23, 2}, {31, 2}, {47, 2}, {71, 2}, {5, 2}, {13, 2}, {11, 3}, {23, 3}, {47, 3}, {5, 3}}) {
        QuantumQRCode code = build_quantum_qr(p, d);
        bool css = is_css(code).css;
        rep.add("css d=" + std::to_string(d) + " p=" + std::to_string(p), css == is_css_length(p, d),
                css ? "css" : "not css");
    }
    return rep;
}

/// Dense simulation of the 5-qudit protocols against the formulas.
inline VerifyReport verify_oracle() {
    VerifyReport rep;
    rep.suite = "oracle";
    for (unsigned d : {2u, 3u}) {
        QuantumQRCode code = build_quantum_qr(5, d);
        WeightEnumerator w = brute_force_enumerator(code.classical);
        int lam = d == 2 ? choose_lambda(w) : 0, lam_sim = d == 2 ? simulated_lambda(code) : 0;
        double worst = 0;
        for (int i = 0; i < 10; i++) {
            double e = (i + 0.5) / 10;
            SimulationResult s = simulate_distillation(code, e);
            double ep = d == 2 ? (double)t_epsilon_update<long double>(w, e, lam)
                               : (double)strange_epsilon_update<long double>(w, e);
            double ps = d == 2 ? (double)t_success_probability<long double>(w, e)
                               : (double)strange_success_probability<long double>(w, e);
            double eps_sim = d == 2 ? simulated_t_update(s, lam_sim) : simulated_strange_update(s);
            worst = std::max({worst, std::fabs(ep - eps_sim), std::fabs(ps - s.success)});
        }
        rep.add("simulation vs formula p=5 d=" + std::to_string(d), worst < 1e-10, "max diff " + format_double(worst));
    }
    SimulationResult s0 = simulate_distillation(build_quantum_qr(5, 2), 0);
    rep.add("P_s(0) p=5 d=2 is 1/6", std::fabs(s0.success - 1.0 / 6) < 1e-12, format_double(s0.success));
    return rep;
}

/// Randomized and exhaustive identities.
inline VerifyReport verify_properties(unsigned instances = 100, uint64_t seed = 2026) {
    VerifyReport rep;
    rep.suite = "properties";
    std::mt19937_64 rng(seed);
    int bad_mw = 0, bad_prange = 0, bad_herm = 0;
    for (unsigned i = 0; i < instances; i++) {
        LinearCode c = random_cyclic_code(rng);
        WeightEnumerator w = brute_force_enumerator(c);
        LinearCode dual = euclidean_dual(c);
        if (macwilliams(w, c.q(), c.cardinality()) != brute_force_enumerator(dual)) bad_mw++;
        if (prange_puncture(w) != brute_force_enumerator(puncture(c, 0)) ||
            prange_shorten(w) != brute_force_enumerator(shorten(c, 0))) {
            bad_prange++;
        }
        if ((c.q() == 4 || c.q() == 9) &&
            macwilliams(w, c.q(), c.cardinality()) != brute_force_enumerator(hermitian_dual(c))) {
            bad_herm++;
        }
    }
    rep.add("MacWilliams on random cyclic codes", bad_mw == 0, std::to_string(bad_mw) + " mismatches");
    rep.add("Prange on random cyclic codes", bad_prange == 0, std::to_string(bad_prange) + " mismatches");
    rep.add("Hermitian MacWilliams on random cyclic codes", bad_herm == 0, std::to_string(bad_herm) + " mismatches");

    bool lemma = true;
    auto pts = qutrit_phase_space();
    for (size_t l = 1; l < pts.size(); l++) {
        // one generator per line: (1,0), (0,1), (1,1), (1,2)
        const SymplecticVector &g = pts[l];
        if (!(g == pts[1] || g == pts[3] || g == pts[4] || g == pts[7])) continue;
        for (uint8_t r = 0; r < 3; r++) {
            for (auto &u : pts) lemma = lemma && phase_space_lemma_check(1, {g}, {r}, u);
        }
    }
    rep.add("phase-space lemma, one qutrit, exhaustive", lemma);

    // two qutrits: random isotropic subspaces of dimension 1 or 2
    bool lemma2 = true;
    std::uniform_int_distribution<int> trit(0, 2);
    auto random_vec = [&] {
        SymplecticVector v(3, 2);
        for (size_t k = 0; k < 2; k++) {
            v.z[k] = (uint8_t)trit(rng);
            v.x[k] = (uint8_t)trit(rng);
        }
        return v;
    };
    SmallField F3(FieldSpec::prime(3));
    for (int s = 0; s < 40; s++) {
        SymplecticVector a = random_vec();
        if (a.is_zero()) continue;
        std::vector<SymplecticVector> basis{a};
        if (s % 2) {
            SymplecticVector b = random_vec();
            if (symplectic_form(a, b) == 0 && rank(F3, {a.to_row(), b.to_row()}) == 2) basis.push_back(b);
        }
        std::vector<uint8_t> signs;
        for (size_t i = 0; i < basis.size(); i++) signs.push_back((uint8_t)trit(rng));
        lemma2 = lemma2 && phase_space_lemma_check(2, basis, signs, random_vec());
    }
    rep.add("phase-space lemma, two qutrits, sampled", lemma2);

    bool rall = true;
    for (int64_t p = 3; p <= 29; p++) {
        if (!is_prime(p) || !quantum_qr_exists(p, 2)) continue;
        QuantumQRCode code = build_quantum_qr(p, 2);
        rall = rall && check_rall_consistency(code, code.signs) && check_transversal_m3(code, code.signs);
    }
    rep.add("Rall signs and transversal M3, qubit codes p <= 29", rall);

    for (int64_t p : {5, 23, 29, 47, 53, 71}) {
        SourcedEnumerator e = stabilizer_enumerator(p, 2, Method::automatic);
        int lam = choose_lambda(e.w);
        AsymptoticCheck a = t_asymptotic_check(e.w, lam);
        rep.add("quadratic order p=" + std::to_string(p), a.is_quadratic && theorem8_applies(p));
        WeightEnumerator ext = extended_from_expurgated(e.w, 4);
        std::mt19937_64 r2(seed + (uint64_t)p);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0;
        TContext<long double> ctx(e.w);
        for (int i = 0; i < 100; i++) {
            long double x = unif(r2);
            long double a1 = t_epsilon_update<long double>(ctx, x, lam);
            long double a2 = t_epsilon_update_from_extended<long double>(ext, x, lam);
            if (std::isfinite(a1) && std::isfinite(a2)) worst = std::max(worst, (double)std::fabs(a1 - a2));
        }
        rep.add("update path independence p=" + std::to_string(p), worst < 1e-10, "max diff " + format_double(worst));
    }

    int mismatches = 0;
    for (int64_t p = 3; p < 1000; p++) {
        if (!is_prime(p)) continue;
        for (int64_t d : {2, 3}) {
            if (p == d) continue;
            if (quantum_qr_exists(p, d) != quantum_qr_exists_by_congruence(p, d)) mismatches++;
        }
    }
    rep.add("existence congruence sweep p < 1000", mismatches == 0, std::to_string(mismatches) + " mismatches");
    return rep;
}

}  // namespace qrmagic

#endif  // QRMAGIC_VERIFY_HPP_
