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

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "qrmagic/qrmagic.hpp"

using namespace qrmagic;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string &what) {
        ok = false;
        detail << " [" << what << "]";
    }
};

using Pairs = std::vector<std::pair<int64_t, unsigned>>;

unsigned workers() {
    unsigned w = std::thread::hardware_concurrency();
    return w ? w : 1;
}

std::string tag(int64_t p, unsigned d) {
    return "p=" + std::to_string(p) + " d=" + std::to_string(d);
}

WeightEnumerator published(int64_t p, unsigned d) {
    auto f = load_fixture(d * d, (size_t)p);
    if (!f) throw std::runtime_error("no published enumerator for " + tag(p, d));
    return f->w;
}

const Pairs kBrute{{5, 2}, {7, 2}, {13, 2}, {23, 2}, {29, 2}, {5, 3}, {11, 3}, {17, 3}};

void criterion1(Outcome &o) {
    for (auto [p, d] : kBrute) {
        auto w = stabilizer_enumerator(p, d, Method::brute, workers()).w;
        if (w != published(p, d)) o.fail("brute " + tag(p, d) + " differs");
    }
}

void criterion2(Outcome &o) {
    Pairs all = kBrute;
    all.push_back({23, 3});
    for (auto [p, d] : all) {
        if (invariant_stabilizer_enumerator(p, d) != published(p, d)) o.fail("invariant " + tag(p, d) + " differs");
    }
}

void thresholds(Outcome &o, unsigned d, const std::vector<int64_t> &lengths) {
    for (int64_t p : lengths) {
        double want = 0;
        for (auto &t : published_thresholds()) {
            if (t.p == p && t.d == d) want = t.value;
        }
        auto e = stabilizer_enumerator(p, d, Method::automatic, workers());
        ThresholdResult r = d == 2 ? t_threshold(e.w, choose_lambda(e.w)) : strange_threshold(e.w);
        o.detail << " " << p << ":" << format_double(r.threshold).substr(0, 9) << "(" << e.source << ")";
        if (std::fabs(r.threshold - want) > 1e-4) o.fail(tag(p, d) + " off by " + format_double(r.threshold - want));
    }
}

void criterion5(Outcome &o) {
    auto one = [&](int64_t p, unsigned d) {
        SourcedEnumerator e;
        try {
            e = stabilizer_enumerator(p, d, Method::automatic, workers());
        } catch (const InfeasibleError &err) {
            o.fail(tag(p, d) + " has no enumerator: " + err.what());
            return;
        }
        double fixed;
        ThresholdResult r;
        if (d == 2) {
            int lambda = choose_lambda(e.w);
            fixed = t_update_at_zero_exact(e.w, lambda).convert_to<double>();
            r = t_threshold(e.w, lambda);
        } else {
            fixed = strange_update_at_zero_exact(e.w).convert_to<double>();
            r = strange_threshold(e.w);
        }
        o.detail << " " << tag(p, d) << ":" << r.threshold;
        if (r.threshold != 0) o.fail(tag(p, d) + " distills");
        if (std::fabs(fixed) > 1e-9) o.fail(tag(p, d) + " eps'(0) = " + format_double(fixed));
    };
    for (int64_t p : {7, 13, 31, 37, 61}) one(p, 2);
    for (int64_t p : {5, 29, 47}) one(p, 3);
}

void criterion6(Outcome &o) {
    for (auto &t : published_distances()) {
        QuantumQRCode code = build_quantum_qr(t.p, t.d);
        auto comp = symplectic_complement(t.d, (size_t)t.p, code.basis);
        SmallField F(FieldSpec::prime(t.d));
        bool k_one = rank(F, code.basis_rows()) == (size_t)t.p - 1 && comp.size() == (size_t)t.p + 1 &&
                     is_isotropic(code.basis);
        if (!k_one) o.fail(tag(t.p, t.d) + " does not encode one qudit");
        DistanceCertificate cert = classical_distance(code.classical, t.classical, workers());
        if (!cert.confirmed) o.fail(tag(t.p, t.d) + " distance not confirmed (" + cert.method + ")");
        if (quantum_distance(code, t.classical) != t.classical - 1) o.fail(tag(t.p, t.d) + " quantum distance");
    }
    for (auto [p, d] : Pairs{{7, 2}, {23, 2}, {31, 2}, {47, 2}, {71, 2}, {11, 3}, {23, 3}, {47, 3}}) {
        if (!is_css(build_quantum_qr(p, d)).css) o.fail(tag(p, d) + " not CSS");
    }
    for (auto [p, d] : Pairs{{5, 2}, {13, 2}, {29, 2}, {5, 3}, {17, 3}}) {
        if (is_css(build_quantum_qr(p, d)).css) o.fail(tag(p, d) + " unexpectedly CSS");
    }
}

void report(Outcome &o, const VerifyReport &rep) {
    for (auto &c : rep.checks) {
        if (!c.passed) o.fail(c.name + ": " + c.detail);
    }
    o.detail << " " << rep.checks.size() << " checks";
}

void criterion9(Outcome &o) {
    int checked = 0;
    for (int64_t p = 3; p < 1000; p++) {
        if (!is_prime(p)) continue;
        for (int64_t d : {2, 3}) {
            if (p == d) continue;
            checked++;
            if (quantum_qr_exists(p, d) != quantum_qr_exists_by_congruence(p, d)) o.fail(tag(p, (unsigned)d));
        }
    }
    o.detail << " " << checked << " (p, d) pairs";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        std::function<void(Outcome &)> run;
    };
    std::vector<Criterion> criteria{
        {1, "brute-force enumerators equal the published tables", criterion1},
        {2, "invariant reconstruction equals the published tables", criterion2},
        {3, "T thresholds within 1e-4", [](Outcome &o) { thresholds(o, 2, {5, 23, 29, 47, 53, 71}); }},
        {4, "Strange thresholds within 1e-4", [](Outcome &o) { thresholds(o, 3, {11, 17, 23, 41}); }},
        {5, "non-distilling lengths have threshold 0 and eps'(0) = 0", criterion5},
        {6, "k = 1, distances and CSS flags", criterion6},
        {7, "dense simulation equals the formulas", [](Outcome &o) { report(o, verify_oracle()); }},
        {8, "property suites", [](Outcome &o) { report(o, verify_properties()); }},
        {9, "existence rule equals the congruence form for p < 1000", criterion9},
    };
    int failures = 0;
    for (auto &c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s (%.1f s)%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
        failures += !o.ok;
    }
    return failures ? 1 : 0;
}
