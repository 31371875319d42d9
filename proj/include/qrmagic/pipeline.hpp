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

#ifndef QRMAGIC_PIPELINE_HPP_
#define QRMAGIC_PIPELINE_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "qrmagic/code.hpp"
#include "qrmagic/fixtures.hpp"
#include "qrmagic/numth.hpp"
#include "qrmagic/weights.hpp"

namespace qrmagic {

enum class Method { automatic, brute, invariant, fixture };

inline const char *method_name(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::brute: return "brute";
        case Method::invariant: return "invariant";
        default: return "fixture";
    }
}

inline Method parse_method(const std::string &s) {
    if (s == "auto") return Method::automatic;
    if (s == "brute") return Method::brute;
    if (s == "invariant") return Method::invariant;
    if (s == "fixture") return Method::fixture;
    throw std::invalid_argument("unknown method '" + s + "'");
}

/// Raised when a method cannot run at the requested size.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kAutoBruteLimit = 268435456.0;  // 2^28 codewords
inline constexpr double kAutoInvariantBudget = 1.5e9;    // window-search steps auto will spend
inline constexpr double kInvariantBudget = 5e9;         // hard cap for an explicit request

/// Stabilizer weight enumerator W_I with where it came from.
struct SourcedEnumerator {
    WeightEnumerator w;
    Method method = Method::brute;
    std::string source;  // "computed" or "fixture"
};

struct InvariantPlan {
    InvariantRing ring = InvariantRing::f4;
    size_t n = 0;       // extended length
    size_t wmax = 0;    // counts A_0..A_wmax of the expurgated code
    int window = 0;     // support budget in the cyclic window
    double cost = 0;
};

inline InvariantPlan invariant_plan(int64_t p, unsigned d) {
    require_qudit_dim(d);
    InvariantPlan plan;
    plan.ring = d == 2 ? InvariantRing::f4 : InvariantRing::f9;
    plan.n = (size_t)p + 1;
    plan.wmax = invariant_required_weight(plan.ring, plan.n);
    size_t k = (size_t)(p - 1) / 2;
    plan.window = cyclic_window_budget(plan.wmax, k, (size_t)p);
    plan.cost = search_cost(d * d, k, plan.window);
    return plan;
}

/// Extended-code counts from expurgated ones: shortening gives A_i = (n-i) A~_i / n.
inline std::vector<BigInt> extended_low_from_expurgated(const std::vector<BigInt> &low, size_t n) {
    std::vector<BigInt> out;
    for (size_t i = 0; i < low.size(); i++) {
        if (i >= n) throw std::invalid_argument("weight reaches the extended length");
        out.push_back(detail::exact_div(low[i] * n, BigInt(n - i), "extended count"));
    }
    return out;
}

/// Full extended-code enumerator from the expurgated one of a code whose
/// extension is Hermitian self-dual: invert the shortening for i < n and fill
/// A~_n from the total q^(n/2).
inline WeightEnumerator extended_from_expurgated(const WeightEnumerator &w, unsigned q) {
    size_t n = w.n + 1;
    auto low = extended_low_from_expurgated(w.coeffs, n);
    BigInt card = 1;
    for (size_t i = 0; i < n / 2; i++) card *= q;
    BigInt sum = 0;
    for (auto &a : low) sum += a;
    if (sum > card) throw std::invalid_argument("expurgated enumerator is too large for a self-dual extension");
    low.push_back(card - sum);
    return WeightEnumerator(std::move(low));
}

/// Low-weight counts, invariant-ring reconstruction of the extended code,
/// then shortening back to the expurgated code.
inline WeightEnumerator invariant_stabilizer_enumerator(int64_t p, unsigned d, double budget = kInvariantBudget) {
    InvariantPlan plan = invariant_plan(p, d);
    if (plan.cost > budget) {
        throw InfeasibleError("invariant reconstruction at p=" + std::to_string(p) + " needs about " +
                              std::to_string((long long)plan.cost) + " search steps; use --method fixture");
    }
    LinearCode c = qr_code(p, d * d, QRVariant::expurgated);
    auto low = low_weight_counts_cyclic(c, plan.wmax);
    auto ext_low = extended_low_from_expurgated(low, plan.n);
    WeightEnumerator ext = plan.ring == InvariantRing::f4 ? invariant_reconstruct_f4(plan.n, ext_low)
                                                          : invariant_reconstruct_f9(plan.n, ext_low);
    WeightEnumerator w = prange_shorten(ext);
    WeightEnumerator trimmed(std::vector<BigInt>(w.coeffs.begin(), w.coeffs.begin() + p + 1));
    if (trimmed.total() != c.cardinality()) throw std::logic_error("shortened enumerator has the wrong size");
    return trimmed;
}

inline double stabilizer_log2_size(int64_t p, unsigned d) {
    return (double)(p - 1) / 2 * std::log2((double)(d * d));
}

/// W_I for the length-p qudit code by the chosen method. auto: brute force
/// up to 2^28 words, then invariant reconstruction within the auto budget,
/// then the bundled fixture.
inline SourcedEnumerator stabilizer_enumerator(int64_t p, unsigned d, Method method = Method::automatic,
                                               unsigned workers = 1) {
    require_qudit_dim(d);
    if (!is_prime(p) || p < 3 || !quantum_qr_exists(p, d)) {
        throw std::invalid_argument("no quantum QR code of length " + std::to_string(p) + ": " + existence_rule_text(d));
    }
    unsigned q = d * d;
    auto brute = [&] {
        if (stabilizer_log2_size(p, d) > std::log2(kBruteForceLimit) + 1e-9) {
            throw InfeasibleError("brute force at p=" + std::to_string(p) + " is infeasible (" + std::to_string(q) +
                                  "^" + std::to_string((p - 1) / 2) + " words); use --method fixture");
        }
        return SourcedEnumerator{brute_force_enumerator(qr_code(p, q, QRVariant::expurgated), workers), Method::brute,
                                 "computed"};
    };
    auto fixture = [&] {
        auto f = load_fixture(q, (size_t)p);
        if (!f) {
            throw InfeasibleError("no bundled enumerator for q=" + std::to_string(q) + " p=" + std::to_string(p) +
                                  " in " + fixture_dir().string());
        }
        return SourcedEnumerator{f->w, Method::fixture, "fixture"};
    };
    auto invariant = [&] {
        return SourcedEnumerator{invariant_stabilizer_enumerator(p, d), Method::invariant, "computed"};
    };
    switch (method) {
        case Method::brute: return brute();
        case Method::invariant: return invariant();
        case Method::fixture: return fixture();
        default: break;
    }
    if (stabilizer_log2_size(p, d) <= std::log2(kAutoBruteLimit) + 1e-9) return brute();
    if (invariant_plan(p, d).cost <= kAutoInvariantBudget) return invariant();
    return fixture();
}

/// Confirmation of a claimed minimum distance.
struct DistanceCertificate {
    unsigned claimed = 0;
    bool confirmed = false;
    std::string method;             // "brute" or "search"
    unsigned searched_below = 0;    // no nonzero word of weight <= this exists
    std::optional<Row> witness;     // a word of weight `claimed`
};

/// Certifies d(C) = claimed for a prime-length cyclic code: exhaustive window
/// search shows no nonzero word up to claimed-1 (claimed-2 for a Hermitian
/// self-orthogonal F4 code, whose weights are all even), and a randomized
/// information-set search exhibits a word of weight claimed.
inline DistanceCertificate certify_distance(const LinearCode &c, unsigned claimed) {
    DistanceCertificate cert;
    cert.claimed = claimed;
    cert.method = "search";
    if (claimed < 2 || claimed >= c.length()) throw std::invalid_argument("claimed distance out of range");
    unsigned bound = claimed - 1;
    if (c.q() == 4 && is_hermitian_self_orthogonal(c) && bound % 2 == 1) bound--;
    cert.searched_below = bound;
    auto lighter = cyclic_min_weight_at_most(c.arithmetic(), c.generators(), c.length(), bound);
    if (lighter) return cert;
    cert.witness = find_codeword_of_weight(c.arithmetic(), c.generators(), c.length(), claimed);
    cert.confirmed = cert.witness.has_value() && c.contains(*cert.witness);
    return cert;
}

/// Brute force when q^k <= 2^28, else certify the claim.
inline DistanceCertificate classical_distance(const LinearCode &c, unsigned claimed, unsigned workers = 1) {
    if (log2_size(c) <= std::log2(kAutoBruteLimit) + 1e-9) {
        DistanceCertificate cert;
        cert.claimed = claimed;
        cert.method = "brute";
        unsigned d = min_distance_bruteforce(c, workers);
        cert.searched_below = d - 1;
        cert.confirmed = d == claimed;
        return cert;
    }
    return certify_distance(c, claimed);
}

}  // namespace qrmagic

#endif  // QRMAGIC_PIPELINE_HPP_
