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

// Bit-sliced codeword kernels over F2, F3, F4, F9.
//
// A length-n word is stored as P bit planes of W 64-bit words each:
//   F2: 1 plane (the bit).       F4 (c0 + 2 c1): planes c0, c1.
//   F3: planes [x==1], [x==2].   F9 (c0 + 3 c1): [c0==1], [c0==2], [c1==1], [c1==2].
// Characteristic-2 addition is XOR; characteristic 3 uses a 6-op plane adder.

#ifndef QRMAGIC_ENUMERATE_HPP_
#define QRMAGIC_ENUMERATE_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qrmagic/linalg.hpp"

namespace qrmagic {

template <unsigned Q>
constexpr int planes_for() {
    static_assert(Q == 2 || Q == 3 || Q == 4 || Q == 9, "unsupported field");
    return Q == 2 ? 1 : (Q == 9 ? 4 : 2);
}

template <unsigned Q, size_t W>
struct Packed {
    static constexpr int P = planes_for<Q>();
    uint64_t w[P][W] = {};

    void add(const Packed &o) {
        if constexpr (Q == 2 || Q == 4) {
            for (int p = 0; p < P; p++) {
                for (size_t i = 0; i < W; i++) w[p][i] ^= o.w[p][i];
            }
        } else {
            for (int p = 0; p < P; p += 2) {
                for (size_t i = 0; i < W; i++) {
                    uint64_t a1 = w[p][i], a2 = w[p + 1][i];
                    uint64_t b1 = o.w[p][i], b2 = o.w[p + 1][i];
                    uint64_t t = (a1 | b2) ^ (a2 | b1);
                    w[p][i] = (a2 | b2) ^ t;
                    w[p + 1][i] = (a1 | b1) ^ t;
                }
            }
        }
    }
    uint64_t nonzero(size_t i) const {
        uint64_t m = w[0][i];
        for (int p = 1; p < P; p++) m |= w[p][i];
        return m;
    }
    unsigned weight() const {
        unsigned s = 0;
        for (size_t i = 0; i < W; i++) s += std::popcount(nonzero(i));
        return s;
    }
    unsigned weight_on(const std::array<uint64_t, W> &mask) const {
        unsigned s = 0;
        for (size_t i = 0; i < W; i++) s += std::popcount(nonzero(i) & mask[i]);
        return s;
    }

    static Packed pack(const Row &r) {
        Packed out;
        for (size_t j = 0; j < r.size(); j++) {
            uint64_t bit = uint64_t(1) << (j % 64);
            size_t i = j / 64;
            unsigned e = r[j];
            if constexpr (Q == 2) {
                if (e) out.w[0][i] |= bit;
            } else if constexpr (Q == 4) {
                if (e & 1) out.w[0][i] |= bit;
                if (e & 2) out.w[1][i] |= bit;
            } else if constexpr (Q == 3) {
                if (e == 1) out.w[0][i] |= bit;
                if (e == 2) out.w[1][i] |= bit;
            } else {
                unsigned c0 = e % 3, c1 = e / 3;
                if (c0 == 1) out.w[0][i] |= bit;
                if (c0 == 2) out.w[1][i] |= bit;
                if (c1 == 1) out.w[2][i] |= bit;
                if (c1 == 2) out.w[3][i] |= bit;
            }
        }
        return out;
    }
    Row unpack(size_t n) const {
        Row r(n, 0);
        for (size_t j = 0; j < n; j++) {
            size_t i = j / 64;
            auto b = [&](int p) { return (unsigned)((w[p][i] >> (j % 64)) & 1); };
            if constexpr (Q == 2) {
                r[j] = (uint8_t)b(0);
            } else if constexpr (Q == 4) {
                r[j] = (uint8_t)(b(0) | (b(1) << 1));
            } else if constexpr (Q == 3) {
                r[j] = (uint8_t)(b(0) + 2 * b(1));
            } else {
                r[j] = (uint8_t)(b(0) + 2 * b(1) + 3 * (b(2) + 2 * b(3)));
            }
        }
        return r;
    }
};

namespace detail {

/// Calls fn.template operator()<Q, W>() for the field order and word count.
template <class Fn>
decltype(auto) dispatch_packed(unsigned q, size_t n, Fn &&fn) {
    if (n > 128) throw std::invalid_argument("packed kernels support length <= 128");
    bool one = n <= 64;
    switch (q) {
        case 2: return one ? fn.template operator()<2, 1>() : fn.template operator()<2, 2>();
        case 3: return one ? fn.template operator()<3, 1>() : fn.template operator()<3, 2>();
        case 4: return one ? fn.template operator()<4, 1>() : fn.template operator()<4, 2>();
        case 9: return one ? fn.template operator()<9, 1>() : fn.template operator()<9, 2>();
        default: throw std::invalid_argument("packed kernels support F2, F3, F4, F9");
    }
}

template <size_t W>
std::array<uint64_t, W> column_mask(const std::vector<size_t> &cols) {
    std::array<uint64_t, W> m{};
    for (size_t c : cols) m[c / 64] |= uint64_t(1) << (c % 64);
    return m;
}

/// mult[j][c] = packed (element c) * rows[j].
template <unsigned Q, size_t W>
std::vector<std::array<Packed<Q, W>, Q>> scaled_rows(const SmallField &F, const std::vector<Row> &rows) {
    std::vector<std::array<Packed<Q, W>, Q>> out(rows.size());
    for (size_t j = 0; j < rows.size(); j++) {
        for (unsigned c = 0; c < Q; c++) out[j][c] = Packed<Q, W>::pack(F.scale((uint8_t)c, rows[j]));
    }
    return out;
}

/// Visits every nonzero message of support size <= tmax whose first nonzero
/// coefficient is 1. visit(word) returns true to stop early; returns whether stopped.
template <unsigned Q, size_t W, class Visit>
bool dfs_messages(const std::vector<std::array<Packed<Q, W>, Q>> &mult, int tmax, Visit &&visit) {
    size_t k = mult.size();
    std::function<bool(size_t, int, const Packed<Q, W> &, bool)> rec;
    rec = [&](size_t start, int depth, const Packed<Q, W> &word, bool first) -> bool {
        for (size_t j = start; j < k; j++) {
            unsigned c_lo = 1, c_hi = first ? 1 : Q - 1;
            for (unsigned c = c_lo; c <= c_hi; c++) {
                Packed<Q, W> w2 = word;
                w2.add(mult[j][c]);
                if (visit(w2)) return true;
                if (depth + 1 < tmax && rec(j + 1, depth + 1, w2, false)) return true;
            }
        }
        return false;
    };
    if (tmax <= 0) return false;
    return rec(0, 0, Packed<Q, W>{}, true);
}

}  // namespace detail

/// Histogram of codeword weights of the row space of `rows` (k independent
/// rows of length n), by modular q-ary Gray code so each step adds one
/// scaled generator. Work is split on the top message digits into chunks
/// processed by `workers` threads with private histograms.
inline std::vector<uint64_t> enumerate_weights(const SmallField &F, const std::vector<Row> &rows, size_t n,
                                               unsigned workers = 1) {
    unsigned q = F.q();
    size_t k = rows.size();
    return detail::dispatch_packed(q, n, [&]<unsigned Q, size_t W>() {
        using PW = Packed<Q, W>;
        // delta[i][v] = (e(v+1) - e(v)) * row_i with e the index encoding.
        std::vector<std::array<PW, Q>> delta(k);
        auto mult = detail::scaled_rows<Q, W>(F, rows);
        for (size_t i = 0; i < k; i++) {
            for (unsigned v = 0; v < Q; v++) {
                uint8_t d = F.sub((uint8_t)((v + 1) % Q), (uint8_t)v);
                delta[i][v] = mult[i][d];
            }
        }
        // Top T digits pick a chunk; the low L digits are walked in Gray order.
        size_t T = 0;
        uint64_t chunks = 1;
        while (T < k && chunks < 256 && k - T > 1) {
            chunks *= Q;
            T++;
        }
        size_t L = k - T;
        auto run_chunk = [&](uint64_t c, std::vector<uint64_t> &hist) {
            PW word;
            for (size_t i = L; i < k; i++) {
                unsigned digit = (unsigned)(c % Q);
                c /= Q;
                word.add(mult[i][digit]);
            }
            hist[word.weight()]++;
            if (L == 0) return;
            std::vector<unsigned> g(L, 0), b(L, 0);
            unsigned g0 = 0;
            for (;;) {
                for (unsigned s = 1; s < Q; s++) {
                    word.add(delta[0][g0]);
                    g0 = g0 + 1 == Q ? 0 : g0 + 1;
                    hist[word.weight()]++;
                }
                size_t i = 1;
                while (i < L && b[i] == Q - 1) b[i++] = 0;
                if (i >= L) break;
                b[i]++;
                word.add(delta[i][g[i]]);
                g[i] = g[i] + 1 == Q ? 0 : g[i] + 1;
                hist[word.weight()]++;
            }
        };
        unsigned nw = std::max(1u, std::min<unsigned>(workers, (unsigned)chunks));
        std::vector<std::vector<uint64_t>> hists(nw, std::vector<uint64_t>(n + 1, 0));
        if (nw == 1) {
            for (uint64_t c = 0; c < chunks; c++) run_chunk(c, hists[0]);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < nw; t++) {
                pool.emplace_back([&, t] {
                    for (uint64_t c = t; c < chunks; c += nw) run_chunk(c, hists[t]);
                });
            }
            for (auto &th : pool) th.join();
        }
        std::vector<uint64_t> total(n + 1, 0);
        for (auto &h : hists) {
            for (size_t w = 0; w <= n; w++) total[w] += h[w];
        }
        return total;
    });
}

/// Disjoint information sets found greedily, each with the generator matrix
/// in systematic form on it.
struct InformationSets {
    std::vector<std::vector<size_t>> sets;
    std::vector<std::vector<Row>> systematic;
};

inline InformationSets disjoint_information_sets(const SmallField &F, const std::vector<Row> &rows, size_t n) {
    InformationSets out;
    size_t k = rows.size();
    std::vector<size_t> remaining(n);
    for (size_t i = 0; i < n; i++) remaining[i] = i;
    while (remaining.size() >= k) {
        RowEchelon e = row_reduce(F, rows, &remaining);
        if (e.rows.size() < k) break;
        out.sets.push_back(e.pivots);
        out.systematic.push_back(e.rows);
        std::vector<size_t> rest;
        for (size_t c : remaining) {
            if (std::find(e.pivots.begin(), e.pivots.end(), c) == e.pivots.end()) rest.push_back(c);
        }
        remaining = std::move(rest);
    }
    if (out.sets.empty()) throw std::invalid_argument("generator rows are not independent");
    return out;
}

/// Exact A_0..A_wmax for any linear code. With disjoint information sets
/// S_1..S_m and budgets t_i, sum (t_i + 1) = wmax + 1, every word of weight
/// <= wmax has weight <= t_i on some S_i. A word found from S_i is counted
/// only if its weight on every earlier S_j exceeds t_j.
inline std::vector<BigInt> low_weight_counts_generic(const SmallField &F, const std::vector<Row> &rows, size_t n,
                                                     size_t wmax) {
    wmax = std::min(wmax, n);
    InformationSets info = disjoint_information_sets(F, rows, n);
    size_t m = info.sets.size();
    size_t k = rows.size();
    std::vector<int> t(m);
    for (size_t i = 0; i < m; i++) {
        int base = (int)((wmax + 1) / m) - 1 + (i < (wmax + 1) % m ? 1 : 0);
        t[i] = std::min<int>(base, (int)k);
    }
    std::vector<uint64_t> counts(wmax + 1, 0);
    unsigned q = F.q();
    detail::dispatch_packed(q, n, [&]<unsigned Q, size_t W>() {
        std::vector<std::array<uint64_t, W>> masks;
        for (auto &s : info.sets) masks.push_back(detail::column_mask<W>(s));
        for (size_t i = 0; i < m; i++) {
            auto mult = detail::scaled_rows<Q, W>(F, info.systematic[i]);
            detail::dfs_messages<Q, W>(mult, t[i], [&](const Packed<Q, W> &word) {
                unsigned w = word.weight();
                if (w > wmax) return false;
                for (size_t j = 0; j < i; j++) {
                    if ((int)word.weight_on(masks[j]) <= t[j]) return false;
                }
                counts[w] += Q - 1;
                return false;
            });
        }
        return 0;
    });
    std::vector<BigInt> out(wmax + 1);
    out[0] = 1;
    for (size_t w = 1; w <= wmax; w++) out[w] = counts[w];
    return out;
}

/// Window budget for the cyclic search: every word of weight w has a cyclic
/// shift with at most floor(w k / n) nonzeros in positions [0, k).
inline int cyclic_window_budget(size_t wmax, size_t k, size_t n) {
    return (int)(wmax * k / n);
}

/// Number of messages visited by a search of support <= t on k positions.
inline double search_cost(unsigned q, size_t k, int t) {
    double total = 0, binom = 1;
    for (int s = 1; s <= t && (size_t)s <= k; s++) {
        binom = binom * (double)(k - s + 1) / s;
        double scal = 1;
        for (int i = 1; i < s; i++) scal *= q - 1;
        total += binom * scal;
    }
    return total;
}

namespace detail {

inline void require_cyclic_window(const SmallField &F, const std::vector<Row> &rows, size_t n, RowEchelon &e) {
    size_t k = rows.size();
    std::vector<size_t> window(k);
    for (size_t i = 0; i < k; i++) window[i] = i;
    e = row_reduce(F, rows, &window);
    if (e.rows.size() != k) throw std::invalid_argument("positions [0, k) are not an information set");
    RowEchelon full = row_reduce(F, rows);
    for (const Row &r : rows) {
        Row s(n);
        for (size_t j = 0; j < n; j++) s[(j + 1) % n] = r[j];
        if (!in_row_space(F, full, s)) throw std::invalid_argument("code is not cyclic");
    }
}

// Number of cyclic rotations r whose window [r, r + k) holds at most t nonzeros.
inline unsigned windows_within(const std::vector<uint8_t> &nz, size_t k, int t) {
    size_t n = nz.size();
    int cur = 0;
    for (size_t j = 0; j < k; j++) cur += nz[j];
    unsigned m = 0;
    for (size_t r = 0; r < n; r++) {
        if (cur <= t) m++;
        cur += nz[(r + k) % n] - nz[r];
    }
    return m;
}

}  // namespace detail

/// Exact A_0..A_wmax for a cyclic code of prime length n (wmax < n), using
/// one window information set. Each found word c is weighted by n(q-1)/m(c),
/// m(c) = number of its rotations whose window weight is within budget.
inline std::vector<BigInt> low_weight_counts_cyclic(const SmallField &F, const std::vector<Row> &rows, size_t n,
                                                    size_t wmax) {
    if (wmax >= n) throw std::invalid_argument("cyclic counting needs wmax < n");
    size_t k = rows.size();
    RowEchelon e;
    detail::require_cyclic_window(F, rows, n, e);
    int t = cyclic_window_budget(wmax, k, n);
    // tally[w][m]
    std::vector<std::vector<uint64_t>> tally(wmax + 1, std::vector<uint64_t>(n + 1, 0));
    detail::dispatch_packed(F.q(), n, [&]<unsigned Q, size_t W>() {
        auto mult = detail::scaled_rows<Q, W>(F, e.rows);
        std::vector<uint8_t> nz(n);
        detail::dfs_messages<Q, W>(mult, t, [&](const Packed<Q, W> &word) {
            unsigned w = word.weight();
            if (w > wmax) return false;
            for (size_t j = 0; j < n; j++) nz[j] = (uint8_t)((word.nonzero(j / 64) >> (j % 64)) & 1);
            tally[w][detail::windows_within(nz, k, t)]++;
            return false;
        });
        return 0;
    });
    std::vector<BigInt> out(wmax + 1);
    out[0] = 1;
    for (size_t w = 1; w <= wmax; w++) {
        BigInt orbits = 0;
        for (size_t m = 1; m <= n; m++) {
            if (!tally[w][m]) continue;
            if (tally[w][m] % m) throw std::logic_error("cyclic orbit tally not divisible");
            orbits += tally[w][m] / m;
        }
        out[w] = orbits * n * (F.q() - 1);
    }
    return out;
}

/// Smallest nonzero weight <= bound in a prime-length cyclic code, or nullopt
/// if every nonzero word is heavier than bound (bound < n).
inline std::optional<unsigned> cyclic_min_weight_at_most(const SmallField &F, const std::vector<Row> &rows, size_t n,
                                                         size_t bound) {
    if (bound >= n) throw std::invalid_argument("bound must be below the length");
    size_t k = rows.size();
    RowEchelon e;
    detail::require_cyclic_window(F, rows, n, e);
    int t = cyclic_window_budget(bound, k, n);
    std::optional<unsigned> best;
    detail::dispatch_packed(F.q(), n, [&]<unsigned Q, size_t W>() {
        auto mult = detail::scaled_rows<Q, W>(F, e.rows);
        detail::dfs_messages<Q, W>(mult, t, [&](const Packed<Q, W> &word) {
            unsigned w = word.weight();
            if (w <= bound && (!best || w < *best)) best = w;
            return false;
        });
        return 0;
    });
    return best;
}

/// Randomized information-set search (fixed seed) for a codeword of exactly
/// `target` weight: permute columns, row reduce, try all messages of support
/// <= depth. Returns the word or nullopt after `iterations` tries.
inline std::optional<Row> find_codeword_of_weight(const SmallField &F, const std::vector<Row> &rows, size_t n,
                                                  unsigned target, int depth = 3, unsigned iterations = 200,
                                                  uint64_t seed = 12345) {
    std::mt19937_64 rng(seed);
    std::optional<Row> found;
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; i++) order[i] = i;
    for (unsigned it = 0; it < iterations && !found; it++) {
        std::shuffle(order.begin(), order.end(), rng);
        RowEchelon e = row_reduce(F, rows, &order);
        detail::dispatch_packed(F.q(), n, [&]<unsigned Q, size_t W>() {
            auto mult = detail::scaled_rows<Q, W>(F, e.rows);
            detail::dfs_messages<Q, W>(mult, depth, [&](const Packed<Q, W> &word) {
                if (word.weight() != target) return false;
                found = word.unpack(n);
                return true;
            });
            return 0;
        });
    }
    return found;
}

}  // namespace qrmagic

#endif  // QRMAGIC_ENUMERATE_HPP_
