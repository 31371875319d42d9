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

#ifndef QRMAGIC_WEIGHTS_HPP_
#define QRMAGIC_WEIGHTS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrmagic/code.hpp"
#include "qrmagic/enumerate.hpp"
#include "qrmagic/linalg.hpp"

namespace qrmagic {

/// Hamming weight distribution A_0..A_n.
struct WeightEnumerator {
    size_t n = 0;
    std::vector<BigInt> coeffs;

    WeightEnumerator() = default;
    explicit WeightEnumerator(size_t length) : n(length), coeffs(length + 1, 0) {
    }
    explicit WeightEnumerator(std::vector<BigInt> a) : n(a.empty() ? 0 : a.size() - 1), coeffs(std::move(a)) {
        if (coeffs.empty()) throw std::invalid_argument("enumerator needs at least A_0");
    }

    const BigInt &operator[](size_t w) const {
        return coeffs.at(w);
    }
    BigInt total() const {
        BigInt s = 0;
        for (auto &a : coeffs) s += a;
        return s;
    }
    bool has_odd_support() const {
        for (size_t w = 1; w <= n; w += 2) {
            if (coeffs[w] != 0) return true;
        }
        return false;
    }
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        for (auto &a : coeffs) out.push_back(a.str());
        return out;
    }
    static WeightEnumerator from_strings(const std::vector<std::string> &s) {
        std::vector<BigInt> a;
        for (auto &x : s) {
            if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("enumerator coefficient is not a decimal integer: " + x);
            }
            a.emplace_back(x);
        }
        return WeightEnumerator(std::move(a));
    }
    friend bool operator==(const WeightEnumerator &a, const WeightEnumerator &b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const WeightEnumerator &a, const WeightEnumerator &b) {
        return !(a == b);
    }
};

inline WeightEnumerator brute_force_enumerator(const LinearCode &c, unsigned workers = 1) {
    require_brute_force_size(c);
    auto hist = enumerate_weights(c.arithmetic(), c.generators(), c.length(), workers);
    WeightEnumerator w(c.length());
    for (size_t i = 0; i <= c.length(); i++) w.coeffs[i] = hist[i];
    return w;
}

/// Exact A_0..A_wmax via disjoint information sets.
inline std::vector<BigInt> low_weight_counts(const LinearCode &c, size_t wmax) {
    return low_weight_counts_generic(c.arithmetic(), c.generators(), c.length(), wmax);
}

/// Exact A_0..A_wmax for a cyclic code of prime length, one window information set.
inline std::vector<BigInt> low_weight_counts_cyclic(const LinearCode &c, size_t wmax) {
    return low_weight_counts_cyclic(c.arithmetic(), c.generators(), c.length(), wmax);
}

namespace detail {

// Homogeneous bivariate polynomials of degree deg stored by y-exponent.
using HPoly = std::vector<Rational>;

inline HPoly hmul(const HPoly &a, const HPoly &b) {
    HPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline HPoly hpow(const HPoly &a, size_t e) {
    HPoly r{1};
    for (size_t i = 0; i < e; i++) r = hmul(r, a);
    return r;
}

inline std::vector<BigInt> binomial_row(size_t n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = 1;
    for (size_t i = 1; i <= n; i++) {
        for (size_t j = i; j > 0; j--) c[j] += c[j - 1];
    }
    return c;
}

inline BigInt exact_div(const BigInt &a, const BigInt &b, const char *what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::invalid_argument(std::string(what) + ": division is not exact");
    return q;
}

}  // namespace detail

/// W(x + (q-1) y, x - y) / |C|.
inline WeightEnumerator macwilliams(const WeightEnumerator &w, unsigned q, const BigInt &cardinality) {
    if (cardinality != w.total()) throw std::invalid_argument("cardinality does not match the enumerator");
    size_t n = w.n;
    std::vector<BigInt> acc(n + 1, 0);
    for (size_t i = 0; i <= n; i++) {
        if (w.coeffs[i] == 0) continue;
        // (1 + (q-1) y)^(n-i) (1 - y)^i
        auto bp = detail::binomial_row(n - i);
        auto bm = detail::binomial_row(i);
        std::vector<BigInt> pa(n - i + 1), pb(i + 1);
        BigInt qp = 1;
        for (size_t j = 0; j <= n - i; j++) {
            pa[j] = bp[j] * qp;
            qp *= (q - 1);
        }
        for (size_t j = 0; j <= i; j++) pb[j] = (j % 2 ? -bm[j] : bm[j]);
        for (size_t a = 0; a <= n - i; a++) {
            for (size_t b = 0; b <= i; b++) acc[a + b] += w.coeffs[i] * pa[a] * pb[b];
        }
    }
    WeightEnumerator out(n);
    for (size_t j = 0; j <= n; j++) {
        out.coeffs[j] = detail::exact_div(acc[j], cardinality, "MacWilliams transform");
        if (out.coeffs[j] < 0) throw std::invalid_argument("MacWilliams transform gave a negative count");
    }
    return out;
}

/// Punctured code of a homogeneous code: A_i = ((n-i) A_i + (i+1) A_{i+1}) / n.
inline WeightEnumerator prange_puncture(const WeightEnumerator &w) {
    size_t n = w.n;
    if (n == 0) throw std::invalid_argument("cannot puncture length 0");
    WeightEnumerator out(n - 1);
    for (size_t i = 0; i < n; i++) {
        BigInt num = BigInt(n - i) * w.coeffs[i] + BigInt(i + 1) * w.coeffs[i + 1];
        out.coeffs[i] = detail::exact_div(num, BigInt(n), "Prange puncture");
    }
    return out;
}

/// Shortened code of a homogeneous code: A_i = (n-i) A_i / n.
inline WeightEnumerator prange_shorten(const WeightEnumerator &w) {
    size_t n = w.n;
    if (n == 0) throw std::invalid_argument("cannot shorten length 0");
    WeightEnumerator out(n - 1);
    for (size_t i = 0; i < n; i++) {
        out.coeffs[i] = detail::exact_div(BigInt(n - i) * w.coeffs[i], BigInt(n), "Prange shorten");
    }
    return out;
}

/// Inverse of prange_shorten on a prefix: parent counts A_i = n A_i(short) / (n - i),
/// n the parent length, for i < n.
inline std::vector<BigInt> prange_unshorten_low(const std::vector<BigInt> &shortened, size_t n) {
    std::vector<BigInt> out;
    for (size_t i = 0; i < shortened.size(); i++) {
        if (i >= n) throw std::invalid_argument("prefix too long for the parent length");
        out.push_back(detail::exact_div(BigInt(n) * shortened[i], BigInt(n - i), "Prange unshorten"));
    }
    return out;
}

enum class InvariantRing { f4, f9 };

/// Coefficients of a self-dual enumerator in the invariant ring basis:
///   F4: sum_j a_j i2^(n/2-3j) h6^j
///   F9: sum_j a_j r2^(n/2-2j) r4^j + r6 sum_j b_j r2^((n-6)/2-2j) r4^j
struct InvariantDecomposition {
    InvariantRing ring = InvariantRing::f4;
    size_t n = 0;
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<size_t> constraint_weights;  // weights whose counts fixed the solve
};

namespace detail {

inline const HPoly &ring_gen(int which) {
    static const HPoly i2{1, 0, 3};
    static const HPoly h6{1, 0, 0, 0, 45, 0, 18};
    static const HPoly r2{1, 0, 8};
    static const HPoly r4{1, 0, 0, 32, 48};
    static const HPoly r6{1, 0, 0, 16, 72, 288, 352};
    switch (which) {
        case 0: return i2;
        case 1: return h6;
        case 2: return r2;
        case 3: return r4;
        default: return r6;
    }
}

/// Basis polynomials for the ring at length n, a-part first then b-part.
inline std::vector<HPoly> ring_basis(InvariantRing ring, size_t n, size_t &a_count) {
    if (n % 2) throw std::invalid_argument("self-dual length must be even");
    std::vector<HPoly> out;
    if (ring == InvariantRing::f4) {
        for (size_t j = 0; 6 * j <= n; j++) out.push_back(hmul(hpow(ring_gen(0), n / 2 - 3 * j), hpow(ring_gen(1), j)));
        a_count = out.size();
        return out;
    }
    for (size_t j = 0; 4 * j <= n; j++) out.push_back(hmul(hpow(ring_gen(2), n / 2 - 2 * j), hpow(ring_gen(3), j)));
    a_count = out.size();
    if (n >= 6) {
        for (size_t j = 0; 4 * j <= n - 6; j++) {
            out.push_back(hmul(ring_gen(4), hmul(hpow(ring_gen(2), (n - 6) / 2 - 2 * j), hpow(ring_gen(3), j))));
        }
    }
    return out;
}

}  // namespace detail

/// Number of unknowns of the reconstruction at length n.
inline size_t invariant_unknowns(InvariantRing ring, size_t n) {
    size_t a_count = 0;
    return detail::ring_basis(ring, n, a_count).size();
}

/// Smallest w* such that the counts A_0..A_w* determine the decomposition.
inline size_t invariant_required_weight(InvariantRing ring, size_t n) {
    size_t a_count = 0;
    auto basis = detail::ring_basis(ring, n, a_count);
    std::vector<std::vector<Rational>> rows;
    for (size_t w = 0; w <= n; w++) {
        std::vector<Rational> r;
        for (auto &b : basis) r.push_back(b[w]);
        rows.push_back(r);
        // rank test by elimination on a copy
        auto m = rows;
        size_t rk = 0, cols = basis.size();
        for (size_t c = 0; c < cols && rk < m.size(); c++) {
            size_t piv = rk;
            while (piv < m.size() && m[piv][c] == 0) piv++;
            if (piv == m.size()) continue;
            std::swap(m[rk], m[piv]);
            for (size_t i = rk + 1; i < m.size(); i++) {
                if (m[i][c] == 0) continue;
                Rational f = m[i][c] / m[rk][c];
                for (size_t j = c; j < cols; j++) m[i][j] -= f * m[rk][j];
            }
            rk++;
        }
        if (rk == cols) return w;
    }
    throw std::logic_error("invariant basis is not determined by the weight counts");
}

inline InvariantDecomposition invariant_decompose(InvariantRing ring, size_t n, const std::vector<BigInt> &low) {
    size_t a_count = 0;
    auto basis = detail::ring_basis(ring, n, a_count);
    size_t need = invariant_required_weight(ring, n);
    if (low.size() < need + 1) {
        throw std::invalid_argument("reconstruction at length " + std::to_string(n) + " needs counts A_0..A_" +
                                    std::to_string(need));
    }
    if (low.size() > n + 1) throw std::invalid_argument("more counts than the length allows");
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    InvariantDecomposition d;
    d.ring = ring;
    d.n = n;
    for (size_t w = 0; w < low.size(); w++) {
        std::vector<Rational> r;
        for (auto &b : basis) r.push_back(b[w]);
        A.push_back(r);
        rhs.push_back(Rational(low[w]));
        d.constraint_weights.push_back(w);
    }
    auto x = solve_exact(A, rhs);
    d.a.assign(x.begin(), x.begin() + a_count);
    d.b.assign(x.begin() + a_count, x.end());
    return d;
}

inline WeightEnumerator invariant_expand(const InvariantDecomposition &d) {
    size_t a_count = 0;
    auto basis = detail::ring_basis(d.ring, d.n, a_count);
    detail::HPoly acc(d.n + 1, 0);
    for (size_t j = 0; j < basis.size(); j++) {
        const Rational &c = j < a_count ? d.a[j] : d.b[j - a_count];
        for (size_t w = 0; w <= d.n; w++) acc[w] += c * basis[j][w];
    }
    WeightEnumerator out(d.n);
    for (size_t w = 0; w <= d.n; w++) {
        if (denominator(acc[w]) != 1) throw std::runtime_error("reconstructed enumerator is not integral");
        if (acc[w] < 0) throw std::runtime_error("reconstructed enumerator has a negative count");
        out.coeffs[w] = numerator(acc[w]);
    }
    return out;
}

namespace detail {

inline WeightEnumerator invariant_reconstruct(InvariantRing ring, unsigned q, size_t n, const std::vector<BigInt> &low) {
    WeightEnumerator w = invariant_expand(invariant_decompose(ring, n, low));
    BigInt card = 1;
    for (size_t i = 0; i < n / 2; i++) card *= q;
    if (w.total() != card) throw std::runtime_error("reconstructed enumerator has the wrong cardinality");
    return w;
}

}  // namespace detail

/// Hermitian self-dual F4 enumerator of even length n from A_0..A_{2 floor(n/6)} (or more).
inline WeightEnumerator invariant_reconstruct_f4(size_t n, const std::vector<BigInt> &low) {
    return detail::invariant_reconstruct(InvariantRing::f4, 4, n, low);
}

/// Hermitian self-dual F9 enumerator of even length n from A_0..A_w*.
inline WeightEnumerator invariant_reconstruct_f9(size_t n, const std::vector<BigInt> &low) {
    return detail::invariant_reconstruct(InvariantRing::f9, 9, n, low);
}

/// Coefficients as Real; throws if a coefficient overflows the type.
template <class Real = long double>
std::vector<Real> coefficients_as(const WeightEnumerator &w) {
    std::vector<Real> out;
    for (auto &a : w.coeffs) {
        Real v = a.template convert_to<Real>();
        if (!(v == v) || v > std::numeric_limits<Real>::max() / 2) throw std::overflow_error("coefficient overflow");
        out.push_back(v);
    }
    return out;
}

/// sum_w A_w x^(n-w) y^w.
template <class Real = long double>
Real evaluate_real(const std::vector<Real> &a, Real x, Real y) {
    size_t n = a.size() - 1;
    std::vector<Real> xp(n + 1), yp(n + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (size_t i = 1; i <= n; i++) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    Real s = 0;
    for (size_t w = 0; w <= n; w++) {
        if (a[w] != 0) s += a[w] * xp[n - w] * yp[w];
    }
    return s;
}

template <class Real = long double>
Real evaluate_real(const WeightEnumerator &w, Real x, Real y) {
    return evaluate_real<Real>(coefficients_as<Real>(w), x, y);
}

enum class Parity { even, odd };

/// Re W(1, it) for even parity, Im W(1, it) for odd: sum over w of the given
/// parity of A_w (-1)^floor(w/2) t^w.
template <class Real = long double>
Real evaluate_signed(const std::vector<Real> &a, Real t, Parity parity) {
    Real s = 0, tp = 1;
    for (size_t w = 0; w < a.size(); w++) {
        if ((w % 2 == 1) == (parity == Parity::odd) && a[w] != 0) {
            Real term = a[w] * tp;
            s += ((w / 2) % 2) ? -term : term;
        }
        tp *= t;
    }
    return s;
}

template <class Real = long double>
Real evaluate_signed(const WeightEnumerator &w, Real t, Parity parity) {
    return evaluate_signed<Real>(coefficients_as<Real>(w), t, parity);
}

}  // namespace qrmagic

#endif  // QRMAGIC_WEIGHTS_HPP_
