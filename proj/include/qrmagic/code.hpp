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

#ifndef QRMAGIC_CODE_HPP_
#define QRMAGIC_CODE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrmagic/enumerate.hpp"
#include "qrmagic/field.hpp"
#include "qrmagic/linalg.hpp"
#include "qrmagic/numth.hpp"

namespace qrmagic {

/// Linear code over a table-backed field, given by independent generator rows.
class LinearCode {
   public:
    LinearCode(FieldSpec field, size_t n, std::vector<Row> generators, bool allow_empty = false)
        : field_(std::move(field)), n_(n), rows_(std::move(generators)) {
        if (!field_.has_tables()) throw std::invalid_argument("code field must have order <= 256");
        if (n_ == 0) throw std::invalid_argument("code length must be positive");
        for (const Row &r : rows_) {
            if (r.size() != n_) throw std::invalid_argument("generator row has wrong length");
            for (uint8_t x : r) {
                if (x >= field_.order()) throw std::invalid_argument("generator entry out of range");
            }
        }
        if (rows_.empty() && !allow_empty) throw std::invalid_argument("code dimension must be positive");
        if (rank(SmallField(field_), rows_) != rows_.size()) throw std::invalid_argument("generator rows are dependent");
    }

    const FieldSpec &field() const {
        return field_;
    }
    unsigned q() const {
        return (unsigned)field_.order();
    }
    size_t length() const {
        return n_;
    }
    size_t dimension() const {
        return rows_.size();
    }
    const std::vector<Row> &generators() const {
        return rows_;
    }
    SmallField arithmetic() const {
        return SmallField(field_);
    }
    BigInt cardinality() const {
        BigInt c = 1;
        for (size_t i = 0; i < rows_.size(); i++) c *= q();
        return c;
    }
    bool contains(const Row &v) const {
        SmallField F(field_);
        return in_row_space(F, row_reduce(F, rows_), v);
    }
    /// Same field, length and row space.
    bool same_code(const LinearCode &o) const {
        if (field_ != o.field_ || n_ != o.n_ || rows_.size() != o.rows_.size()) return false;
        return same_row_space(SmallField(field_), rows_, o.rows_);
    }

   private:
    FieldSpec field_;
    size_t n_;
    std::vector<Row> rows_;
};

/// Polynomial over a field, lowest degree first, no trailing zeros.
/// Code spanned by possibly dependent rows.
inline LinearCode code_spanned_by(const FieldSpec &field, size_t n, const std::vector<Row> &rows) {
    RowEchelon e = row_reduce(SmallField(field), rows);
    return LinearCode(field, n, e.rows, true);
}

struct Polynomial {
    FieldSpec field;
    std::vector<FieldElement> coefficients;

    int degree() const {
        return (int)coefficients.size() - 1;
    }
    Row indices() const {
        Row r;
        for (auto &c : coefficients) r.push_back((uint8_t)c.repr());
        return r;
    }
    FieldElement evaluate(const FieldElement &x) const {
        FieldElement acc(x.spec(), 0);
        for (size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
        return acc;
    }
};

enum class QRVariant { augmented, expurgated, extended };

inline const char *variant_name(QRVariant v) {
    switch (v) {
        case QRVariant::augmented: return "augmented";
        case QRVariant::expurgated: return "expurgated";
        default: return "extended";
    }
}

namespace detail {

inline void require_qr_parameters(int64_t p, unsigned q) {
    require_odd_prime(p);
    if (q != 2 && q != 3 && q != 4 && q != 9) throw std::invalid_argument("field order must be 2, 3, 4 or 9");
    if (p % (q % 2 == 0 ? 2 : 3) == 0) throw std::invalid_argument("length must be coprime to the field order");
    if (legendre((int64_t)q, p) != 1) {
        throw std::invalid_argument(std::to_string(q) + " is not a quadratic residue mod " + std::to_string(p));
    }
}

// Splitting field of x^p - 1 over F_q as a prime-field extension with the
// smallest irreducible modulus, plus the embedding of F_q in it.
struct SplittingField {
    FieldSpec big;
    std::vector<u128> image;  // image[a] = embedding of element a of F_q
};

inline SplittingField splitting_field(int64_t p, const FieldSpec &small) {
    uint32_t m = extension_degree(small.order(), (uint64_t)p);
    SplittingField s{FieldSpec::smallest_irreducible(small.characteristic(), m * small.degree()), {}};
    s.image = embed_subfield(small, s.big);
    return s;
}

}  // namespace detail

/// prod_{s in Q} (x - zeta^s), times (x - 1) for the expurgated variant.
inline Polynomial generator_polynomial(int64_t p, unsigned q, QRVariant variant) {
    if (variant == QRVariant::extended) throw std::invalid_argument("extended codes are not cyclic");
    detail::require_qr_parameters(p, q);
    FieldSpec small = FieldSpec::of_order(q);
    detail::SplittingField sf = detail::splitting_field(p, small);
    const FieldSpec &big = sf.big;
    u128 zeta = primitive_root_of_unity(big, (uint64_t)p).repr();
    std::vector<u128> g{1};
    auto times_linear = [&](u128 root) {
        // g *= (x - root)
        std::vector<u128> h(g.size() + 1, 0);
        u128 nr = big.neg(root);
        for (size_t i = 0; i < g.size(); i++) {
            h[i + 1] = big.add(h[i + 1], g[i]);
            h[i] = big.add(h[i], big.mul(nr, g[i]));
        }
        g = std::move(h);
    };
    for (int64_t s : classify_residues(p).residues) times_linear(big.pow(zeta, (u128)s));
    if (variant == QRVariant::expurgated) times_linear(1);
    Polynomial out{small, {}};
    for (u128 c : g) {
        if (big.pow(c, q) != c) throw std::logic_error("generator coefficient is not in the base field");
        size_t a = 0;
        while (a < sf.image.size() && sf.image[a] != c) a++;
        if (a == sf.image.size()) throw std::logic_error("generator coefficient has no preimage");
        out.coefficients.emplace_back(small, a);
    }
    return out;
}

/// Polynomial remainder of x^n - 1 by g is zero.
inline bool divides_xn_minus_1(const Polynomial &g, size_t n) {
    SmallField F(g.field);
    Row rem(n + 1, 0);
    rem[0] = F.neg(1);
    rem[n] = F.add(rem[n], 1);
    Row gi = g.indices();
    if (gi.empty()) return false;
    size_t dg = gi.size() - 1;
    if (dg > n) return false;
    uint8_t lead_inv = F.inv(gi.back());
    for (size_t top = n + 1; top-- > dg;) {
        uint8_t c = F.mul(rem[top], lead_inv);
        if (!c) continue;
        for (size_t i = 0; i <= dg; i++) rem[top - dg + i] = F.sub(rem[top - dg + i], F.mul(c, gi[i]));
    }
    for (size_t i = 0; i < dg; i++) {
        if (rem[i]) return false;
    }
    return true;
}

inline LinearCode cyclic_code_from_generator(const Polynomial &g, size_t n) {
    if (g.degree() < 0 || !divides_xn_minus_1(g, n)) throw std::invalid_argument("g does not divide x^n - 1");
    size_t dg = (size_t)g.degree();
    if (dg >= n) throw std::invalid_argument("generator gives the zero code");
    Row gi = g.indices();
    std::vector<Row> rows;
    for (size_t s = 0; s + dg < n; s++) {
        Row r(n, 0);
        for (size_t i = 0; i <= dg; i++) r[s + i] = gi[i];
        rows.push_back(std::move(r));
    }
    return LinearCode(g.field, n, std::move(rows));
}

/// Appends the negated coordinate sum to every generator.
inline LinearCode extend(const LinearCode &c) {
    SmallField F = c.arithmetic();
    std::vector<Row> rows;
    for (Row r : c.generators()) {
        uint8_t s = 0;
        for (uint8_t x : r) s = F.add(s, x);
        r.push_back(F.neg(s));
        rows.push_back(std::move(r));
    }
    return LinearCode(c.field(), c.length() + 1, std::move(rows));
}

inline LinearCode qr_code(int64_t p, unsigned q, QRVariant variant) {
    if (variant == QRVariant::extended) return extend(qr_code(p, q, QRVariant::augmented));
    return cyclic_code_from_generator(generator_polynomial(p, q, variant), (size_t)p);
}

namespace detail {

inline Row delete_coord(const Row &r, size_t coord) {
    Row out;
    out.reserve(r.size() - 1);
    for (size_t j = 0; j < r.size(); j++) {
        if (j != coord) out.push_back(r[j]);
    }
    return out;
}

}  // namespace detail

/// Deletes a coordinate from every codeword.
inline LinearCode puncture(const LinearCode &c, size_t coord) {
    if (coord >= c.length()) throw std::out_of_range("puncture coordinate out of range");
    if (c.length() == 1) throw std::invalid_argument("cannot puncture a length-1 code");
    std::vector<Row> rows;
    for (const Row &r : c.generators()) rows.push_back(detail::delete_coord(r, coord));
    RowEchelon e = row_reduce(c.arithmetic(), rows);
    return LinearCode(c.field(), c.length() - 1, e.rows);
}

/// Codewords vanishing at coord, with that coordinate deleted.
inline LinearCode shorten(const LinearCode &c, size_t coord) {
    if (coord >= c.length()) throw std::out_of_range("shorten coordinate out of range");
    SmallField F = c.arithmetic();
    std::vector<size_t> order{coord};
    for (size_t j = 0; j < c.length(); j++) {
        if (j != coord) order.push_back(j);
    }
    RowEchelon e = row_reduce(F, c.generators(), &order);
    std::vector<Row> rows;
    for (size_t i = 0; i < e.rows.size(); i++) {
        if (e.pivots[i] == coord) continue;
        rows.push_back(detail::delete_coord(e.rows[i], coord));
    }
    if (rows.empty() || c.length() == 1) throw std::invalid_argument("shortened code is zero-dimensional");
    return LinearCode(c.field(), c.length() - 1, std::move(rows));
}

inline LinearCode euclidean_dual(const LinearCode &c) {
    return LinearCode(c.field(), c.length(), nullspace(c.arithmetic(), c.generators(), c.length()), true);
}

namespace detail {

inline void require_square_order(const FieldSpec &f) {
    if (f.degree() != 2) throw std::invalid_argument("Hermitian form needs a quadratic extension field");
}

/// conj[a] = a^r for F_{r^2}.
inline Row conjugation_table(const FieldSpec &f) {
    Row t((size_t)f.order());
    for (size_t a = 0; a < t.size(); a++) t[a] = (uint8_t)f.pow(a, f.characteristic());
    return t;
}

}  // namespace detail

/// sum_k conj(x_k) y_k.
inline uint8_t hermitian_product(const SmallField &F, const Row &x, const Row &y) {
    detail::require_square_order(F.spec());
    Row conj = detail::conjugation_table(F.spec());
    uint8_t s = 0;
    for (size_t k = 0; k < x.size(); k++) s = F.add(s, F.mul(conj[x[k]], y[k]));
    return s;
}

inline LinearCode hermitian_dual(const LinearCode &c) {
    detail::require_square_order(c.field());
    Row conj = detail::conjugation_table(c.field());
    std::vector<Row> rows;
    for (Row r : c.generators()) {
        for (auto &x : r) x = conj[x];
        rows.push_back(std::move(r));
    }
    return LinearCode(c.field(), c.length(), nullspace(c.arithmetic(), rows, c.length()), true);
}

inline bool is_hermitian_self_orthogonal(const LinearCode &c) {
    detail::require_square_order(c.field());
    SmallField F = c.arithmetic();
    const auto &g = c.generators();
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i; j < g.size(); j++) {
            if (hermitian_product(F, g[i], g[j])) return false;
        }
    }
    return true;
}

/// Largest q^k accepted by full codeword enumeration.
inline constexpr double kBruteForceLimit = 1073741824.0;  // 2^30

inline double log2_size(const LinearCode &c) {
    return (double)c.dimension() * std::log2((double)c.q());
}

inline void require_brute_force_size(const LinearCode &c, double limit = kBruteForceLimit) {
    if (log2_size(c) > std::log2(limit) + 1e-9) {
        throw std::invalid_argument("code too large for brute force (" + std::to_string(c.q()) + "^" +
                                    std::to_string(c.dimension()) + " words)");
    }
}

inline unsigned min_distance_bruteforce(const LinearCode &c, unsigned workers = 1) {
    require_brute_force_size(c);
    auto hist = enumerate_weights(c.arithmetic(), c.generators(), c.length(), workers);
    for (size_t w = 1; w < hist.size(); w++) {
        if (hist[w]) return (unsigned)w;
    }
    throw std::logic_error("code has no nonzero words");
}

}  // namespace qrmagic

#endif  // QRMAGIC_CODE_HPP_
