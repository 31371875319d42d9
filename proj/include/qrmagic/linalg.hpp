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

#ifndef QRMAGIC_LINALG_HPP_
#define QRMAGIC_LINALG_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qrmagic/field.hpp"

namespace qrmagic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Vector over a table-backed field (order <= 256), entries are element indices.
using Row = std::vector<uint8_t>;

/// Arithmetic helpers bound to a table-backed field.
class SmallField {
   public:
    explicit SmallField(const FieldSpec &f) : spec_(f), q_((unsigned)f.order()) {
        if (!f.has_tables()) throw std::invalid_argument("field too large for table arithmetic");
        add_ = f.add_table();
        mul_ = f.mul_table();
        neg_ = f.neg_table();
        inv_ = f.inv_table();
    }
    const FieldSpec &spec() const {
        return spec_;
    }
    unsigned q() const {
        return q_;
    }
    uint8_t add(uint8_t a, uint8_t b) const {
        return add_[a * q_ + b];
    }
    uint8_t sub(uint8_t a, uint8_t b) const {
        return add_[a * q_ + neg_[b]];
    }
    uint8_t mul(uint8_t a, uint8_t b) const {
        return mul_[a * q_ + b];
    }
    uint8_t neg(uint8_t a) const {
        return neg_[a];
    }
    uint8_t inv(uint8_t a) const {
        if (!a) throw std::domain_error("inverse of zero");
        return inv_[a];
    }
    /// r += c*s.
    void axpy(Row &r, uint8_t c, const Row &s) const {
        if (!c) return;
        const uint8_t *m = mul_ + c * q_;
        for (size_t i = 0; i < r.size(); i++) r[i] = add_[r[i] * q_ + m[s[i]]];
    }
    Row scale(uint8_t c, Row r) const {
        for (auto &x : r) x = mul(c, x);
        return r;
    }
    uint8_t dot(const Row &a, const Row &b) const {
        uint8_t s = 0;
        for (size_t i = 0; i < a.size(); i++) s = add(s, mul(a[i], b[i]));
        return s;
    }

   private:
    FieldSpec spec_;
    unsigned q_;
    const uint8_t *add_, *mul_, *neg_, *inv_;
};

struct RowEchelon {
    std::vector<Row> rows;        // reduced rows, pivot entries equal 1
    std::vector<size_t> pivots;   // pivot column of each row
    std::vector<Row> transform;   // rows[i] = sum_j transform[i][j] * input[j]
};

/// Reduced row echelon form. Columns are scanned in `column_order` when given
/// (a permutation or subset of column indices), else left to right.
inline RowEchelon row_reduce(const SmallField &F, const std::vector<Row> &input,
                             const std::vector<size_t> *column_order = nullptr) {
    RowEchelon e;
    size_t m = input.size();
    if (m == 0) return e;
    size_t n = input[0].size();
    std::vector<Row> a = input;
    std::vector<Row> t(m, Row(m, 0));
    for (size_t i = 0; i < m; i++) t[i][i] = 1;
    std::vector<size_t> order;
    if (column_order) {
        order = *column_order;
    } else {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    size_t r = 0;
    for (size_t col : order) {
        if (r == m) break;
        size_t piv = r;
        while (piv < m && a[piv][col] == 0) piv++;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        std::swap(t[r], t[piv]);
        uint8_t s = F.inv(a[r][col]);
        a[r] = F.scale(s, a[r]);
        t[r] = F.scale(s, t[r]);
        for (size_t i = 0; i < m; i++) {
            if (i != r && a[i][col]) {
                uint8_t c = F.neg(a[i][col]);
                F.axpy(a[i], c, a[r]);
                F.axpy(t[i], c, t[r]);
            }
        }
        e.pivots.push_back(col);
        r++;
    }
    a.resize(r);
    t.resize(r);
    e.rows = std::move(a);
    e.transform = std::move(t);
    return e;
}

inline size_t rank(const SmallField &F, const std::vector<Row> &rows) {
    return row_reduce(F, rows).rows.size();
}

/// Basis of {v : <row, v> = 0 for every row} (plain bilinear dot product).
inline std::vector<Row> nullspace(const SmallField &F, const std::vector<Row> &rows, size_t ncols) {
    RowEchelon e = row_reduce(F, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Row> out;
    for (size_t free = 0; free < ncols; free++) {
        if (is_pivot[free]) continue;
        Row v(ncols, 0);
        v[free] = 1;
        for (size_t i = 0; i < e.rows.size(); i++) v[e.pivots[i]] = F.neg(e.rows[i][free]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Coefficients c with sum_j c_j basis[j] = v, or nullopt if v is outside the span.
/// `e` must be row_reduce(F, basis).
inline std::optional<Row> express_in_basis(const SmallField &F, const RowEchelon &e, size_t basis_size, const Row &v) {
    Row rem = v;
    Row coeff(basis_size, 0);
    for (size_t i = 0; i < e.rows.size(); i++) {
        uint8_t c = rem[e.pivots[i]];
        if (!c) continue;
        F.axpy(rem, F.neg(c), e.rows[i]);
        F.axpy(coeff, c, e.transform[i]);
    }
    for (uint8_t x : rem) {
        if (x) return std::nullopt;
    }
    return coeff;
}

inline bool in_row_space(const SmallField &F, const RowEchelon &e, const Row &v) {
    Row rem = v;
    for (size_t i = 0; i < e.rows.size(); i++) {
        uint8_t c = rem[e.pivots[i]];
        if (c) F.axpy(rem, F.neg(c), e.rows[i]);
    }
    for (uint8_t x : rem) {
        if (x) return false;
    }
    return true;
}

inline bool same_row_space(const SmallField &F, const std::vector<Row> &a, const std::vector<Row> &b) {
    RowEchelon ea = row_reduce(F, a), eb = row_reduce(F, b);
    return ea.rows == eb.rows;
}

/// Unique solution of A x = b over Q; A may have more rows than columns.
/// Throws std::runtime_error if A lacks full column rank or the system is inconsistent.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    size_t m = A.size();
    if (m == 0 || b.size() != m) throw std::invalid_argument("bad system shape");
    size_t n = A[0].size();
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < n && r < m; col++) {
        size_t piv = r;
        while (piv < m && A[piv][col] == 0) piv++;
        if (piv == m) continue;
        std::swap(A[r], A[piv]);
        std::swap(b[r], b[piv]);
        Rational s = 1 / A[r][col];
        for (auto &x : A[r]) x *= s;
        b[r] *= s;
        for (size_t i = 0; i < m; i++) {
            if (i == r || A[i][col] == 0) continue;
            Rational c = A[i][col];
            for (size_t j = 0; j < n; j++) A[i][j] -= c * A[r][j];
            b[i] -= c * b[r];
        }
        pivots.push_back(col);
        r++;
    }
    if (r < n) throw std::runtime_error("singular system");
    for (size_t i = r; i < m; i++) {
        if (b[i] != 0) throw std::runtime_error("inconsistent system");
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < r; i++) x[pivots[i]] = b[i];
    return x;
}

}  // namespace qrmagic

#endif  // QRMAGIC_LINALG_HPP_
