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

#ifndef QRMAGIC_QUANTUM_HPP_
#define QRMAGIC_QUANTUM_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrmagic/code.hpp"
#include "qrmagic/linalg.hpp"
#include "qrmagic/numth.hpp"

namespace qrmagic {

/// Pauli label (v_z, v_x) in F_d^(2n).
struct SymplecticVector {
    unsigned d = 2;
    std::vector<uint8_t> z, x;

    SymplecticVector() = default;
    SymplecticVector(unsigned d_, size_t n) : d(d_), z(n, 0), x(n, 0) {
    }
    SymplecticVector(unsigned d_, std::vector<uint8_t> z_, std::vector<uint8_t> x_)
        : d(d_), z(std::move(z_)), x(std::move(x_)) {
        if (z.size() != x.size()) throw std::invalid_argument("z and x parts differ in length");
        for (auto &a : z) a %= d;
        for (auto &a : x) a %= d;
    }
    size_t n() const {
        return z.size();
    }
    bool is_zero() const {
        for (size_t k = 0; k < n(); k++) {
            if (z[k] || x[k]) return false;
        }
        return true;
    }
    SymplecticVector operator+(const SymplecticVector &o) const {
        check(o);
        SymplecticVector r(d, n());
        for (size_t k = 0; k < n(); k++) {
            r.z[k] = (uint8_t)((z[k] + o.z[k]) % d);
            r.x[k] = (uint8_t)((x[k] + o.x[k]) % d);
        }
        return r;
    }
    SymplecticVector operator-() const {
        SymplecticVector r(d, n());
        for (size_t k = 0; k < n(); k++) {
            r.z[k] = (uint8_t)((d - z[k]) % d);
            r.x[k] = (uint8_t)((d - x[k]) % d);
        }
        return r;
    }
    SymplecticVector scaled(unsigned c) const {
        SymplecticVector r(d, n());
        for (size_t k = 0; k < n(); k++) {
            r.z[k] = (uint8_t)(z[k] * c % d);
            r.x[k] = (uint8_t)(x[k] * c % d);
        }
        return r;
    }
    /// (v_z | v_x) as one row of length 2n.
    Row to_row() const {
        Row r(z);
        r.insert(r.end(), x.begin(), x.end());
        return r;
    }
    static SymplecticVector from_row(unsigned d, const Row &r) {
        size_t n = r.size() / 2;
        return SymplecticVector(d, Row(r.begin(), r.begin() + n), Row(r.begin() + n, r.end()));
    }
    void check(const SymplecticVector &o) const {
        if (d != o.d || n() != o.n()) throw std::invalid_argument("symplectic vector shape mismatch");
    }
    friend bool operator==(const SymplecticVector &a, const SymplecticVector &b) {
        return a.d == b.d && a.z == b.z && a.x == b.x;
    }
    friend bool operator!=(const SymplecticVector &a, const SymplecticVector &b) {
        return !(a == b);
    }
    /// Lexicographic on (v_z, v_x).
    friend bool operator<(const SymplecticVector &a, const SymplecticVector &b) {
        if (a.z != b.z) return a.z < b.z;
        return a.x < b.x;
    }
};

inline FieldSpec quantum_field(unsigned d) {
    require_qudit_dim(d);
    return FieldSpec::of_order(d * d);
}

/// v_z + a v_x in F_{d^2}^n (index c0 + d c1).
inline Row iota(const SymplecticVector &v) {
    Row r(v.n());
    for (size_t k = 0; k < v.n(); k++) r[k] = (uint8_t)(v.z[k] + v.d * v.x[k]);
    return r;
}

inline SymplecticVector iota_inv(unsigned d, const Row &c) {
    SymplecticVector v(d, c.size());
    for (size_t k = 0; k < c.size(); k++) {
        if (c[k] >= d * d) throw std::invalid_argument("entry outside F_{d^2}");
        v.z[k] = (uint8_t)(c[k] % d);
        v.x[k] = (uint8_t)(c[k] / d);
    }
    return v;
}

/// [u, v] = <u_z, v_x> - <u_x, v_z> in F_d.
inline unsigned symplectic_form(const SymplecticVector &u, const SymplecticVector &v) {
    u.check(v);
    long s = 0;
    for (size_t k = 0; k < u.n(); k++) s += (long)u.z[k] * v.x[k] - (long)u.x[k] * v.z[k];
    long d = u.d;
    return (unsigned)(((s % d) + d) % d);
}

inline unsigned symplectic_weight(const SymplecticVector &v) {
    unsigned w = 0;
    for (size_t k = 0; k < v.n(); k++) w += (v.z[k] || v.x[k]);
    return w;
}

/// Exponent beta with T_u T_v = w^(-beta) T_{u+v} for commuting u, v.
/// d=2 uses T_v = i^(-<v_z,v_x>) Z^(v_z) X^(v_x); for d=3 beta is 0.
inline unsigned beta(const SymplecticVector &u, const SymplecticVector &v) {
    u.check(v);
    if (u.d == 3) return 0;
    if (u.d != 2) throw std::invalid_argument("beta is defined for d = 2, 3");
    int au = 0, av = 0, aw = 0, cross = 0;
    for (size_t k = 0; k < u.n(); k++) {
        au += u.z[k] & u.x[k];
        av += v.z[k] & v.x[k];
        aw += ((u.z[k] ^ v.z[k]) & (u.x[k] ^ v.x[k]));
        cross += u.x[k] & v.z[k];
    }
    int e = ((-au - av + aw + 2 * cross) % 4 + 4) % 4;
    if (e % 2) throw std::invalid_argument("beta needs commuting Paulis");
    return (unsigned)(e / 2);
}

/// Single-qubit symplectic action of M3 (X -> Y -> Z -> X), blockwise.
inline SymplecticVector m3_action(const SymplecticVector &v) {
    if (v.d != 2) throw std::invalid_argument("M3 acts on qubits");
    SymplecticVector r(2, v.n());
    for (size_t k = 0; k < v.n(); k++) {
        r.z[k] = v.x[k];
        r.x[k] = (uint8_t)(v.z[k] ^ v.x[k]);
    }
    return r;
}

/// Stabilizer code from a quantum QR construction.
struct QuantumQRCode {
    unsigned d = 2;
    size_t p = 0;
    std::vector<SymplecticVector> basis;
    std::vector<uint8_t> signs;  // r(basis[i]) in F_d
    LinearCode classical;        // expurgated QR code over F_{d^2}
    std::optional<bool> css;
    std::optional<unsigned> distance;

    size_t n() const {
        return p;
    }
    std::vector<Row> basis_rows() const {
        std::vector<Row> r;
        for (auto &b : basis) r.push_back(b.to_row());
        return r;
    }
};

/// Value of r on v in I, folded along the basis with r(a+b) = r(a) + r(b) + beta(a,b).
/// nullopt when v is not in I.
inline std::optional<unsigned> sign_of(const QuantumQRCode &code, const std::vector<uint8_t> &signs,
                                       const SymplecticVector &v) {
    SmallField F(FieldSpec::prime(code.d));
    auto rows = code.basis_rows();
    RowEchelon e = row_reduce(F, rows);
    auto coeff = express_in_basis(F, e, rows.size(), v.to_row());
    if (!coeff) return std::nullopt;
    SymplecticVector acc(code.d, code.n());
    unsigned r = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        for (unsigned c = 0; c < (*coeff)[i]; c++) {
            r = (r + signs[i] + beta(acc, code.basis[i])) % code.d;
            acc = acc + code.basis[i];
        }
    }
    return r;
}

/// r(b) = swt(b)/2 mod 2 on each basis element (d=2).
inline std::vector<uint8_t> rall_signs(const QuantumQRCode &code) {
    if (code.d != 2) throw std::invalid_argument("Rall signs are for qubit codes");
    std::vector<uint8_t> r;
    for (auto &b : code.basis) {
        unsigned w = symplectic_weight(b);
        if (w % 2) throw std::logic_error("odd-weight stabilizer in a qubit QR code");
        r.push_back((uint8_t)((w / 2) % 2));
    }
    return r;
}

/// Every basis element maps under M3 into I with the same sign.
inline bool check_transversal_m3(const QuantumQRCode &code, const std::vector<uint8_t> &signs) {
    if (code.d != 2) throw std::invalid_argument("M3 acts on qubits");
    for (size_t i = 0; i < code.basis.size(); i++) {
        auto r = sign_of(code, signs, m3_action(code.basis[i]));
        if (!r || *r != signs[i]) return false;
    }
    return true;
}

/// Visits every element of span(basis) with its folded sign, in modular Gray order.
template <class Fn>
void for_each_in_span(unsigned d, size_t n, const std::vector<SymplecticVector> &basis,
                      const std::vector<uint8_t> &signs, Fn &&fn) {
    size_t k = basis.size();
    SymplecticVector u(d, n);
    unsigned r = 0;
    fn(u, r);
    std::vector<unsigned> b(k, 0);
    for (;;) {
        size_t i = 0;
        while (i < k && b[i] == d - 1) b[i++] = 0;
        if (i >= k) break;
        b[i]++;
        r = (r + signs[i] + beta(u, basis[i])) % d;
        u = u + basis[i];
        fn(u, r);
    }
}

template <class Fn>
void for_each_stabilizer(const QuantumQRCode &code, const std::vector<uint8_t> &signs, Fn &&fn) {
    for_each_in_span(code.d, code.n(), code.basis, signs, std::forward<Fn>(fn));
}

/// Exhaustively (|I| <= 2^28, n <= 64) or on `samples` random elements,
/// checks that the signed group generated by the basis assigns
/// swt(u)/2 mod 2 to every u. Qubits only.
inline bool check_rall_consistency(const QuantumQRCode &code, const std::vector<uint8_t> &signs,
                                   unsigned samples = 20000, uint64_t seed = 7) {
    if (code.d != 2) throw std::invalid_argument("Rall signs are for qubit codes");
    size_t k = code.basis.size(), n = code.n();
    if (k <= 28 && n <= 64) {
        std::vector<uint64_t> bz(k, 0), bx(k, 0);
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < n; j++) {
                bz[i] |= (uint64_t)code.basis[i].z[j] << j;
                bx[i] |= (uint64_t)code.basis[i].x[j] << j;
            }
        }
        uint64_t uz = 0, ux = 0;
        unsigned r = 0;
        for (uint64_t s = 1; s < (uint64_t(1) << k); s++) {
            size_t i = (size_t)std::countr_zero(s);
            int au = std::popcount(uz & ux), av = std::popcount(bz[i] & bx[i]);
            uint64_t wz = uz ^ bz[i], wx = ux ^ bx[i];
            int aw = std::popcount(wz & wx), cross = std::popcount(ux & bz[i]);
            int e = ((-au - av + aw + 2 * cross) % 4 + 4) % 4;
            if (e % 2) return false;
            r = (r + signs[i] + (unsigned)(e / 2)) % 2;
            uz = wz;
            ux = wx;
            int w = std::popcount(uz | ux);
            if (w % 2 || (unsigned)((w / 2) % 2) != r) return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (unsigned s = 0; s < samples; s++) {
        SymplecticVector acc(2, n);
        unsigned r = 0;
        for (size_t i = 0; i < k; i++) {
            if (rng() & 1) {
                r = (r + signs[i] + beta(acc, code.basis[i])) % 2;
                acc = acc + code.basis[i];
            }
        }
        unsigned w = symplectic_weight(acc);
        if (w % 2 || (w / 2) % 2 != r) return false;
    }
    return true;
}

/// Basis of the symplectic complement of span(vectors) in F_d^(2n).
inline std::vector<SymplecticVector> symplectic_complement(unsigned d, size_t n,
                                                           const std::vector<SymplecticVector> &vectors) {
    // [u, b] = (u_z, u_x) . (b_x, -b_z)
    std::vector<Row> rows;
    for (auto &b : vectors) {
        Row r(b.x);
        for (auto c : b.z) r.push_back((uint8_t)((d - c) % d));
        rows.push_back(r);
    }
    SmallField F(FieldSpec::prime(d));
    std::vector<SymplecticVector> out;
    for (auto &r : nullspace(F, rows, 2 * n)) out.push_back(SymplecticVector::from_row(d, r));
    return out;
}

inline bool is_isotropic(const std::vector<SymplecticVector> &vectors) {
    for (size_t i = 0; i < vectors.size(); i++) {
        for (size_t j = i + 1; j < vectors.size(); j++) {
            if (symplectic_form(vectors[i], vectors[j])) return false;
        }
    }
    return true;
}

inline QuantumQRCode build_quantum_qr(int64_t p, unsigned d) {
    require_qudit_dim(d);
    if (!is_prime(p) || p < 3) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    if (!quantum_qr_exists(p, d)) {
        throw std::invalid_argument("no quantum QR code of length " + std::to_string(p) + ": " +
                                    existence_rule_text(d));
    }
    LinearCode C = qr_code(p, d * d, QRVariant::expurgated);
    if (!is_hermitian_self_orthogonal(C)) throw std::logic_error("expurgated QR code is not Hermitian self-orthogonal");
    SmallField F = C.arithmetic();
    uint8_t alpha = (uint8_t)d;  // index of the generator a
    QuantumQRCode code{d, (size_t)p, {}, {}, C, std::nullopt, std::nullopt};
    for (const Row &g : C.generators()) {
        code.basis.push_back(iota_inv(d, g));
        code.basis.push_back(iota_inv(d, F.scale(alpha, g)));
    }
    if (!is_isotropic(code.basis)) throw std::logic_error("quantum QR basis is not isotropic");
    if (rank(SmallField(FieldSpec::prime(d)), code.basis_rows()) != (size_t)p - 1) {
        throw std::logic_error("quantum QR basis has the wrong dimension");
    }
    code.signs = d == 2 ? rall_signs(code) : std::vector<uint8_t>(code.basis.size(), 0);
    return code;
}

struct CssStructure {
    bool css = false;
    std::vector<Row> z_block;  // Z-only stabilizers (z parts)
    std::vector<Row> x_block;  // X-only stabilizers (x parts)
};

/// Row reduction with one block's columns first exposes the subspace that
/// vanishes on that block; the code is CSS when the two pure subspaces fill I
/// and share one row space H.
inline CssStructure is_css(const QuantumQRCode &code) {
    size_t n = code.n();
    SmallField F(FieldSpec::prime(code.d));
    auto rows = code.basis_rows();
    auto pure = [&](bool keep_z) {
        std::vector<size_t> order;
        for (size_t j = 0; j < n; j++) order.push_back(keep_z ? n + j : j);
        for (size_t j = 0; j < n; j++) order.push_back(keep_z ? j : n + j);
        RowEchelon e = row_reduce(F, rows, &order);
        std::vector<Row> out;
        for (size_t i = 0; i < e.rows.size(); i++) {
            bool first_block = keep_z ? e.pivots[i] >= n : e.pivots[i] < n;
            if (first_block) continue;
            const Row &r = e.rows[i];
            out.push_back(keep_z ? Row(r.begin(), r.begin() + n) : Row(r.begin() + n, r.end()));
        }
        return out;
    };
    CssStructure s;
    s.z_block = pure(true);
    s.x_block = pure(false);
    s.css = s.z_block.size() + s.x_block.size() == rows.size() && same_row_space(F, s.z_block, s.x_block);
    return s;
}

/// delta_Q = delta_C - 1 for the expurgated classical distance delta_C.
inline unsigned quantum_distance_from_classical(unsigned classical_distance) {
    if (classical_distance < 2) throw std::invalid_argument("classical distance must be at least 2");
    return classical_distance - 1;
}

inline unsigned quantum_distance(const QuantumQRCode &, unsigned classical_distance) {
    return quantum_distance_from_classical(classical_distance);
}

/// min wt over C^{perp_H} \ C by explicit enumeration (guard: dual size <= 2^22).
inline unsigned quantum_distance_bruteforce(const QuantumQRCode &code) {
    LinearCode dual = hermitian_dual(code.classical);
    require_brute_force_size(dual, 4194304.0);
    SmallField F = dual.arithmetic();
    auto H = euclidean_dual(code.classical).generators();
    size_t k = dual.dimension(), n = dual.length();
    unsigned q = dual.q(), best = (unsigned)n + 1;
    std::vector<unsigned> msg(k, 0);
    Row word(n, 0);
    for (;;) {
        size_t i = 0;
        while (i < k && msg[i] == q - 1) {
            F.axpy(word, F.neg((uint8_t)msg[i]), dual.generators()[i]);
            msg[i++] = 0;
        }
        if (i >= k) break;
        F.axpy(word, F.sub((uint8_t)(msg[i] + 1), (uint8_t)msg[i]), dual.generators()[i]);
        msg[i]++;
        unsigned w = 0;
        for (auto c : word) w += c != 0;
        if (w >= best) continue;
        bool in_c = true;
        for (auto &h : H) {
            if (F.dot(h, word)) {
                in_c = false;
                break;
            }
        }
        if (!in_c) best = w;
    }
    return best;
}

/// iota(I^perp) equals the F_d-expansion of the Hermitian dual.
inline bool check_mth_equals_hermitian(const QuantumQRCode &code) {
    unsigned d = code.d;
    auto comp = symplectic_complement(d, code.n(), code.basis);
    LinearCode hd = hermitian_dual(code.classical);
    SmallField Fq = hd.arithmetic();
    std::vector<Row> a, b;
    for (auto &v : comp) a.push_back(v.to_row());
    for (auto &g : hd.generators()) {
        b.push_back(iota_inv(d, g).to_row());
        b.push_back(iota_inv(d, Fq.scale((uint8_t)d, g)).to_row());
    }
    return same_row_space(SmallField(FieldSpec::prime(d)), a, b);
}

struct LogicalOperators {
    SymplecticVector x, y, z;
    bool minimal = false;  // minimum-weight coset representatives
};

inline SymplecticVector constant_pauli(unsigned d, size_t n, unsigned cz, unsigned cx) {
    return SymplecticVector(d, std::vector<uint8_t>(n, (uint8_t)cz), std::vector<uint8_t>(n, (uint8_t)cx));
}

/// Minimum-weight element of v + I (ties: lexicographic), enumerating I.
inline SymplecticVector min_weight_in_coset(const QuantumQRCode &code, const SymplecticVector &v) {
    SymplecticVector best = v;
    unsigned bw = symplectic_weight(v);
    for_each_stabilizer(code, std::vector<uint8_t>(code.basis.size(), 0), [&](const SymplecticVector &u, unsigned) {
        SymplecticVector c = v + u;
        unsigned w = symplectic_weight(c);
        if (w < bw || (w == bw && c < best)) {
            best = c;
            bw = w;
        }
    });
    return best;
}

/// Coset representatives for X^p, Y^p (d=2) or X^p Z^p (d=3), Z^p. For qubits
/// the cosets satisfy y = S x, z = S y modulo I. Minimum-weight representatives
/// when |I| <= 2^20, else the constant vectors themselves.
inline LogicalOperators logical_representatives(const QuantumQRCode &code) {
    unsigned d = code.d;
    size_t n = code.n();
    LogicalOperators L;
    L.x = constant_pauli(d, n, 0, 1);
    L.z = constant_pauli(d, n, 1, 0);
    L.y = d == 2 ? m3_action(L.x) : L.x + L.z;
    double log2_size = (double)code.basis.size() * std::log2((double)d);
    if (log2_size <= 20.0) {
        L.x = min_weight_in_coset(code, L.x);
        L.y = min_weight_in_coset(code, L.y);
        L.z = min_weight_in_coset(code, L.z);
        L.minimal = true;
    }
    if (symplectic_form(L.x, L.z) != 1) throw std::logic_error("logical X and Z do not form a symplectic pair");
    return L;
}

}  // namespace qrmagic

#endif  // QRMAGIC_QUANTUM_HPP_
