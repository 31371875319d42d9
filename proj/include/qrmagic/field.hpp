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

#ifndef QRMAGIC_FIELD_HPP_
#define QRMAGIC_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrmagic {

using u128 = unsigned __int128;

namespace detail {

// Polynomials over a prime field F_p, lowest coefficient first, no trailing
// zeros (the zero polynomial is the empty vector).
using Digits = std::vector<uint32_t>;

inline void trim(Digits &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline uint32_t inv_mod_prime(uint32_t a, uint32_t p) {
    // p is tiny; Fermat is fine.
    uint64_t r = 1, b = a % p;
    for (uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return (uint32_t)r;
}

inline Digits poly_mul(const Digits &a, const Digits &b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++) {
            acc[i + j] += (uint64_t)a[i] * b[j];
        }
    }
    Digits out(acc.size());
    for (size_t i = 0; i < acc.size(); i++) out[i] = (uint32_t)(acc[i] % p);
    trim(out);
    return out;
}

// Remainder of a modulo a nonzero polynomial f.
inline Digits poly_mod(Digits a, const Digits &f, uint32_t p) {
    trim(a);
    size_t df = f.size() - 1;
    uint32_t lead_inv = inv_mod_prime(f.back(), p);
    while (a.size() > df) {
        size_t shift = a.size() - 1 - df;
        uint32_t c = (uint32_t)((uint64_t)a.back() * lead_inv % p);
        for (size_t i = 0; i <= df; i++) {
            uint32_t sub = (uint32_t)((uint64_t)c * f[i] % p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

inline Digits poly_sub(Digits a, const Digits &b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); i++) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Digits poly_gcd(Digits a, Digits b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Digits r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Digits poly_powmod(Digits base, u128 e, const Digits &f, uint32_t p) {
    Digits r{1};
    base = poly_mod(base, f, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        e >>= 1;
        if (e) base = poly_mod(poly_mul(base, base, p), f, p);
    }
    return r;
}

inline std::vector<uint32_t> prime_factors(uint64_t n) {
    std::vector<uint32_t> out;
    for (uint64_t f = 2; f * f <= n; f++) {
        if (n % f == 0) {
            out.push_back((uint32_t)f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back((uint32_t)n);
    return out;
}

// Rabin's test: monic f of degree m is irreducible over F_p iff
// x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for each prime r | m.
inline bool is_irreducible(const Digits &f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Digits x{0, 1};
    // h[k] = x^(p^k) mod f, built by repeated p-th powers.
    std::vector<Digits> h(m + 1);
    h[0] = poly_mod(x, f, p);
    for (size_t k = 1; k <= m; k++) h[k] = poly_powmod(h[k - 1], p, f, p);
    if (h[m] != h[0]) return false;
    for (uint32_t r : prime_factors(m)) {
        Digits g = poly_gcd(f, poly_sub(h[m / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// A finite field F_{p^m} = F_p[a]/(modulus). Elements are integer indices
/// repr = c_0 + c_1 p + ... + c_{m-1} p^{m-1} over the basis {1, a, ..., a^{m-1}}.
class FieldSpec {
   public:
    /// F_2.
    FieldSpec() : FieldSpec(2, {0, 1}) {
    }

    static FieldSpec prime(uint32_t p) {
        return FieldSpec(p, {0, 1});
    }
    /// F_4 = F_2[a]/(a^2 + a + 1).
    static FieldSpec gf4() {
        return FieldSpec(2, {1, 1, 1});
    }
    /// F_9 = F_3[a]/(a^2 + 1).
    static FieldSpec gf9() {
        return FieldSpec(3, {1, 0, 1});
    }
    /// One of F_2, F_3, F_4, F_9 with the fixed moduli above.
    static FieldSpec of_order(uint64_t q) {
        switch (q) {
            case 2: return prime(2);
            case 3: return prime(3);
            case 4: return gf4();
            case 9: return gf9();
            default: throw std::invalid_argument("unsupported field order " + std::to_string(q));
        }
    }
    /// F_p[a]/(modulus); modulus is monic, lowest coefficient first.
    static FieldSpec extension(uint32_t p, std::vector<uint32_t> modulus) {
        return FieldSpec(p, std::move(modulus));
    }
    /// Degree-m extension whose modulus is the monic irreducible with the
    /// smallest index c_0 + c_1 p + ... + c_{m-1} p^{m-1} of its lower coefficients.
    static FieldSpec smallest_irreducible(uint32_t p, uint32_t m) {
        check_prime(p);
        if (m == 0) throw std::invalid_argument("extension degree must be positive");
        if (m == 1) return prime(p);
        detail::Digits f(m + 1, 0);
        f[m] = 1;
        for (;;) {
            if (f[0] != 0 && detail::is_irreducible(f, p)) return FieldSpec(p, f, true);
            size_t i = 0;
            while (i < m && ++f[i] == p) f[i++] = 0;
            if (i == m) throw std::logic_error("no irreducible polynomial found");
        }
    }

    uint32_t characteristic() const {
        return impl_->p;
    }
    uint32_t degree() const {
        return impl_->m;
    }
    u128 order() const {
        return impl_->order;
    }
    const std::vector<uint32_t> &modulus() const {
        return impl_->modulus;
    }
    bool has_tables() const {
        return !impl_->mul.empty();
    }
    /// Row-major order*order tables, available when order <= 256.
    const uint8_t *add_table() const {
        return impl_->add.data();
    }
    const uint8_t *mul_table() const {
        return impl_->mul.data();
    }
    const uint8_t *neg_table() const {
        return impl_->neg.data();
    }
    const uint8_t *inv_table() const {
        return impl_->inv.data();
    }

    u128 add(u128 a, u128 b) const {
        if (has_tables()) return impl_->add[(size_t)(a * impl_->order + b)];
        if (impl_->p == 2) return a ^ b;
        return encode(combine(decode(a), decode(b), 1));
    }
    u128 sub(u128 a, u128 b) const {
        return add(a, neg(b));
    }
    u128 neg(u128 a) const {
        if (has_tables()) return impl_->neg[(size_t)a];
        if (impl_->p == 2) return a;
        return encode(combine({}, decode(a), impl_->p - 1));
    }
    u128 mul(u128 a, u128 b) const {
        if (has_tables()) return impl_->mul[(size_t)(a * impl_->order + b)];
        return encode(detail::poly_mod(detail::poly_mul(decode(a), decode(b), impl_->p), impl_->modulus, impl_->p));
    }
    u128 pow(u128 a, u128 e) const {
        u128 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }
    u128 inv(u128 a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (has_tables()) return impl_->inv[(size_t)a];
        return pow(a, impl_->order - 2);
    }
    /// Coefficient vector of repr, lowest first, length degree().
    std::vector<uint32_t> coefficients(u128 a) const {
        std::vector<uint32_t> out(impl_->m, 0);
        for (uint32_t i = 0; i < impl_->m; i++) {
            out[i] = (uint32_t)(a % impl_->p);
            a /= impl_->p;
        }
        return out;
    }
    u128 from_coefficients(const std::vector<uint32_t> &c) const {
        return encode(c);
    }
    std::string name() const {
        return "F" + std::to_string((uint64_t)impl_->order);
    }

    friend bool operator==(const FieldSpec &a, const FieldSpec &b) {
        return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
    }
    friend bool operator!=(const FieldSpec &a, const FieldSpec &b) {
        return !(a == b);
    }

   private:
    struct Impl {
        uint32_t p = 2;
        uint32_t m = 1;
        u128 order = 2;
        detail::Digits modulus;
        std::vector<uint8_t> add, mul, neg, inv;
    };

    static void check_prime(uint32_t p) {
        if (p < 2) throw std::invalid_argument("characteristic must be prime");
        for (uint32_t f = 2; f * f <= p; f++) {
            if (p % f == 0) throw std::invalid_argument("characteristic must be prime");
        }
    }

    FieldSpec(uint32_t p, detail::Digits modulus, bool known_irreducible = false) {
        check_prime(p);
        if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
        for (uint32_t c : modulus) {
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (!known_irreducible && !detail::is_irreducible(modulus, p)) {
            throw std::invalid_argument("modulus is reducible");
        }
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->m = (uint32_t)(modulus.size() - 1);
        impl->modulus = std::move(modulus);
        u128 order = 1;
        for (uint32_t i = 0; i < impl->m; i++) {
            if (order > ((u128)1 << 120) / p) throw std::invalid_argument("field too large");
            order *= p;
        }
        impl->order = order;
        impl_ = impl;
        if (order <= 256) build_tables(*impl);
    }

    void build_tables(Impl &impl) {
        size_t q = (size_t)impl.order;
        impl.add.resize(q * q);
        impl.mul.resize(q * q);
        impl.neg.resize(q);
        impl.inv.resize(q, 0);
        // Tables are still empty here, so add/mul below take the polynomial path.
        for (size_t a = 0; a < q; a++) {
            impl.neg[a] = (uint8_t)encode(combine({}, decode(a), impl.p - 1));
            for (size_t b = 0; b < q; b++) {
                impl.add[a * q + b] = (uint8_t)encode(combine(decode(a), decode(b), 1));
                impl.mul[a * q + b] = (uint8_t)encode(
                    detail::poly_mod(detail::poly_mul(decode(a), decode(b), impl.p), impl.modulus, impl.p));
            }
        }
        for (size_t a = 1; a < q; a++) {
            for (size_t b = 1; b < q; b++) {
                if (impl.mul[a * q + b] == 1) impl.inv[a] = (uint8_t)b;
            }
        }
    }

    detail::Digits decode(u128 a) const {
        detail::Digits d;
        while (a) {
            d.push_back((uint32_t)(a % impl_->p));
            a /= impl_->p;
        }
        return d;
    }
    u128 encode(const detail::Digits &d) const {
        u128 r = 0;
        for (size_t i = d.size(); i-- > 0;) r = r * impl_->p + d[i];
        return r;
    }
    // a + s*b coefficientwise.
    detail::Digits combine(detail::Digits a, const detail::Digits &b, uint32_t s) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); i++) a[i] = (uint32_t)((a[i] + (uint64_t)s * b[i]) % impl_->p);
        detail::trim(a);
        return a;
    }

    std::shared_ptr<const Impl> impl_;
};

/// Value type pairing a FieldSpec with an element index.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(FieldSpec spec, u128 repr) : spec_(std::move(spec)), repr_(repr) {
        if (repr_ >= spec_.order()) throw std::invalid_argument("element index out of range");
    }

    const FieldSpec &spec() const {
        return spec_;
    }
    u128 repr() const {
        return repr_;
    }
    bool is_zero() const {
        return repr_ == 0;
    }

    FieldElement operator+(const FieldElement &o) const {
        check(o);
        return {spec_, spec_.add(repr_, o.repr_), 0};
    }
    FieldElement operator-(const FieldElement &o) const {
        check(o);
        return {spec_, spec_.sub(repr_, o.repr_), 0};
    }
    FieldElement operator-() const {
        return {spec_, spec_.neg(repr_), 0};
    }
    FieldElement operator*(const FieldElement &o) const {
        check(o);
        return {spec_, spec_.mul(repr_, o.repr_), 0};
    }
    FieldElement inv() const {
        if (repr_ == 0) throw std::invalid_argument("inverse of zero");
        return {spec_, spec_.inv(repr_), 0};
    }
    FieldElement pow(u128 e) const {
        return {spec_, spec_.pow(repr_, e), 0};
    }
    friend bool operator==(const FieldElement &a, const FieldElement &b) {
        return a.repr_ == b.repr_ && a.spec_ == b.spec_;
    }
    friend bool operator!=(const FieldElement &a, const FieldElement &b) {
        return !(a == b);
    }

   private:
    FieldElement(FieldSpec spec, u128 repr, int) : spec_(std::move(spec)), repr_(repr) {
    }
    void check(const FieldElement &o) const {
        if (spec_ != o.spec_) throw std::invalid_argument("field mismatch");
    }

    FieldSpec spec_;
    u128 repr_ = 0;
};

inline FieldElement add(const FieldElement &a, const FieldElement &b) {
    return a + b;
}
inline FieldElement mul(const FieldElement &a, const FieldElement &b) {
    return a * b;
}
inline FieldElement inv(const FieldElement &a) {
    return a.inv();
}

/// a^r, where r^2 is the field order (the conjugation of a quadratic extension).
inline FieldElement frobenius(const FieldElement &a, u128 subfield_order) {
    if (subfield_order < 2 || subfield_order * subfield_order != a.spec().order()) {
        throw std::invalid_argument("subfield order must square to the field order");
    }
    return a.pow(subfield_order);
}

/// x + conj(x), landing in the prime subfield of a quadratic extension.
inline FieldElement trace_to_subfield(const FieldElement &a) {
    if (a.spec().degree() != 2) throw std::invalid_argument("trace needs a quadratic extension");
    return a + frobenius(a, a.spec().characteristic());
}

/// Multiplicative order of q modulo p.
inline uint32_t extension_degree(uint64_t q, uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    uint64_t a = q % p, b = p;
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    if (a != 1) throw std::invalid_argument("gcd(q, p) != 1");
    uint32_t m = 1;
    uint64_t x = q % p;
    while (x != 1 % p) {
        x = x * (q % p) % p;
        m++;
    }
    return m;
}

/// The first z^((Q-1)/p) (z = 2, 3, ... by index) with exact multiplicative order p.
inline FieldElement primitive_root_of_unity(const FieldSpec &spec, uint64_t p) {
    u128 Q = spec.order();
    if (p < 2 || (Q - 1) % p != 0) throw std::invalid_argument("p does not divide field order - 1");
    std::vector<uint32_t> factors = detail::prime_factors(p);
    for (u128 z = 2; z < Q; z++) {
        u128 c = spec.pow(z, (Q - 1) / p);
        bool ok = c != 1;
        for (uint32_t r : factors) {
            if (spec.pow(c, p / r) == 1) ok = false;
        }
        if (ok) return FieldElement(spec, c);
    }
    throw std::logic_error("no primitive root of unity found");
}

/// Images of the elements of `small` (a prime field, or a quadratic extension
/// of the same prime field) inside `big`, indexed by repr. The quadratic
/// generator maps to the first root of its modulus of the form z^((Q-1)/(q-1)).
inline std::vector<u128> embed_subfield(const FieldSpec &small, const FieldSpec &big) {
    uint32_t p = small.characteristic();
    if (big.characteristic() != p || big.degree() % small.degree() != 0) {
        throw std::invalid_argument("not a subfield");
    }
    size_t q = (size_t)small.order();
    std::vector<u128> img(q);
    if (small.degree() == 1) {
        for (size_t a = 0; a < q; a++) img[a] = a;
        return img;
    }
    if (small.degree() != 2) throw std::invalid_argument("only prime and quadratic subfields are supported");
    const auto &f = small.modulus();
    u128 Q = big.order();
    u128 beta = 0;
    bool found = false;
    for (u128 z = 2; z < Q && !found; z++) {
        u128 b = big.pow(z, (Q - 1) / (q - 1));
        // b^2 + f1 b + f0 with f_i in the prime field (repr = value).
        u128 v = big.add(big.add(big.mul(b, b), big.mul(f[1], b)), f[0]);
        if (v == 0) {
            beta = b;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no root of the subfield modulus");
    for (size_t a = 0; a < q; a++) {
        img[a] = big.add(a % p, big.mul((u128)(a / p), beta));
    }
    return img;
}

}  // namespace qrmagic

#endif  // QRMAGIC_FIELD_HPP_
