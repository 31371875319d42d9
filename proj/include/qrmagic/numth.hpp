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

#ifndef QRMAGIC_NUMTH_HPP_
#define QRMAGIC_NUMTH_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrmagic {

/// Trial division; lengths here stay far below 10^6.
inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t f = 2; f * f <= n; f++) {
        if (n % f == 0) return false;
    }
    return true;
}

inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % m;
        b = (unsigned __int128)b * b % m;
        e >>= 1;
    }
    return r;
}

inline void require_odd_prime(int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

/// Legendre symbol (a/p) by Euler's criterion.
inline int legendre(int64_t a, int64_t p) {
    require_odd_prime(p);
    int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    uint64_t e = powmod((uint64_t)r, (uint64_t)(p - 1) / 2, (uint64_t)p);
    return e == 1 ? 1 : -1;
}

struct ResidueClassification {
    int64_t p = 0;
    std::vector<int64_t> residues;     // sorted
    std::vector<int64_t> nonresidues;  // sorted

    bool is_residue(int64_t a) const {
        return std::binary_search(residues.begin(), residues.end(), ((a % p) + p) % p);
    }
};

inline ResidueClassification classify_residues(int64_t p) {
    require_odd_prime(p);
    ResidueClassification rc;
    rc.p = p;
    std::vector<bool> sq(p, false);
    for (int64_t k = 1; k < p; k++) sq[k * k % p] = true;
    for (int64_t a = 1; a < p; a++) (sq[a] ? rc.residues : rc.nonresidues).push_back(a);
    return rc;
}

inline void require_qudit_dim(int64_t d) {
    if (d != 2 && d != 3) throw std::invalid_argument("qudit dimension must be 2 or 3");
}

/// A quantum QR code of length p on qudits of dimension d exists iff -d is a
/// nonresidue mod p.
inline bool quantum_qr_exists(int64_t p, int64_t d) {
    require_qudit_dim(d);
    require_odd_prime(p);
    if (p % d == 0) throw std::invalid_argument("length must be coprime to the qudit dimension");
    return legendre(-d, p) == -1;
}

/// Congruence form of the existence rule: p = 5, 7 mod 8 (d=2), p = 5, 11 mod 12 (d=3).
inline bool quantum_qr_exists_by_congruence(int64_t p, int64_t d) {
    require_qudit_dim(d);
    require_odd_prime(p);
    if (p % d == 0) throw std::invalid_argument("length must be coprime to the qudit dimension");
    if (d == 2) return p % 8 == 5 || p % 8 == 7;
    return p % 12 == 5 || p % 12 == 11;
}

inline std::string existence_rule_text(int64_t d) {
    return d == 2 ? "qubit codes need p = 5 or 7 (mod 8)" : "qutrit codes need p = 5 or 11 (mod 12)";
}

inline bool is_css_length(int64_t p, int64_t d) {
    if (!quantum_qr_exists(p, d)) {
        throw std::invalid_argument("no quantum QR code of length " + std::to_string(p) + ": " + existence_rule_text(d));
    }
    return d == 2 ? p % 8 == 7 : p % 12 == 11;
}

inline bool theorem8_applies(int64_t p) {
    require_odd_prime(p);
    return p % 24 == 5 || p % 24 == 23;
}

/// Orbits of multiplication by q on Z_p, each sorted by first appearance
/// (s, sq, sq^2, ...), ordered by smallest starting element.
inline std::vector<std::vector<int64_t>> cyclotomic_cosets(int64_t q, int64_t p) {
    if (p < 2 || std::gcd(q, p) != 1) throw std::invalid_argument("gcd(q, p) != 1");
    std::vector<bool> seen(p, false);
    std::vector<std::vector<int64_t>> out;
    for (int64_t s = 0; s < p; s++) {
        if (seen[s]) continue;
        std::vector<int64_t> orbit;
        int64_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            orbit.push_back(x);
            x = x * (q % p) % p;
        }
        out.push_back(orbit);
    }
    return out;
}

}  // namespace qrmagic

#endif  // QRMAGIC_NUMTH_HPP_
