#!/usr/bin/env python3
# Copyright 2026 The qrmagic Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force oracle for the frozen values in the C++ tests.

Builds small QR codes by exhaustive search for monic divisors of x^p - 1
(no splitting fields, no roots of unity), then enumerates every codeword.
Run it to regenerate the numbers quoted in tests/*.cpp.
"""
import itertools
from fractions import Fraction


class GF:
    """F_{p^2} (or F_p when m == 1) with an explicit modulus x^2 + c1 x + c0."""

    def __init__(self, p, modulus=None):
        self.p = p
        self.m = 1 if modulus is None else 2
        self.mod = modulus
        self.q = p ** self.m

    def dec(self, a):
        return (a % self.p, a // self.p) if self.m == 2 else (a, 0)

    def enc(self, c0, c1):
        return (c0 % self.p) + self.p * (c1 % self.p) if self.m == 2 else c0 % self.p

    def add(self, a, b):
        a0, a1 = self.dec(a)
        b0, b1 = self.dec(b)
        return self.enc(a0 + b0, a1 + b1)

    def neg(self, a):
        a0, a1 = self.dec(a)
        return self.enc(-a0, -a1)

    def mul(self, a, b):
        a0, a1 = self.dec(a)
        b0, b1 = self.dec(b)
        if self.m == 1:
            return (a0 * b0) % self.p
        c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        m0, m1 = self.mod  # x^2 = -m1 x - m0
        return self.enc(c0 - c2 * m0, c1 - c2 * m1)

    def elems(self):
        return range(self.q)


GF4 = GF(2, (1, 1))  # a^2 + a + 1
GF9 = GF(3, (1, 0))  # a^2 + 1


def polymul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def polydivides(F, g, n):
    """True iff g divides x^n - 1 (g monic, low-first)."""
    rem = [F.neg(1)] + [0] * (n - 1) + [1]
    dg = len(g) - 1
    for top in range(n, dg - 1, -1):
        c = rem[top]
        if c:
            for i in range(dg + 1):
                rem[top - dg + i] = F.add(rem[top - dg + i], F.neg(F.mul(c, g[i])))
    return not any(rem[:dg])


def divisors_of_degree(F, n, deg):
    out = []
    for tail in itertools.product(F.elems(), repeat=deg):
        g = list(tail) + [1]
        if polydivides(F, g, n):
            out.append(g)
    return out


def span(F, rows, n):
    words = set()
    for coeffs in itertools.product(F.elems(), repeat=len(rows)):
        w = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                w = [F.add(x, F.mul(c, y)) for x, y in zip(w, r)]
        words.add(tuple(w))
    return words


def cyclic_rows(g, n):
    k = n - (len(g) - 1)
    return [[0] * i + g + [0] * (n - len(g) - i) for i in range(k)]


def enumerator(words, n):
    A = [0] * (n + 1)
    for w in words:
        A[sum(1 for x in w if x)] += 1
    return A


def qr_codes(F, p):
    """(expurgated, augmented, extended) word sets built from x^p - 1 divisors.

    Among degree-(p-1)/2 divisors without the factor (x - 1) there are exactly
    two (the Q and N codes); both give the same weight distributions.
    """
    deg = (p - 1) // 2
    cands = [g for g in divisors_of_degree(F, p, deg) if sum(g) % F.p != 0 or F.m == 2]
    cands = [g for g in cands if not polydivides_root_one(F, g)]
    g = cands[0]
    aug_rows = cyclic_rows(g, p)
    exp_rows = cyclic_rows(polymul(F, g, [F.neg(1), 1]), p)
    aug = span(F, aug_rows, p)
    exp = span(F, exp_rows, p)
    ext_rows = [r + [F.neg(sum_f(F, r))] for r in aug_rows]
    ext = span(F, ext_rows, p + 1)
    return exp, aug, ext


def sum_f(F, r):
    s = 0
    for x in r:
        s = F.add(s, x)
    return s


def polydivides_root_one(F, g):
    # g(1) == 0 ?
    return sum_f(F, g) == 0


def main():
    for name, F, ps in (("GF4", GF4, (5, 7, 13)), ("GF9", GF9, (5, 11))):
        for p in ps:
            exp, aug, ext = qr_codes(F, p)
            print(name, "p=%d" % p)
            print("  expurgated", enumerator(exp, p))
            print("  augmented ", enumerator(aug, p))
            print("  extended  ", enumerator(ext, p + 1))
            nz = [w for w in exp if any(w)]
            print("  exp min distance", min(sum(1 for x in w if x) for w in nz))
    # Punctured extended (last coordinate) for p=7 over F4.
    exp, aug, ext = qr_codes(GF4, 7)
    punct = {w[:-1] for w in ext}
    print("GF4 p=7 extended punctured", enumerator(punct, 7))
    # Success probability at eps=0 for T states, from the published F4 enumerator.
    t23 = {0: 1, 8: 1518, 12: 110124, 14: 425040, 16: 1298649, 18: 1530144,
           20: 743820, 22: 85008}
    ps = sum(Fraction(a * (-1) ** (w // 2), 3 ** (w // 2)) for w, a in t23.items()) / 2 ** 22
    print("P_s(0) p=23 T =", ps, float(ps))
    # Extended QR(24,4) weight-8 count from the published F4 enumerator by inverting the shortening relation.
    print("ext24 A8 =", Fraction(24, 24 - 8) * 1518)
    # Strange P_s(0) for p=11 from the published F9 enumerator: 3^{-(n-1)} W_I(x+8y, x-y), x=-1/3, y=1/6.
    t11 = {0: 1, 6: 528, 8: 7920, 9: 11000, 10: 23760, 11: 15840}
    x, y = Fraction(-1, 3), Fraction(1, 6)
    X, Y = x + 8 * y, x - y
    ps11 = sum(a * X ** (11 - w) * Y ** w for w, a in t11.items()) / 3 ** 10
    print("P_s(0) p=11 Strange =", ps11, float(ps11))


if __name__ == "__main__":
    main()
