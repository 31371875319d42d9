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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qrmagic/field.hpp"
#include "qrmagic/numth.hpp"

using namespace qrmagic;

namespace {

// repr = c0 + p c1
FieldElement el(const FieldSpec &f, unsigned c0, unsigned c1 = 0) {
    return FieldElement(f, c0 + f.characteristic() * c1);
}

std::vector<FieldSpec> small_fields() {
    return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::gf4(), FieldSpec::gf9()};
}

}  // namespace

TEST(Field, Moduli) {
    EXPECT_EQ(FieldSpec::gf4().modulus(), (std::vector<uint32_t>{1, 1, 1}));
    EXPECT_EQ(FieldSpec::gf9().modulus(), (std::vector<uint32_t>{1, 0, 1}));
}

TEST(Field, Add) {
    auto f4 = FieldSpec::gf4(), f9 = FieldSpec::gf9(), f2 = FieldSpec::prime(2);
    EXPECT_EQ(el(f4, 0, 1) + el(f4, 0, 1), el(f4, 0));
    EXPECT_EQ(add(el(f9, 0, 1), el(f9, 0, 1)), el(f9, 0, 2));
    EXPECT_EQ(el(f2, 1) + el(f2, 1), el(f2, 0));
}

TEST(Field, Mul) {
    auto f4 = FieldSpec::gf4(), f9 = FieldSpec::gf9();
    EXPECT_EQ(mul(el(f4, 0, 1), el(f4, 0, 1)), el(f4, 1, 1));
    EXPECT_EQ(el(f9, 0, 1) * el(f9, 0, 1), el(f9, 2));
    for (auto &f : small_fields()) {
        for (u128 x = 0; x < f.order(); x++) EXPECT_EQ(FieldElement(f, x) * FieldElement(f, 1), FieldElement(f, x));
    }
}

TEST(Field, Inverse) {
    auto f4 = FieldSpec::gf4(), f9 = FieldSpec::gf9();
    EXPECT_EQ(inv(el(f4, 0, 1)), el(f4, 1, 1));
    EXPECT_EQ(inv(el(f9, 2)), el(f9, 2));
    EXPECT_EQ(inv(el(f9, 0, 1)), el(f9, 0, 2));
    EXPECT_THROW(inv(el(f9, 0)), std::invalid_argument);
}

TEST(Field, SpecMismatchRejected) {
    EXPECT_THROW(el(FieldSpec::gf4(), 1) + el(FieldSpec::gf9(), 1), std::invalid_argument);
    EXPECT_THROW(el(FieldSpec::gf4(), 1) * el(FieldSpec::prime(2), 1), std::invalid_argument);
}

TEST(Field, Frobenius) {
    auto f4 = FieldSpec::gf4(), f9 = FieldSpec::gf9();
    EXPECT_EQ(frobenius(el(f4, 0, 1), 2), el(f4, 1, 1));
    EXPECT_EQ(frobenius(el(f9, 0, 1), 3), el(f9, 0, 2));
    EXPECT_EQ(frobenius(el(f9, 1), 3), el(f9, 1));
    EXPECT_THROW(frobenius(el(f9, 1), 2), std::invalid_argument);
}

TEST(Field, Trace) {
    auto f4 = FieldSpec::gf4(), f9 = FieldSpec::gf9();
    EXPECT_EQ(trace_to_subfield(el(f4, 0, 1)), el(f4, 1));
    EXPECT_EQ(trace_to_subfield(el(f9, 0, 1)), el(f9, 0));
    EXPECT_EQ(trace_to_subfield(el(f4, 1)), el(f4, 0));
    EXPECT_THROW(trace_to_subfield(el(FieldSpec::prime(3), 1)), std::invalid_argument);
}

TEST(Field, ExtensionDegree) {
    EXPECT_EQ(extension_degree(4, 5), 2u);
    EXPECT_EQ(extension_degree(4, 7), 3u);
    EXPECT_EQ(extension_degree(9, 5), 2u);
    EXPECT_THROW(extension_degree(9, 3), std::invalid_argument);
}

TEST(Field, PrimitiveRootOfUnity) {
    FieldSpec f16 = FieldSpec::smallest_irreducible(2, 4);
    FieldElement z = primitive_root_of_unity(f16, 5);
    EXPECT_EQ(z.pow(5), FieldElement(f16, 1));
    for (int k = 1; k < 5; k++) EXPECT_NE(z.pow(k), FieldElement(f16, 1));
    auto f4 = FieldSpec::gf4();
    FieldElement w = primitive_root_of_unity(f4, 3);
    EXPECT_TRUE(w == el(f4, 0, 1) || w == el(f4, 1, 1));
    EXPECT_THROW(primitive_root_of_unity(f4, 5), std::invalid_argument);
}

TEST(Field, AxiomsExhaustive) {
    for (auto &f : small_fields()) {
        u128 q = f.order();
        for (u128 a = 0; a < q; a++) {
            FieldElement A(f, a);
            EXPECT_EQ(A + FieldElement(f, 0), A);
            if (a) EXPECT_EQ(A * A.inv(), FieldElement(f, 1));
            for (u128 b = 0; b < q; b++) {
                FieldElement B(f, b);
                EXPECT_EQ(A + B, B + A);
                EXPECT_EQ(A * B, B * A);
                EXPECT_EQ((A - B) + B, A);
                for (u128 c = 0; c < q; c++) {
                    FieldElement C(f, c);
                    ASSERT_EQ((A + B) + C, A + (B + C));
                    ASSERT_EQ((A * B) * C, A * (B * C));
                    ASSERT_EQ(A * (B + C), A * B + A * C);
                }
            }
        }
    }
}

TEST(Field, FrobeniusIsInvolutionAndTraceInPrimeField) {
    for (auto f : {FieldSpec::gf4(), FieldSpec::gf9()}) {
        u128 r = f.characteristic();
        for (u128 a = 0; a < f.order(); a++) {
            FieldElement A(f, a);
            EXPECT_EQ(frobenius(frobenius(A, r), r), A);
            FieldElement t = trace_to_subfield(A);
            EXPECT_EQ(t.pow(r), t);
            EXPECT_LT(t.repr(), r);
        }
    }
}

TEST(Field, ModuliIrreducible) {
    for (uint32_t p : {2u, 3u}) {
        for (uint32_t m = 2; m <= 6; m++) {
            FieldSpec f = FieldSpec::smallest_irreducible(p, m);
            std::vector<uint32_t> mod = f.modulus();
            ASSERT_EQ(mod.size(), m + 1);
            // no root in the prime field
            for (uint32_t x = 0; x < p; x++) {
                uint64_t v = 0, xp = 1;
                for (uint32_t c : mod) {
                    v += c * xp;
                    xp = xp * x;
                }
                EXPECT_NE(v % p, 0u);
            }
            // the multiplicative group of a field of order p^m is cyclic
            u128 Q = f.order();
            bool generator_found = false;
            for (u128 z = 2; z < Q && !generator_found; z++) {
                std::set<u128> seen;
                u128 x = 1;
                for (u128 i = 0; i + 1 < Q; i++) {
                    seen.insert(x);
                    x = f.mul(x, z);
                }
                generator_found = seen.size() == Q - 1;
            }
            EXPECT_TRUE(generator_found) << "p=" << p << " m=" << m;
        }
    }
    EXPECT_THROW(FieldSpec::extension(2, {1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x+1)^2
}

TEST(Field, SubfieldEmbeddingIsHomomorphism) {
    FieldSpec small = FieldSpec::gf9();
    FieldSpec big = FieldSpec::smallest_irreducible(3, 4);
    auto img = embed_subfield(small, big);
    for (u128 a = 0; a < 9; a++) {
        for (u128 b = 0; b < 9; b++) {
            EXPECT_EQ(img[(size_t)small.add(a, b)], big.add(img[(size_t)a], img[(size_t)b]));
            EXPECT_EQ(img[(size_t)small.mul(a, b)], big.mul(img[(size_t)a], img[(size_t)b]));
        }
    }
}

TEST(Numth, Legendre) {
    EXPECT_EQ(legendre(-2, 5), -1);
    EXPECT_EQ(legendre(-3, 11), -1);
    EXPECT_EQ(legendre(0, 7), 0);
    EXPECT_THROW(legendre(1, 9), std::invalid_argument);
    EXPECT_THROW(legendre(1, 2), std::invalid_argument);
}

TEST(Numth, LegendreMultiplicative) {
    for (int64_t p : {3, 5, 7, 11, 13, 101}) {
        for (int64_t a = -20; a <= 20; a++) {
            for (int64_t b = -20; b <= 20; b++) EXPECT_EQ(legendre(a, p) * legendre(b, p), legendre(a * b, p));
        }
    }
}

TEST(Numth, ClassifyResidues) {
    auto r5 = classify_residues(5);
    EXPECT_EQ(r5.residues, (std::vector<int64_t>{1, 4}));
    EXPECT_EQ(r5.nonresidues, (std::vector<int64_t>{2, 3}));
    auto r7 = classify_residues(7);
    EXPECT_EQ(r7.residues, (std::vector<int64_t>{1, 2, 4}));
    EXPECT_EQ(r7.nonresidues, (std::vector<int64_t>{3, 5, 6}));
    auto r3 = classify_residues(3);
    EXPECT_EQ(r3.residues, (std::vector<int64_t>{1}));
    EXPECT_EQ(r3.nonresidues, (std::vector<int64_t>{2}));
}

TEST(Numth, ResidueGroupStructure) {
    for (int64_t p = 3; p < 200; p++) {
        if (!is_prime(p)) continue;
        auto r = classify_residues(p);
        ASSERT_EQ(r.residues.size(), (size_t)(p - 1) / 2);
        ASSERT_EQ(r.nonresidues.size(), (size_t)(p - 1) / 2);
        for (auto a : r.residues) {
            for (auto b : r.residues) EXPECT_TRUE(r.is_residue(a * b));
        }
        for (auto a : r.nonresidues) {
            for (auto b : r.nonresidues) EXPECT_TRUE(r.is_residue(a * b));
        }
    }
}

TEST(Numth, QuantumQRExists) {
    EXPECT_TRUE(quantum_qr_exists(23, 2));
    EXPECT_FALSE(quantum_qr_exists(17, 2));
    EXPECT_TRUE(quantum_qr_exists(11, 3));
    EXPECT_THROW(quantum_qr_exists(3, 3), std::invalid_argument);
    EXPECT_THROW(quantum_qr_exists(9, 2), std::invalid_argument);
    EXPECT_THROW(quantum_qr_exists(5, 5), std::invalid_argument);
}

TEST(Numth, CongruenceSweep) {
    int checked = 0;
    for (int64_t p = 3; p < 1000; p++) {
        if (!is_prime(p)) continue;
        for (int64_t d : {2, 3}) {
            if (p % d == 0) continue;
            EXPECT_EQ(quantum_qr_exists(p, d), quantum_qr_exists_by_congruence(p, d)) << p << " " << d;
            checked++;
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(Numth, CssLength) {
    EXPECT_TRUE(is_css_length(23, 2));
    EXPECT_FALSE(is_css_length(5, 2));
    EXPECT_TRUE(is_css_length(11, 3));
    EXPECT_THROW(is_css_length(17, 2), std::invalid_argument);
}

TEST(Numth, Theorem8Lengths) {
    EXPECT_TRUE(theorem8_applies(5));
    EXPECT_TRUE(theorem8_applies(23));
    EXPECT_FALSE(theorem8_applies(7));
    EXPECT_TRUE(theorem8_applies(29));
}

TEST(Numth, CyclotomicCosets) {
    using V = std::vector<std::vector<int64_t>>;
    EXPECT_EQ(cyclotomic_cosets(4, 5), (V{{0}, {1, 4}, {2, 3}}));
    EXPECT_EQ(cyclotomic_cosets(2, 7), (V{{0}, {1, 2, 4}, {3, 6, 5}}));
    for (int64_t p : {5, 7, 11, 13}) EXPECT_EQ(cyclotomic_cosets(9, p).front(), (std::vector<int64_t>{0}));
    EXPECT_THROW(cyclotomic_cosets(9, 3), std::invalid_argument);
}

TEST(Numth, ResiduesAreUnionOfCosets) {
    for (int64_t p = 5; p < 200; p++) {
        if (!is_prime(p)) continue;
        for (int64_t d : {2, 3}) {
            if (p % d == 0 || !quantum_qr_exists(p, d)) continue;
            auto r = classify_residues(p);
            for (auto &orbit : cyclotomic_cosets(d * d, p)) {
                if (orbit[0] == 0) continue;
                bool first = r.is_residue(orbit[0]);
                for (auto s : orbit) EXPECT_EQ(r.is_residue(s), first);
            }
        }
    }
}
