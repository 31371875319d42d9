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

#include <cmath>
#include <random>

#include "qrmagic/distill.hpp"
#include "qrmagic/fixtures.hpp"
#include "qrmagic/pipeline.hpp"
#include "qrmagic/verify.hpp"

using namespace qrmagic;

namespace {

WeightEnumerator fixture(unsigned d, int64_t p) {
    auto f = load_fixture(d * d, (size_t)p);
    if (!f) throw std::runtime_error("missing fixture");
    return f->w;
}

double tupdate(const WeightEnumerator &w, double eps, int lambda) {
    return (double)t_epsilon_update<long double>(w, (long double)eps, lambda);
}

}  // namespace

TEST(Distill, TSuccessProbability) {
    auto w5 = fixture(2, 5);
    EXPECT_EQ(t_success_at_zero_exact(w5), Rational(1, 6));
    EXPECT_NEAR((double)t_success_probability<long double>(w5, 0.0L), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR((double)t_success_probability<long double>(w5, 1.0L), 1.0 / 16.0, 1e-15);
    // oracle: 49/1889568
    auto w23 = fixture(2, 23);
    EXPECT_EQ(t_success_at_zero_exact(w23), Rational(49, 1889568));
    EXPECT_NEAR((double)t_success_probability<long double>(w23, 0.0L), 49.0 / 1889568.0, 1e-18);
    EXPECT_THROW(t_success_probability<long double>(fixture(3, 5), 0.1L), std::invalid_argument);
}

TEST(Distill, TSuccessInUnitInterval) {
    for (int64_t p : {5, 7, 13, 23, 29, 47, 71}) {
        auto w = fixture(2, p);
        TContext<long double> ctx(w);
        for (int i = 0; i <= 100; i++) {
            double ps = (double)t_success_probability<long double>(ctx, i / 100.0L);
            EXPECT_GE(ps, -1e-12) << p;
            EXPECT_LE(ps, 1 + 1e-12) << p;
        }
    }
}

TEST(Distill, TUpdate) {
    auto w5 = fixture(2, 5);
    int lambda = choose_lambda(w5);
    EXPECT_EQ(t_update_at_zero_exact(w5, lambda), 0);
    EXPECT_NEAR(tupdate(w5, 0.0, lambda), 0.0, 1e-15);
    EXPECT_LT(tupdate(w5, 0.2, lambda), 0.2);
    EXPECT_NEAR(tupdate(w5, 1.0, lambda), 1.0, 1e-15);
    EXPECT_NEAR(tupdate(w5, 1.0, -lambda), 1.0, 1e-15);
}

TEST(Distill, ChooseLambda) {
    for (int64_t p : {5, 7, 13, 23, 29, 31, 37, 47, 53, 61, 71}) {
        auto w = fixture(2, p);
        int lambda = choose_lambda(w);
        EXPECT_EQ(t_update_at_zero_exact(w, lambda), 0) << p;
        EXPECT_EQ(t_update_at_zero_exact(w, -lambda), 2) << p;
    }
}

TEST(Distill, ExtendedPathAgrees) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int64_t p : {5, 7, 13, 23, 29, 31, 37, 47, 53, 61, 71}) {
        auto w = fixture(2, p);
        auto ext = extended_from_expurgated(w, 4);
        int lambda = choose_lambda(w);
        TContext<long double> ctx(w);
        for (int i = 0; i < 100; i++) {
            long double e = u(rng);
            long double a = t_epsilon_update<long double>(ctx, e, lambda);
            long double b = t_epsilon_update_from_extended<long double>(ext, e, lambda);
            if (!std::isfinite(a) || std::fabs(a) > 1e6) continue;  // next to a pole
            EXPECT_NEAR((double)a, (double)b, 1e-10 * std::max(1.0, std::fabs((double)a))) << p << " eps=" << (double)e;
        }
    }
    // hexacode path at p=5
    WeightEnumerator hex(std::vector<BigInt>{1, 0, 0, 0, 45, 0, 18});
    int lambda = choose_lambda(fixture(2, 5));
    for (double e : {0.1, 0.2, 0.3}) {
        EXPECT_NEAR((double)t_epsilon_update_from_extended<long double>(hex, e, lambda), tupdate(fixture(2, 5), e, lambda),
                    1e-14);
    }
}

TEST(Distill, StrangeUpdate) {
    auto w11 = fixture(3, 11);
    EXPECT_EQ(strange_update_at_zero_exact(w11), 0);
    EXPECT_NEAR((double)strange_epsilon_update<long double>(w11, 0.0L), 0.0, 1e-15);
    EXPECT_LT((double)strange_epsilon_update<long double>(w11, 0.3L), 0.3);
    EXPECT_NEAR((double)strange_epsilon_update<long double>(w11, 1.0L), 1.0, 1e-15);
    // x = 0 at eps = 3/4: only A_n y^n survives
    long double y3 = (3.0L - 0.75L) / 6.0L;
    long double den = evaluate_real<long double>(w11, 1.0L, (0.75L - 1) / 2);
    long double expect = 0.75L * (1 + w11[11].convert_to<long double>() * std::pow(y3, 11) / den);
    EXPECT_NEAR((double)strange_epsilon_update<long double>(w11, 0.75L), (double)expect, 1e-15);
}

TEST(Distill, StrangeSuccess) {
    auto w11 = fixture(3, 11);
    EXPECT_EQ(strange_success_at_zero_exact(w11), Rational(1, 1728));
    EXPECT_NEAR((double)strange_success_probability<long double>(w11, 0.0L), 1.0 / 1728, 1e-17);
    EXPECT_NEAR((double)strange_success_probability<long double>(w11, 1.0L), std::pow(3.0, -10), 1e-18);
    // x + 8y = 1: 3^-(n-1) W(x + 8y, x - y) reduces to W(1, (eps-1)/2)
    for (double e : {0.1, 0.5, 0.9}) {
        long double x = (4 * e - 3) / 9.0L, y = (3 - e) / 18.0L;
        EXPECT_NEAR((double)(x + 8 * y), 1.0, 1e-15);
        long double direct = evaluate_real<long double>(w11, x + 8 * y, x - y) / std::pow(3.0L, 10);
        EXPECT_NEAR((double)strange_success_probability<long double>(w11, (long double)e), (double)direct, 1e-15);
    }
}

TEST(Distill, FindThresholdSynthetic) {
    // eps' = 2 eps^2 crosses at 1/2
    auto r = find_threshold([](long double e) { return 2 * e * e; });
    EXPECT_NEAR(r.threshold, 0.5, 1e-9);
    EXPECT_LE(r.hi - r.lo, 1e-9);
    auto none = find_threshold([](long double e) { return e + 0.01L; });
    EXPECT_EQ(none.threshold, 0);
    auto all = find_threshold([](long double e) { return e / 2; });
    EXPECT_EQ(all.threshold, 1);
    // pole at 0.3 where f jumps from -inf to +inf, real crossing at 0.65
    auto pole = find_threshold([](long double e) {
        long double g = e < 0.5L ? -0.01L / (0.3L - e) - 0.2L : -0.15L + (e - 0.5L);
        return e + g;
    });
    EXPECT_NEAR(pole.threshold, 0.65, 1e-6);
}

TEST(Distill, TThresholds) {
    for (auto &t : published_thresholds()) {
        if (t.d != 2) continue;
        auto w = fixture(2, t.p);
        auto r = t_threshold(w, choose_lambda(w));
        EXPECT_NEAR(r.threshold, t.value, 1e-4) << "p=" << t.p;
        if (r.threshold > 0) {
            TContext<long double> ctx(w);
            int lambda = choose_lambda(w);
            EXPECT_LT((double)t_epsilon_update<long double>(ctx, r.lo, lambda), r.lo);
            EXPECT_GE((double)t_epsilon_update<long double>(ctx, r.hi, lambda), r.hi - 1e-12);
        }
    }
}

TEST(Distill, StrangeThresholds) {
    for (auto &t : published_thresholds()) {
        if (t.d != 3 || t.p == 47) continue;
        auto r = strange_threshold(fixture(3, t.p));
        EXPECT_NEAR(r.threshold, t.value, 1e-4) << "p=" << t.p;
    }
}

TEST(Distill, AsymptoticOrder) {
    for (int64_t p : {5, 23, 29, 47, 53, 71}) {
        EXPECT_TRUE(theorem8_applies(p));
        auto w = fixture(2, p);
        auto c = t_asymptotic_check(w, choose_lambda(w));
        EXPECT_TRUE(c.is_quadratic) << p;
        EXPECT_EQ(c.ratios.size(), 5u);
    }
    // a linear map fails the check
    auto lin = asymptotic_order_check([](HighReal e) { return e / 3; });
    EXPECT_FALSE(lin.is_quadratic);
}

TEST(Distill, Curves) {
    auto w5 = fixture(2, 5);
    auto c = emit_curve(StateKind::T, w5, 200);
    ASSERT_EQ(c.samples.size(), 200u);
    EXPECT_EQ(c.lambda, choose_lambda(w5));
    for (size_t i = 0; i < c.samples.size(); i++) {
        auto &s = c.samples[i];
        if (i) EXPECT_GT(s.eps, c.samples[i - 1].eps);
        EXPECT_GT(s.eps, 0);
        EXPECT_LT(s.eps, 1);
        EXPECT_GE(s.success, -1e-12);
        EXPECT_LE(s.success, 1 + 1e-12);
        if (s.eps < 0.345) EXPECT_LT(s.eps_prime, s.eps);
    }
    auto one = emit_curve(StateKind::Strange, fixture(3, 23), 1);
    ASSERT_EQ(one.samples.size(), 1u);
    EXPECT_DOUBLE_EQ(one.samples[0].eps, 0.5);
    EXPECT_EQ(one.lambda, 0);
    auto s23 = emit_curve(StateKind::Strange, fixture(3, 23), 200);
    for (auto &s : s23.samples) {
        if (s.singular) continue;
        if (s.eps < 0.16) EXPECT_LT(s.eps_prime, s.eps);
        if (s.eps > 0.17 && s.eps < 0.3) EXPECT_GT(s.eps_prime, s.eps);
    }
    EXPECT_THROW(emit_curve(StateKind::T, w5, 0), std::invalid_argument);
}

TEST(Distill, ParseState) {
    EXPECT_EQ(parse_state("T"), StateKind::T);
    EXPECT_EQ(parse_state("Strange"), StateKind::Strange);
    EXPECT_THROW(parse_state("H"), std::invalid_argument);
    EXPECT_STREQ(state_name(StateKind::Strange), "Strange");
}
