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

#ifndef QRMAGIC_DISTILL_HPP_
#define QRMAGIC_DISTILL_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qrmagic/weights.hpp"

namespace qrmagic {

using HighReal = boost::multiprecision::cpp_bin_float_50;

enum class StateKind { T, Strange };

inline const char *state_name(StateKind k) {
    return k == StateKind::T ? "T" : "Strange";
}

inline StateKind parse_state(const std::string &s) {
    if (s == "T") return StateKind::T;
    if (s == "Strange") return StateKind::Strange;
    throw std::invalid_argument("unknown state '" + s + "' (expected T or Strange)");
}

struct CurveSample {
    double eps = 0, eps_prime = 0, success = 0;
    bool singular = false;  // denominator vanished; values are NaN
};

struct DistillationCurve {
    StateKind kind = StateKind::T;
    size_t p = 0;
    int lambda = 0;  // 0 for Strange
    std::vector<CurveSample> samples;
};

struct ThresholdResult {
    size_t p = 0;
    StateKind kind = StateKind::T;
    double threshold = 0;  // 0 means no distillation region
    double lo = 0, hi = 0;  // final bracket
};

namespace detail {

inline void require_even_support(const WeightEnumerator &w) {
    if (w.has_odd_support()) throw std::invalid_argument("stabilizer enumerator has odd-weight support");
}

template <class Real>
Real nan_value() {
    return std::numeric_limits<Real>::quiet_NaN();
}

template <class Real>
Real sqrt3() {
    using std::sqrt;
    return sqrt(Real(3));
}

template <class Real>
bool finite(const Real &v) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(v);
}

}  // namespace detail

/// Precomputed enumerators for the T-state maps of an n-qubit code.
template <class Real = long double>
struct TContext {
    size_t n = 0;
    std::vector<Real> a;  // W_I
    std::vector<Real> b;  // W_{I^perp}

    explicit TContext(const WeightEnumerator &w_i) : n(w_i.n) {
        detail::require_even_support(w_i);
        BigInt card = w_i.total();
        a = coefficients_as<Real>(w_i);
        b = coefficients_as<Real>(macwilliams(w_i, 4, card));
    }
};

template <class Real = long double>
Real t_success_probability(const TContext<Real> &c, Real eps) {
    using std::pow;
    Real t = (Real(1) - eps) / detail::sqrt3<Real>();
    return evaluate_signed<Real>(c.a, t, Parity::even) / pow(Real(2), Real(c.n - 1));
}

template <class Real = long double>
Real t_success_probability(const WeightEnumerator &w_i, Real eps) {
    return t_success_probability<Real>(TContext<Real>(w_i), eps);
}

/// NaN where the even sum vanishes.
template <class Real = long double>
Real t_epsilon_update(const TContext<Real> &c, Real eps, int lambda) {
    Real t = (Real(1) - eps) / detail::sqrt3<Real>();
    Real den = evaluate_signed<Real>(c.a, t, Parity::even);
    if (den == 0) return detail::nan_value<Real>();
    Real num = evaluate_signed<Real>(c.b, t, Parity::odd);
    Real r = Real(1) - Real(lambda) * num / (detail::sqrt3<Real>() * den);
    return detail::finite(r) ? r : detail::nan_value<Real>();
}

template <class Real = long double>
Real t_epsilon_update(const WeightEnumerator &w_i, Real eps, int lambda) {
    return t_epsilon_update<Real>(TContext<Real>(w_i), eps, lambda);
}

/// Same map from the extended code's enumerator through the partial
/// derivatives of W at (1, it).
template <class Real = long double>
Real t_epsilon_update_from_extended(const WeightEnumerator &w_ext, Real eps, int lambda) {
    detail::require_even_support(w_ext);
    auto a = coefficients_as<Real>(w_ext);
    size_t n = w_ext.n;
    Real t = (Real(1) - eps) / detail::sqrt3<Real>();
    // d/dy: sum w A_w (it)^(w-1); only the even w survive, (it)^(w-1) = i (-1)^(w/2-1) t^(w-1)
    // d/dx: sum (n-w) A_w (it)^w = sum (n-w) A_w (-1)^(w/2) t^w
    Real num = 0, den = 0, tp = 1;  // tp = t^w
    for (size_t w = 0; w <= n; w++) {
        if (w % 2 == 0 && a[w] != 0) {
            Real s = (w / 2) % 2 ? Real(-1) : Real(1);
            den += s * Real(n - w) * a[w] * tp;
            if (w > 0) num += s * Real(w) * a[w] * (tp / t);
        }
        tp *= t;
    }
    if (den == 0) return detail::nan_value<Real>();
    Real r = Real(1) + Real(lambda) * num / (detail::sqrt3<Real>() * den);
    return detail::finite(r) ? r : detail::nan_value<Real>();
}

/// R with eps'(0) = 1 - lambda R / 3, exact: at eps = 0, t^2 = 1/3.
inline Rational t_fixed_point_ratio(const WeightEnumerator &w_i) {
    detail::require_even_support(w_i);
    WeightEnumerator b = macwilliams(w_i, 4, w_i.total());
    Rational num = 0, den = 0, third = Rational(1, 3);
    Rational pw = 1;  // 3^-floor(w/2)
    for (size_t w = 0; w <= w_i.n; w++) {
        if (w > 0 && w % 2 == 0) pw *= third;
        Rational s = (w / 2) % 2 ? -1 : 1;
        if (w % 2 == 0) {
            den += s * Rational(w_i[w]) * pw;
        } else {
            num += s * Rational(b[w]) * pw;
        }
    }
    if (den == 0) throw std::domain_error("T update is singular at eps = 0");
    return num / den;
}

/// eps'(0) for the given lambda as an exact rational.
inline Rational t_update_at_zero_exact(const WeightEnumerator &w_i, int lambda) {
    return Rational(1) - Rational(lambda) * t_fixed_point_ratio(w_i) / 3;
}

/// P_s(0) = 2^-(n-1) sum_even A_w (-1)^(w/2) 3^(-w/2), exact.
inline Rational t_success_at_zero_exact(const WeightEnumerator &w_i) {
    detail::require_even_support(w_i);
    Rational s = 0, pw = 1;
    for (size_t w = 0; w <= w_i.n; w += 2) {
        s += ((w / 2) % 2 ? Rational(-1) : Rational(1)) * Rational(w_i[w]) * pw;
        pw /= 3;
    }
    return s / Rational(BigInt(1) << (w_i.n - 1));
}

/// The sign with |eps'(0)| < 1e-9.
inline int choose_lambda(const WeightEnumerator &w_i) {
    for (int lambda : {1, -1}) {
        Rational e = t_update_at_zero_exact(w_i, lambda);
        if (std::fabs(e.convert_to<double>()) < 1e-9) return lambda;
    }
    throw std::logic_error("no lambda gives a fixed point at the pure T state");
}

/// Strange-state maps of an n-qutrit code.
template <class Real = long double>
struct StrangeContext {
    size_t n = 0;
    std::vector<Real> a;

    explicit StrangeContext(const WeightEnumerator &w_i) : n(w_i.n), a(coefficients_as<Real>(w_i)) {
    }
};

template <class Real = long double>
Real strange_success_probability(const StrangeContext<Real> &c, Real eps) {
    using std::pow;
    Real w = evaluate_real<Real>(c.a, Real(1), (eps - Real(1)) / Real(2));
    return w / pow(Real(3), Real(c.n - 1));
}

template <class Real = long double>
Real strange_success_probability(const WeightEnumerator &w_i, Real eps) {
    return strange_success_probability<Real>(StrangeContext<Real>(w_i), eps);
}

template <class Real = long double>
Real strange_epsilon_update(const StrangeContext<Real> &c, Real eps) {
    // 3^n W(x, y) = W(3x, 3y) for homogeneous W of degree n
    Real x3 = (Real(4) * eps - Real(3)) / Real(3);
    Real y3 = (Real(3) - eps) / Real(6);
    Real den = evaluate_real<Real>(c.a, Real(1), (eps - Real(1)) / Real(2));
    if (den == 0) return detail::nan_value<Real>();
    Real r = Real(3) / Real(4) * (Real(1) + evaluate_real<Real>(c.a, x3, y3) / den);
    return detail::finite(r) ? r : detail::nan_value<Real>();
}

template <class Real = long double>
Real strange_epsilon_update(const WeightEnumerator &w_i, Real eps) {
    return strange_epsilon_update<Real>(StrangeContext<Real>(w_i), eps);
}

namespace detail {

inline Rational eval_exact(const WeightEnumerator &w, const Rational &x, const Rational &y) {
    Rational s = 0;
    for (size_t k = 0; k <= w.n; k++) {
        if (w[k] == 0) continue;
        Rational term = Rational(w[k]);
        for (size_t i = 0; i < w.n - k; i++) term *= x;
        for (size_t i = 0; i < k; i++) term *= y;
        s += term;
    }
    return s;
}

}  // namespace detail

/// Strange eps'(0), exact (x = -1/3, y = 1/6).
inline Rational strange_update_at_zero_exact(const WeightEnumerator &w_i) {
    Rational den = detail::eval_exact(w_i, 1, Rational(-1, 2));
    if (den == 0) throw std::domain_error("Strange update is singular at eps = 0");
    Rational num = detail::eval_exact(w_i, -1, Rational(1, 2));
    return Rational(3, 4) * (1 + num / den);
}

inline Rational strange_success_at_zero_exact(const WeightEnumerator &w_i) {
    Rational s = detail::eval_exact(w_i, 1, Rational(-1, 2));
    return s / Rational(boost::multiprecision::pow(BigInt(3), (unsigned)(w_i.n - 1)));
}

using UpdateFn = std::function<long double(long double)>;

inline constexpr size_t kThresholdGrid = 100000;
inline constexpr double kBisectionWidth = 1e-10;

/// Smallest positive fixed point of eps' past which eps' >= eps. Returns 0
/// when eps' >= eps at the first grid point. Non-finite samples are skipped;
/// a sign change across a pole is recognized by |f| staying large under
/// bisection and the scan continues.
inline ThresholdResult find_threshold(const UpdateFn &update, size_t resolution = kThresholdGrid) {
    if (resolution < 2) throw std::invalid_argument("threshold grid needs at least 2 points");
    auto f = [&](long double e) { return update(e) - e; };
    ThresholdResult res;
    long double h = 1.0L / (long double)resolution;
    long double prev_e = 0, prev_f = 0;
    bool have_prev = false;
    for (size_t i = 0; i < resolution; i++) {
        long double e = ((long double)i + 0.5L) * h;
        long double v = f(e);
        if (!std::isfinite(v)) continue;
        if (!have_prev) {
            if (v >= 0) {
                res.lo = 0;
                res.hi = (double)e;
                return res;
            }
            prev_e = e;
            prev_f = v;
            have_prev = true;
            continue;
        }
        if (prev_f < 0 && v >= 0) {
            long double lo = prev_e, hi = e;
            while (hi - lo > kBisectionWidth) {
                long double mid = (lo + hi) / 2;
                long double fm = f(mid);
                if (!std::isfinite(fm)) break;
                (fm < 0 ? lo : hi) = mid;
            }
            long double flo = f(lo), fhi = f(hi);
            bool pole = !std::isfinite(flo) || !std::isfinite(fhi) || std::fabs(fhi - flo) > 1e-3L;
            if (!pole) {
                res.threshold = (double)((lo + hi) / 2);
                res.lo = (double)lo;
                res.hi = (double)hi;
                return res;
            }
        }
        prev_e = e;
        prev_f = v;
    }
    // eps' < eps on the whole grid
    res.threshold = 1;
    res.lo = res.hi = 1;
    return res;
}

struct AsymptoticCheck {
    std::vector<double> eps;
    std::vector<double> ratios;  // eps'(eps) / eps^2
    bool is_quadratic = false;
};

/// eps'(eps)/eps^2 at eps = 1e-2 ... 1e-6; quadratic when the relative spread is below 10%.
inline AsymptoticCheck asymptotic_order_check(const std::function<HighReal(HighReal)> &update) {
    AsymptoticCheck c;
    HighReal e = HighReal(1) / 100;
    for (int k = 2; k <= 6; k++) {
        HighReal r = update(e) / (e * e);
        c.eps.push_back(e.convert_to<double>());
        c.ratios.push_back(r.convert_to<double>());
        e /= 10;
    }
    auto [lo, hi] = std::minmax_element(c.ratios.begin(), c.ratios.end());
    double mean = 0;
    for (double r : c.ratios) mean += r;
    mean /= (double)c.ratios.size();
    c.is_quadratic = std::isfinite(mean) && mean != 0 && (*hi - *lo) / std::fabs(mean) < 0.1;
    return c;
}

inline AsymptoticCheck t_asymptotic_check(const WeightEnumerator &w_i, int lambda) {
    TContext<HighReal> ctx(w_i);
    return asymptotic_order_check([&](HighReal e) { return t_epsilon_update<HighReal>(ctx, e, lambda); });
}

inline ThresholdResult t_threshold(const WeightEnumerator &w_i, int lambda, size_t resolution = kThresholdGrid) {
    TContext<long double> ctx(w_i);
    ThresholdResult r = find_threshold([&](long double e) { return t_epsilon_update<long double>(ctx, e, lambda); },
                                       resolution);
    r.p = w_i.n;
    r.kind = StateKind::T;
    return r;
}

inline ThresholdResult strange_threshold(const WeightEnumerator &w_i, size_t resolution = kThresholdGrid) {
    StrangeContext<long double> ctx(w_i);
    ThresholdResult r =
        find_threshold([&](long double e) { return strange_epsilon_update<long double>(ctx, e); }, resolution);
    r.p = w_i.n;
    r.kind = StateKind::Strange;
    return r;
}

/// Samples at eps_i = (i + 1/2) / count. lambda is ignored for Strange.
inline DistillationCurve emit_curve(StateKind kind, const WeightEnumerator &w_i, size_t count, int lambda = 0) {
    if (count == 0) throw std::invalid_argument("curve needs at least one sample");
    DistillationCurve c;
    c.kind = kind;
    c.p = w_i.n;
    c.lambda = kind == StateKind::T ? (lambda ? lambda : choose_lambda(w_i)) : 0;
    std::function<std::pair<long double, long double>(long double)> eval;
    if (kind == StateKind::T) {
        auto ctx = std::make_shared<TContext<long double>>(w_i);
        int lam = c.lambda;
        eval = [ctx, lam](long double e) {
            return std::make_pair(t_epsilon_update<long double>(*ctx, e, lam), t_success_probability<long double>(*ctx, e));
        };
    } else {
        auto ctx = std::make_shared<StrangeContext<long double>>(w_i);
        eval = [ctx](long double e) {
            return std::make_pair(strange_epsilon_update<long double>(*ctx, e),
                                  strange_success_probability<long double>(*ctx, e));
        };
    }
    for (size_t i = 0; i < count; i++) {
        long double e = ((long double)i + 0.5L) / (long double)count;
        auto [ep, ps] = eval(e);
        CurveSample s;
        s.eps = (double)e;
        s.eps_prime = (double)ep;
        s.success = (double)ps;
        s.singular = !std::isfinite(ep);
        c.samples.push_back(s);
    }
    return c;
}

}  // namespace qrmagic

#endif  // QRMAGIC_DISTILL_HPP_
