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

#ifndef QRMAGIC_SIM_HPP_
#define QRMAGIC_SIM_HPP_

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qrmagic/quantum.hpp"

namespace qrmagic {

using DenseOperator = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline constexpr double kSimTolerance = 1e-10;

/// d^n, guarded at 2^7 and 3^5.
inline size_t dense_dim(unsigned d, size_t n) {
    require_qudit_dim(d);
    if ((d == 2 && n > 7) || (d == 3 && n > 5)) {
        throw std::invalid_argument("dense simulation limited to 7 qubits or 5 qutrits");
    }
    size_t D = 1;
    for (size_t k = 0; k < n; k++) D *= d;
    return D;
}

inline cplx root_of_unity(unsigned d, long k) {
    long m = ((k % (long)d) + (long)d) % (long)d;
    double a = 2.0 * M_PI * (double)m / (double)d;
    return {std::cos(a), std::sin(a)};
}

/// Generalized permutation: column j has the single entry phase[j] in row target[j].
struct Monomial {
    std::vector<size_t> target;
    std::vector<cplx> phase;

    DenseOperator dense() const {
        auto D = (Eigen::Index)target.size();
        DenseOperator M = DenseOperator::Zero(D, D);
        for (size_t j = 0; j < target.size(); j++) M((Eigen::Index)target[j], (Eigen::Index)j) = phase[j];
        return M;
    }
};

/// T_v as a monomial; qudit 0 is the most significant digit of the basis index.
inline Monomial pauli_monomial(const SymplecticVector &v) {
    unsigned d = v.d;
    size_t n = v.n(), D = dense_dim(d, n);
    long a = 0;
    for (size_t k = 0; k < n; k++) a += (long)v.z[k] * v.x[k];
    // d=2: i^(-a); odd d: w^(-a/2), and -1/2 = 1 mod 3
    cplx global = d == 2 ? std::pow(cplx(0, -1), (int)(a % 4)) : root_of_unity(d, a);
    Monomial m{std::vector<size_t>(D), std::vector<cplx>(D)};
    std::vector<unsigned> digits(n);
    for (size_t j = 0; j < D; j++) {
        size_t r = j;
        for (size_t k = n; k-- > 0;) {
            digits[k] = (unsigned)(r % d);
            r /= d;
        }
        size_t target = 0;
        long phase = 0;
        for (size_t k = 0; k < n; k++) {
            unsigned t = (digits[k] + v.x[k]) % d;
            phase += (long)v.z[k] * t;
            target = target * d + t;
        }
        m.target[j] = target;
        m.phase[j] = global * root_of_unity(d, phase);
    }
    return m;
}

inline DenseOperator pauli(const SymplecticVector &v) {
    return pauli_monomial(v).dense();
}

/// |I|^-1 sum_v w^(-r(v)) T_v over the span of `basis`.
inline DenseOperator projector(unsigned d, size_t n, const std::vector<SymplecticVector> &basis,
                               const std::vector<uint8_t> &signs) {
    size_t D = dense_dim(d, n);
    DenseOperator P = DenseOperator::Zero((Eigen::Index)D, (Eigen::Index)D);
    double count = 0;
    for_each_in_span(d, n, basis, signs, [&](const SymplecticVector &v, unsigned r) {
        P += root_of_unity(d, -(long)r) * pauli(v);
        count += 1;
    });
    return P / count;
}

inline DenseOperator projector(const QuantumQRCode &code) {
    return projector(code.d, code.n(), code.basis, code.signs);
}

/// A_u = d^-n sum_v w^[u,v] T_v (odd d), summed directly.
inline DenseOperator phase_point_operator_by_sum(const SymplecticVector &u) {
    if (u.d % 2 == 0) throw std::invalid_argument("phase point operators need odd d");
    unsigned d = u.d;
    size_t n = u.n(), D = dense_dim(d, n);
    DenseOperator A = DenseOperator::Zero((Eigen::Index)D, (Eigen::Index)D);
    std::vector<SymplecticVector> all;
    for (size_t k = 0; k < n; k++) {
        SymplecticVector ez(d, n), ex(d, n);
        ez.z[k] = 1;
        ex.x[k] = 1;
        all.push_back(ez);
        all.push_back(ex);
    }
    for_each_in_span(d, n, all, std::vector<uint8_t>(all.size(), 0), [&](const SymplecticVector &v, unsigned) {
        A += root_of_unity(d, (long)symplectic_form(u, v)) * pauli(v);
    });
    return A / (double)D;
}

/// |j> -> |-j> on every qudit.
inline DenseOperator parity_operator(unsigned d, size_t n) {
    size_t D = dense_dim(d, n);
    DenseOperator A = DenseOperator::Zero((Eigen::Index)D, (Eigen::Index)D);
    for (size_t j = 0; j < D; j++) {
        size_t r = j, target = 0, scale = 1;
        for (size_t k = 0; k < n; k++) {
            target += ((d - r % d) % d) * scale;
            r /= d;
            scale *= d;
        }
        A((Eigen::Index)target, (Eigen::Index)j) = 1;
    }
    return A;
}

/// A_u = T_u A_0 T_u^dagger with A_0 the parity operator.
inline DenseOperator phase_point_operator(const SymplecticVector &u) {
    if (u.d % 2 == 0) throw std::invalid_argument("phase point operators need odd d");
    unsigned d = u.d;
    Monomial T = pauli_monomial(u);
    size_t D = T.target.size();
    std::vector<size_t> inverse(D), neg(D);
    for (size_t i = 0; i < D; i++) inverse[T.target[i]] = i;
    for (size_t j = 0; j < D; j++) {
        size_t r = j, target = 0, scale = 1;
        for (size_t k = 0; k < u.n(); k++) {
            target += ((d - r % d) % d) * scale;
            r /= d;
            scale *= d;
        }
        neg[j] = target;
    }
    DenseOperator A = DenseOperator::Zero((Eigen::Index)D, (Eigen::Index)D);
    for (size_t j = 0; j < D; j++) {
        size_t i = inverse[j], m = neg[i];
        A((Eigen::Index)T.target[m], (Eigen::Index)j) = T.phase[m] * std::conj(T.phase[i]);
    }
    return A;
}

/// Tr(a b) without forming the product.
inline cplx trace_of_product(const DenseOperator &a, const DenseOperator &b) {
    return a.transpose().cwiseProduct(b).sum();
}

/// W(u) = Tr(rho A_u) / d^n.
inline double wigner(const DenseOperator &rho, const SymplecticVector &u) {
    return trace_of_product(rho, phase_point_operator(u)).real() / (double)rho.rows();
}

inline void require_unit_interval(double eps) {
    if (!(eps >= 0 && eps <= 1)) throw std::invalid_argument("noise parameter outside [0, 1]");
}

/// (1-eps)|T><T| + eps/2 with |T><T| = (1 + (X+Y+Z)/sqrt3)/2.
inline DenseOperator noisy_t_state(double eps) {
    require_unit_interval(eps);
    DenseOperator X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, cplx(0, -1), cplx(0, 1), 0;
    Z << 1, 0, 0, -1;
    DenseOperator T = (DenseOperator::Identity(2, 2) + (X + Y + Z) / std::sqrt(3.0)) / 2.0;
    return (1 - eps) * T + eps / 2 * DenseOperator::Identity(2, 2);
}

/// (1-eps)|S><S| + eps/3 with |S> = (|1> - |2>)/sqrt2.
inline DenseOperator noisy_strange_state(double eps) {
    require_unit_interval(eps);
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(3);
    s(1) = 1 / std::sqrt(2.0);
    s(2) = -1 / std::sqrt(2.0);
    return (1 - eps) * (s * s.adjoint()) + eps / 3 * DenseOperator::Identity(3, 3);
}

inline DenseOperator tensor_power(const DenseOperator &rho, size_t n) {
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (size_t k = 0; k < n; k++) {
        DenseOperator next = Eigen::kroneckerProduct(out, rho).eval();
        out = next;
    }
    return out;
}

/// exp(-i pi/3 (X+Y+Z)/sqrt3): X -> Y -> Z -> X.
inline DenseOperator m3_gate() {
    DenseOperator U(2, 2);
    cplx h(0.5, 0), mi(0, -0.5);
    U << h + mi, mi * cplx(1, -1), mi * cplx(1, 1), h - mi;
    return U;
}

/// Single-qutrit Fourier and phase gates generating the Clifford group with X and Z.
inline DenseOperator qutrit_fourier() {
    DenseOperator F(3, 3);
    for (int j = 0; j < 3; j++) {
        for (int k = 0; k < 3; k++) F(k, j) = root_of_unity(3, j * k) / std::sqrt(3.0);
    }
    return F;
}

inline DenseOperator qutrit_phase() {
    DenseOperator P = DenseOperator::Zero(3, 3);
    for (int j = 0; j < 3; j++) P(j, j) = root_of_unity(3, j * (j - 1) / 2);
    return P;
}

/// Labels of all single-qutrit phase points u = (z, x), index z + 3x.
inline std::vector<SymplecticVector> qutrit_phase_space() {
    std::vector<SymplecticVector> out;
    for (uint8_t x = 0; x < 3; x++) {
        for (uint8_t z = 0; z < 3; z++) out.push_back(SymplecticVector(3, Row{z}, Row{x}));
    }
    return out;
}

/// Keeps W(0), replaces the other eight values by their mean.
inline DenseOperator twirl_strange(const DenseOperator &rho) {
    if (rho.rows() != 3 || rho.cols() != 3) throw std::invalid_argument("twirl acts on one qutrit");
    auto pts = qutrit_phase_space();
    double w0 = wigner(rho, pts[0]), rest = 0;
    for (size_t i = 1; i < pts.size(); i++) rest += wigner(rho, pts[i]);
    rest /= 8.0;
    DenseOperator out = w0 * phase_point_operator(pts[0]);
    for (size_t i = 1; i < pts.size(); i++) out += rest * phase_point_operator(pts[i]);
    return out;
}

/// Permutation u -> v with g A_u g^dagger = A_v on one qutrit, or nullopt.
inline std::optional<std::vector<size_t>> clifford_phase_point_map(const DenseOperator &g) {
    auto pts = qutrit_phase_space();
    std::vector<DenseOperator> A;
    for (auto &u : pts) A.push_back(phase_point_operator(u));
    std::vector<size_t> map;
    for (size_t i = 0; i < pts.size(); i++) {
        DenseOperator c = g * A[i] * g.adjoint();
        std::optional<size_t> hit;
        for (size_t j = 0; j < pts.size(); j++) {
            if ((c - A[j]).norm() < kSimTolerance) hit = j;
        }
        if (!hit) return std::nullopt;
        map.push_back(*hit);
    }
    return map;
}

/// The map is u -> S u + a with S symplectic.
inline bool is_affine_symplectic(const std::vector<size_t> &map) {
    auto pts = qutrit_phase_space();
    const SymplecticVector &a = pts[map[0]];
    auto lin = [&](size_t i) { return pts[map[i]] + (-a); };
    for (size_t i = 0; i < 9; i++) {
        for (size_t j = 0; j < 9; j++) {
            size_t sum = 0;
            while (pts[sum] != pts[i] + pts[j]) sum++;
            if (lin(sum) != lin(i) + lin(j)) return false;
            if (symplectic_form(lin(i), lin(j)) != symplectic_form(pts[i], pts[j])) return false;
        }
    }
    return true;
}

/// Phase-space lemma for stabilizer measurements (d=3): when r(a) = -[u,a]
/// on I, Tr(Pi A_u) = 1 and Pi A_u Pi = |I|^-1 sum_{v in u+I} A_v; otherwise
/// both vanish. Checks whichever case applies.
inline bool phase_space_lemma_check(size_t n, const std::vector<SymplecticVector> &basis,
                                    const std::vector<uint8_t> &signs, const SymplecticVector &u) {
    unsigned d = 3;
    DenseOperator P = projector(d, n, basis, signs);
    DenseOperator Au = phase_point_operator(u);
    bool case_one = true;
    for (size_t i = 0; i < basis.size(); i++) {
        if ((signs[i] + symplectic_form(u, basis[i])) % d != 0) case_one = false;
    }
    cplx tr = (P * Au).trace();
    DenseOperator lhs = P * Au * P;
    if (!case_one) return std::abs(tr) < kSimTolerance && lhs.norm() < kSimTolerance;
    DenseOperator rhs = DenseOperator::Zero(lhs.rows(), lhs.cols());
    double count = 0;
    for_each_in_span(d, n, basis, signs, [&](const SymplecticVector &a, unsigned) {
        rhs += phase_point_operator(u + a);
        count += 1;
    });
    rhs /= count;
    return std::abs(tr - 1.0) < kSimTolerance && (lhs - rhs).norm() < kSimTolerance;
}

struct SimulationResult {
    double success = 0;
    // d=2: <X>, <Y>, <Z> of the logical qubit (constant representatives)
    double logical_x = 0, logical_y = 0, logical_z = 0;
    // d=3: Wigner value of the logical qutrit at the origin
    double wigner_origin = 0;
};

/// Projects rho^(tensor n) onto the code space and reads out logical data
/// without a decoding circuit.
inline SimulationResult simulate_distillation(const QuantumQRCode &code, double eps) {
    size_t n = code.n();
    dense_dim(code.d, n);
    SimulationResult res;
    DenseOperator P = projector(code);
    if (code.d == 2) {
        DenseOperator rho = tensor_power(noisy_t_state(eps), n);
        DenseOperator post = P * rho * P;
        double ps = post.trace().real();
        res.success = ps;
        SymplecticVector x = constant_pauli(2, n, 0, 1), z = constant_pauli(2, n, 1, 0);
        SymplecticVector y = m3_action(x);
        res.logical_x = (pauli(x) * post).trace().real() / ps;
        res.logical_y = (pauli(y) * post).trace().real() / ps;
        res.logical_z = (pauli(z) * post).trace().real() / ps;
    } else {
        DenseOperator rho = tensor_power(noisy_strange_state(eps), n);
        DenseOperator post = P * rho * P;
        double ps = post.trace().real();
        res.success = ps;
        double acc = 0;
        for_each_in_span(3, n, code.basis, code.signs, [&](const SymplecticVector &u, unsigned) {
            acc += trace_of_product(post, phase_point_operator(u)).real();
        });
        res.wigner_origin = acc / ((double)post.rows() * ps);
    }
    return res;
}

/// 1 - lambda sqrt3 <X_L>.
inline double simulated_t_update(const SimulationResult &r, int lambda) {
    return 1 - lambda * std::sqrt(3.0) * r.logical_x;
}

/// Sign making the simulated map vanish at eps = 0.
inline int simulated_lambda(const QuantumQRCode &code) {
    return simulate_distillation(code, 0).logical_x > 0 ? 1 : -1;
}

/// eps from the Wigner value at the origin on the Strange line.
inline double simulated_strange_update(const SimulationResult &r) {
    return 0.75 * (1 + 3 * r.wigner_origin);
}

}  // namespace qrmagic

#endif  // QRMAGIC_SIM_HPP_
