// Copyright 2026 The monolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bipartite correlation measures Q(rho_{A:X}) on cuts of a multipartite state.
//
// All entropies are in bits. Negativity is stored unnormalized,
// N = (||rho^{T_A}||_1 - 1)/2; the normalized flag doubles it so that a
// maximally entangled qubit pair scores 1. The other measures already peak
// at 1 on qubit pairs.
//
// Concurrence on a mixed cut is sqrt(tau), tau the convex-roof tangle. On
// two qubits this is the Wootters concurrence; on any cut of a rank <= 2
// state the tangle has a closed form (see rank2_tangle). Mixed cuts of
// higher rank beyond 2x2 raise MeasureUndefined, as does mixed EoF beyond 2x2.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monolab/states.hpp"
#include "monolab/tensor.hpp"

namespace monolab {

enum class MeasureTag { Concurrence, Negativity, LogNegativity, EoF, Discord, ClassicalCorrelation };

struct MeasureKind {
    MeasureTag tag = MeasureTag::Concurrence;
    bool normalized = false;

    friend bool operator==(const MeasureKind&, const MeasureKind&) = default;
};

inline std::string_view to_string(MeasureTag tag) {
    switch (tag) {
        case MeasureTag::Concurrence: return "concurrence";
        case MeasureTag::Negativity: return "negativity";
        case MeasureTag::LogNegativity: return "lognegativity";
        case MeasureTag::EoF: return "eof";
        case MeasureTag::Discord: return "discord";
        case MeasureTag::ClassicalCorrelation: return "classical";
    }
    return "unknown";
}

inline MeasureTag parse_measure(std::string_view name) {
    for (auto tag : {MeasureTag::Concurrence, MeasureTag::Negativity, MeasureTag::LogNegativity,
                     MeasureTag::EoF, MeasureTag::Discord, MeasureTag::ClassicalCorrelation}) {
        if (name == to_string(tag)) return tag;
    }
    if (name == "logneg") return MeasureTag::LogNegativity;
    if (name == "classical-correlation") return MeasureTag::ClassicalCorrelation;
    throw DomainError("unknown measure '" + std::string(name) + "'");
}

struct Cut {
    Subsystems side_a;
    Subsystems side_b;
};

/// focus : (everything else).
inline Cut focus_rest_cut(std::size_t parties, std::size_t focus) {
    Cut c{{focus}, {}};
    for (std::size_t k = 0; k < parties; ++k)
        if (k != focus) c.side_b.push_back(k);
    return c;
}

enum class MeasuredSide { A, B };

inline constexpr double kReportFloor = 1e-12;
inline constexpr double kPurityTolerance = 1e-9;

inline double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// E = h((1 + sqrt(1 - C^2))/2).
inline double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

namespace detail {

/// State restricted to side_a U side_b, with the positions of each side inside it.
struct CutState {
    ComplexMatrix rho;
    DimSpec dims;
    Subsystems a;  // positions within dims
    Subsystems b;
};

inline CutState reduce_to_cut(const MultipartiteState& state, const Cut& cut) {
    const std::size_t n = state.parties();
    const Subsystems a = normalized_set(cut.side_a, n, "cut");
    const Subsystems b = normalized_set(cut.side_b, n, "cut");
    if (a.empty() || b.empty()) throw DimensionError("cut: both sides must be nonempty");
    Subsystems all;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
    if (all.size() != a.size() + b.size()) throw DimensionError("cut: sides overlap");

    CutState cs;
    cs.dims = state.dims().select(all);
    cs.rho = all.size() == n ? state.rho() : partial_trace(state.rho(), state.dims(), all);
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (std::binary_search(a.begin(), a.end(), all[k])) cs.a.push_back(k);
        else cs.b.push_back(k);
    }
    return cs;
}

inline bool is_pure(const ComplexMatrix& rho) { return purity(rho) >= 1.0 - kPurityTolerance; }

/// Ket of a rank-1 density matrix, read off its largest-diagonal column.
inline std::vector<complex> ket_of_pure(const ComplexMatrix& rho) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < rho.rows(); ++i)
        if (rho(i, i).real() > rho(k, k).real()) k = i;
    const double scale = std::sqrt(rho(k, k).real());
    std::vector<complex> ket(rho.rows());
    for (std::size_t i = 0; i < rho.rows(); ++i) ket[i] = rho(i, k) / scale;
    return ket;
}

/// sqrt(2(1 - tr rho_a^2)) for a pure cut state, as 2 sqrt(sum |2x2 minors|^2)
/// of the d_a x d_b coefficient matrix (no cancellation near product states).
inline double pure_concurrence(const CutState& cs) {
    const auto ket = ket_of_pure(cs.rho);
    const std::size_t da = cs.dims.total(cs.a);
    const std::size_t db = cs.dims.total(cs.b);
    const DimSpec da_spec = cs.dims.select(cs.a);
    const DimSpec db_spec = cs.dims.select(cs.b);
    ComplexMatrix m(da, db);
    std::vector<std::size_t> ad(cs.a.size()), bd(cs.b.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        const auto dig = cs.dims.digits(i);
        for (std::size_t k = 0; k < cs.a.size(); ++k) ad[k] = dig[cs.a[k]];
        for (std::size_t k = 0; k < cs.b.size(); ++k) bd[k] = dig[cs.b[k]];
        m(da_spec.index(ad), db_spec.index(bd)) = ket[i];
    }
    double s = 0.0;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t i2 = i + 1; i2 < da; ++i2)
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t j2 = j + 1; j2 < db; ++j2)
                    s += std::norm(m(i, j) * m(i2, j2) - m(i, j2) * m(i2, j));
    return 2.0 * std::sqrt(s);
}

inline double floor_small(double v) { return v < kReportFloor ? 0.0 : v; }

}  // namespace detail

/// Wootters concurrence max(0, l1 - l2 - l3 - l4).
///
/// The l_i are the singular values of T = W^T (sy x sy) W where rho = W W^H,
/// read from the Hermitian dilation [[0, T], [T^H, 0]] so that small values
/// keep absolute accuracy on low-rank input.
inline double concurrence_two_qubit(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("concurrence_two_qubit: need a 4x4 matrix");
    const auto eig = eig_hermitian(rho);
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < 4; ++k)
        if (eig.values[k] > 1e-14) cols.push_back(k);
    const std::size_t r = cols.size();
    if (r == 0) return 0.0;

    ComplexMatrix wm(4, r);
    for (std::size_t c = 0; c < r; ++c) {
        const double s = std::sqrt(eig.values[cols[c]]);
        for (std::size_t i = 0; i < 4; ++i) wm(i, c) = s * eig.vectors(i, cols[c]);
    }
    // sy x sy in the computational basis
    ComplexMatrix flip(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const ComplexMatrix t = wm.transpose() * flip * wm;

    ComplexMatrix dil(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            dil(i, r + j) = t(i, j);
            dil(r + j, i) = std::conj(t(i, j));
        }
    auto vals = eigvals_hermitian(dil);
    std::array<double, 4> sv{};
    for (std::size_t k = 0; k < r; ++k) sv[k] = std::max(0.0, vals[2 * r - 1 - k]);
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return std::clamp(sv[0] - sv[1] - sv[2] - sv[3], 0.0, 1.0);
}

/// Convex-roof tangle (squared generalized concurrence) of a rank <= 2 state
/// on the cut side_a : side_b.
///
/// Pure states in the 2-dim range are points n of a Bloch sphere and the pure
/// tangle 2(1 - tr rho_a^2) is a quadratic form in n there. Shifting the form
/// by its smallest eigenvalue gives a convex extension to the ball that is
/// linear along the matching eigenvector, so it lower-bounds every
/// decomposition and is attained by the two-point decomposition along that line.
inline double rank2_tangle(const ComplexMatrix& rho, const DimSpec& dims, std::span<const std::size_t> side_a) {
    detail::require_square_of(rho, dims, "rank2_tangle");
    const auto eig = eig_hermitian(rho);
    const std::size_t d = rho.rows();
    if (d >= 3 && eig.values[d - 3] > 1e-10) throw MeasureUndefined("rank2_tangle: state rank exceeds 2");
    std::vector<complex> e0(d), e1(d);
    for (std::size_t i = 0; i < d; ++i) {
        e0[i] = eig.vectors(i, d - 1);
        e1[i] = eig.vectors(i, d - 2);
    }
    const double l0 = eig.values[d - 1];
    const double l1 = std::max(0.0, eig.values[d - 2]);
    const double norm = l0 + l1;

    auto op = [&](complex c00, complex c01, complex c10, complex c11) {
        ComplexMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) = c00 * e0[i] * std::conj(e0[j]) + c01 * e0[i] * std::conj(e1[j]) +
                          c10 * e1[i] * std::conj(e0[j]) + c11 * e1[i] * std::conj(e1[j]);
        return partial_trace(m, dims, side_a);
    };
    const complex i1{0.0, 1.0};
    const std::array<ComplexMatrix, 4> basis = {op(1.0, 0.0, 0.0, 1.0), op(0.0, 1.0, 1.0, 0.0),
                                                op(0.0, -i1, i1, 0.0), op(1.0, 0.0, 0.0, -1.0)};
    double g[4][4];
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) g[m][n] = (basis[m] * basis[n]).trace().real();

    // tau(n) = n^T K n + 2 b.n + c on the unit sphere
    ComplexMatrix k(3, 3);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) k(m, n) = -0.5 * g[m + 1][n + 1];
    const std::array<double, 3> b = {-0.5 * g[0][1], -0.5 * g[0][2], -0.5 * g[0][3]};
    const double c = 2.0 - 0.5 * g[0][0];
    const double lmin = eigvals_hermitian(k).front();

    const std::array<double, 3> r = {0.0, 0.0, (l0 - l1) / norm};
    double tau = c + lmin;
    for (int m = 0; m < 3; ++m) {
        tau += 2.0 * b[m] * r[m];
        tau -= lmin * r[m] * r[m];
        for (int n = 0; n < 3; ++n) tau += r[m] * k(m, n).real() * r[n];
    }
    return std::max(0.0, tau);
}

/// sqrt(2(1 - tr rho_A^2)) for a pure global state and single-qubit side_a.
inline double concurrence_pure_cut(const MultipartiteState& state, const Cut& cut) {
    if (cut.side_a.size() != 1 || state.dims()[cut.side_a.front()] != 2) {
        throw DomainError("concurrence_pure_cut: side_a must be a single qubit");
    }
    if (!detail::is_pure(state.rho())) throw DomainError("concurrence_pure_cut: state is not pure");
    return detail::pure_concurrence(detail::reduce_to_cut(state, cut));
}

/// (||rho^{T_a}||_1 - 1)/2, doubled when normalized.
inline double negativity(const MultipartiteState& state, const Cut& cut, bool normalized = false) {
    const auto cs = detail::reduce_to_cut(state, cut);
    const auto vals = eigvals_hermitian(partial_transpose(cs.rho, cs.dims, cs.a));
    double neg = 0.0;
    for (double l : vals)
        if (l < 0.0) neg -= l;
    return normalized ? 2.0 * neg : neg;
}

inline double log_negativity(const MultipartiteState& state, const Cut& cut) {
    return std::log2(2.0 * negativity(state, cut) + 1.0);
}

inline double eof_two_qubit(const ComplexMatrix& rho) {
    return eof_from_concurrence(concurrence_two_qubit(rho));
}

/// Entanglement entropy of side_a for a pure global state.
inline double eof_pure_cut(const MultipartiteState& state, const Cut& cut) {
    if (!detail::is_pure(state.rho())) throw DomainError("eof_pure_cut: state is not pure");
    const auto cs = detail::reduce_to_cut(state, cut);
    return von_neumann_entropy(partial_trace(cs.rho, cs.dims, cs.a));
}

/// Lower bound on EoF for cuts where one side is a qubit:
/// E >= h((1 + sqrt(1 - C_lb^2))/2) with C_lb = 2N <= C.
inline double eof_lower_bound(const MultipartiteState& state, const Cut& cut) {
    const auto cs = detail::reduce_to_cut(state, cut);
    if (cs.dims.total(cs.a) != 2 && cs.dims.total(cs.b) != 2) {
        throw MeasureUndefined("eof_lower_bound needs a qubit on one side");
    }
    return eof_from_concurrence(std::min(1.0, negativity(state, cut, true)));
}

namespace detail {

inline double entropy_2x2(const ComplexMatrix& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double tr = a + d;
    if (tr <= 0.0) return 0.0;
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    return binary_entropy((0.5 * tr + half_gap) / tr);
}

/// S(other) - sum_k p_k S(other | k) for the projective measurement along
/// Bloch direction (theta, phi) on the measured qubit.
inline double measured_information(const ComplexMatrix& rho, MeasuredSide side, double theta, double phi,
                                   double s_other) {
    const complex n_minus = std::polar(std::sin(theta), -phi);  // n_x - i n_y
    const double nz = std::cos(theta);
    double cond = 0.0;
    for (int sign : {+1, -1}) {
        // P = (I + sign n.sigma)/2
        const complex p00 = 0.5 * (1.0 + sign * nz);
        const complex p11 = 0.5 * (1.0 - sign * nz);
        const complex p01 = 0.5 * static_cast<double>(sign) * n_minus;
        const complex p10 = std::conj(p01);
        const complex proj[2][2] = {{p00, p01}, {p10, p11}};
        // Unnormalized post-measurement state of the other qubit:
        // tr_meas[(P (x) I) rho] or tr_meas[(I (x) P) rho].
        ComplexMatrix post(2, 2);
        for (int o1 = 0; o1 < 2; ++o1)
            for (int o2 = 0; o2 < 2; ++o2) {
                complex acc = 0.0;
                for (int m1 = 0; m1 < 2; ++m1)
                    for (int m2 = 0; m2 < 2; ++m2) {
                        // sum_{m1,m2} P[m2][m1] rho[(m1,o1),(m2,o2)]
                        const std::size_t row = side == MeasuredSide::A ? m1 * 2 + o1 : o1 * 2 + m1;
                        const std::size_t col = side == MeasuredSide::A ? m2 * 2 + o2 : o2 * 2 + m2;
                        acc += proj[m2][m1] * rho(row, col);
                    }
                post(o1, o2) = acc;
            }
        const double p = post(0, 0).real() + post(1, 1).real();
        if (p > 1e-15) cond += p * entropy_2x2(post);
    }
    return s_other - cond;
}

}  // namespace detail

/// Max over projective qubit measurements on `side` of S(other) - sum p_k S(other|k).
/// 64x64 (theta, phi) grid, then 30 rounds of coordinate-wise golden-section refinement.
inline double classical_correlation(const ComplexMatrix& rho, MeasuredSide side) {
    if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("classical_correlation: need a 4x4 matrix");
    const DimSpec two{2, 2};
    const std::size_t other = side == MeasuredSide::A ? 1 : 0;
    const double s_other = detail::entropy_2x2(partial_trace(rho, two, std::array{other}));
    auto f = [&](double th, double ph) { return detail::measured_information(rho, side, th, ph, s_other); };

    constexpr int kGrid = 64;
    const double dth = std::numbers::pi / (kGrid - 1);
    const double dph = 2.0 * std::numbers::pi / kGrid;
    double best = -HUGE_VAL, bt = 0.0, bp = 0.0;
    for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
            const double v = f(i * dth, j * dph);
            if (v > best) {
                best = v;
                bt = i * dth;
                bp = j * dph;
            }
        }

    auto golden_max = [](auto&& g, double lo, double hi, double& arg, double& val) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = g(x1), f2 = g(x2);
        for (int it = 0; it < 24; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = g(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = g(x1);
            }
        }
        const double x = f1 > f2 ? x1 : x2;
        const double fx = std::max(f1, f2);
        if (fx > val) {
            val = fx;
            arg = x;
        }
    };

    double wt = dth, wp = dph;
    for (int round = 0; round < 30; ++round) {
        golden_max([&](double th) { return f(th, bp); }, bt - wt, bt + wt, bt, best);
        golden_max([&](double ph) { return f(bt, ph); }, bp - wp, bp + wp, bp, best);
        wt *= 0.5;
        wp *= 0.5;
    }
    return std::max(0.0, best);
}

/// I(A:B) - J(measured side); clamped to 0 inside [-1e-6, 0).
inline double discord(const ComplexMatrix& rho, MeasuredSide side) {
    if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("discord: need a 4x4 matrix");
    const DimSpec two{2, 2};
    const double sa = von_neumann_entropy(partial_trace(rho, two, std::array<std::size_t, 1>{0}));
    const double sb = von_neumann_entropy(partial_trace(rho, two, std::array<std::size_t, 1>{1}));
    const double sab = von_neumann_entropy(rho);
    const double d = sa + sb - sab - classical_correlation(rho, side);
    return (d < 0.0 && d >= -1e-6) ? 0.0 : d;
}

/// Q(rho_{a:b}) for the selected measure. Pure cut states use the pure-state
/// identities; values below 1e-12 are reported as 0.
inline double evaluate(const MeasureKind& kind, const MultipartiteState& state, const Cut& cut) {
    const auto cs = detail::reduce_to_cut(state, cut);
    const bool pure = detail::is_pure(cs.rho);
    const bool two_qubit = cs.dims.size() == 2 && cs.dims[0] == 2 && cs.dims[1] == 2;
    const std::string where = std::string(to_string(kind.tag)) + " on a " +
                              std::to_string(cs.dims.total(cs.a)) + "x" + std::to_string(cs.dims.total(cs.b)) +
                              (pure ? " pure" : " mixed") + " cut";

    double value = 0.0;
    switch (kind.tag) {
        case MeasureTag::Concurrence:
            if (pure) value = detail::pure_concurrence(cs);
            else if (two_qubit) value = concurrence_two_qubit(cs.rho);
            else value = std::sqrt(rank2_tangle(cs.rho, cs.dims, cs.a));
            break;
        case MeasureTag::Negativity:
        case MeasureTag::LogNegativity: {
            const auto vals = eigvals_hermitian(partial_transpose(cs.rho, cs.dims, cs.a));
            double neg = 0.0;
            for (double l : vals)
                if (l < 0.0) neg -= l;
            if (kind.tag == MeasureTag::LogNegativity) value = std::log2(2.0 * neg + 1.0);
            else value = kind.normalized ? 2.0 * neg : neg;
            break;
        }
        case MeasureTag::EoF:
            if (pure) value = von_neumann_entropy(partial_trace(cs.rho, cs.dims, cs.a));
            else if (two_qubit) value = eof_two_qubit(cs.rho);
            else throw MeasureUndefined(where);
            break;
        case MeasureTag::Discord:
        case MeasureTag::ClassicalCorrelation: {
            if (!two_qubit) throw MeasureUndefined(where);
            const MeasuredSide side = cs.a.front() == 0 ? MeasuredSide::A : MeasuredSide::B;
            value = kind.tag == MeasureTag::Discord ? discord(cs.rho, side) : classical_correlation(cs.rho, side);
            break;
        }
    }
    return detail::floor_small(value);
}

}  // namespace monolab
