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

// Dense complex linear algebra for small Hilbert spaces (dimension <= ~64):
// a row-major matrix type, Kronecker products, partial trace / transpose
// over an ordered list of subsystem dimensions, and a cyclic Jacobi
// eigensolver for Hermitian matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monolab/error.hpp"

namespace monolab {

using complex = std::complex<double>;
using Subsystems = std::vector<std::size_t>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionError("ComplexMatrix: entries length " + std::to_string(entries_.size()) +
                                 " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> diag) {
        ComplexMatrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    /// |v><v| for an (unnormalized) ket.
    static ComplexMatrix outer(std::span<const complex> ket) {
        const std::size_t n = ket.size();
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const complex> entries() const noexcept { return entries_; }
    std::span<complex> entries() noexcept { return entries_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix out = *this;
        for (auto& z : out.entries_) z = std::conj(z);
        return out;
    }

    complex trace() const {
        complex t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : entries_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    /// max |M_ij - conj(M_ji)|; infinite for non-square input.
    double hermiticity_error() const {
        if (!is_square()) return HUGE_VAL;
        double e = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return e;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    ComplexMatrix& operator*=(complex s) {
        for (auto& z : entries_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols_) +
                                 " and " + std::to_string(b.rows_));
        }
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const complex aik = a(i, k);
                if (aik == complex{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return HUGE_VAL;
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

/// Ordered subsystem dimensions; index 0 is the leftmost (most significant) factor.
class DimSpec {
public:
    DimSpec() = default;
    DimSpec(std::initializer_list<std::size_t> dims) : DimSpec(std::vector<std::size_t>(dims)) {}
    explicit DimSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw DimensionError("DimSpec: no subsystems");
        for (auto d : dims_)
            if (d < 2) throw DimensionError("DimSpec: subsystem dimension must be >= 2");
    }

    static DimSpec qubits(std::size_t n) { return DimSpec(std::vector<std::size_t>(n, 2)); }

    std::size_t size() const noexcept { return dims_.size(); }
    std::size_t operator[](std::size_t k) const { return dims_[k]; }
    std::span<const std::size_t> dims() const noexcept { return dims_; }

    std::size_t total() const {
        return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    }

    /// Product of the dimensions of the listed subsystems.
    std::size_t total(std::span<const std::size_t> which) const {
        std::size_t t = 1;
        for (auto k : which) t *= dims_.at(k);
        return t;
    }

    /// Sub-spec for the listed subsystems (in the order given).
    DimSpec select(std::span<const std::size_t> which) const {
        std::vector<std::size_t> d;
        d.reserve(which.size());
        for (auto k : which) d.push_back(dims_.at(k));
        return DimSpec(std::move(d));
    }

    /// Mixed-radix digits of a basis index, big-endian in subsystem order.
    std::vector<std::size_t> digits(std::size_t index) const {
        std::vector<std::size_t> out(dims_.size());
        for (std::size_t k = dims_.size(); k-- > 0;) {
            out[k] = index % dims_[k];
            index /= dims_[k];
        }
        return out;
    }

    std::size_t index(std::span<const std::size_t> digits) const {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + digits[k];
        return idx;
    }

    friend bool operator==(const DimSpec&, const DimSpec&) = default;

private:
    std::vector<std::size_t> dims_;
};

namespace detail {

inline void require_square_of(const ComplexMatrix& rho, const DimSpec& dims, const char* op) {
    if (!rho.is_square() || rho.rows() != dims.total()) {
        throw DimensionError(std::string(op) + ": matrix is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + " but dims multiply to " +
                             std::to_string(dims.total()));
    }
}

/// Sorted, deduplicated, range-checked copy of an index set.
inline Subsystems normalized_set(std::span<const std::size_t> set, std::size_t n, const char* op) {
    Subsystems s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= n) {
        throw DimensionError(std::string(op) + ": subsystem index " + std::to_string(s.back()) +
                             " out of range");
    }
    return s;
}

}  // namespace detail

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

/// Reduced matrix on `keep`, with kept subsystems in their original relative order.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimSpec& dims,
                                   std::span<const std::size_t> keep) {
    detail::require_square_of(rho, dims, "partial_trace");
    const Subsystems kept = detail::normalized_set(keep, dims.size(), "partial_trace");
    if (kept.empty()) throw DimensionError("partial_trace: empty keep set");

    const std::size_t n = dims.total();
    std::vector<std::size_t> kept_index(n), traced_index(n);
    std::vector<bool> is_kept(dims.size(), false);
    for (auto k : kept) is_kept[k] = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto dig = dims.digits(i);
        std::size_t ki = 0, ti = 0;
        for (std::size_t s = 0; s < dims.size(); ++s) {
            if (is_kept[s]) ki = ki * dims[s] + dig[s];
            else ti = ti * dims[s] + dig[s];
        }
        kept_index[i] = ki;
        traced_index[i] = ti;
    }

    const std::size_t m = dims.total(kept);
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
    return out;
}

/// Transpose applied to the listed subsystems only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimSpec& dims,
                                       std::span<const std::size_t> transposed) {
    detail::require_square_of(rho, dims, "partial_transpose");
    const Subsystems which = detail::normalized_set(transposed, dims.size(), "partial_transpose");

    const std::size_t n = dims.total();
    std::vector<std::vector<std::size_t>> digits(n);
    for (std::size_t i = 0; i < n; ++i) digits[i] = dims.digits(i);

    ComplexMatrix out(n, n);
    std::vector<std::size_t> di, dj;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            di = digits[i];
            dj = digits[j];
            for (auto s : which) std::swap(di[s], dj[s]);
            out(dims.index(di), dims.index(dj)) = rho(i, j);
        }
    return out;
}

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic Jacobi with complex rotations. Input is symmetrized as (H + H^H)/2.
inline EigenDecomposition eig_hermitian(const ComplexMatrix& h) {
    if (!h.is_square()) throw DimensionError("eig_hermitian: matrix is not square");
    const double scale = std::max(1.0, h.max_abs());
    if (h.hermiticity_error() > kHermitianTolerance * scale) {
        throw NotPhysicalError("eig_hermitian: matrix is not Hermitian (error " +
                               std::to_string(h.hermiticity_error()) + ")");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_diagonal = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double threshold = 1e-13 * std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal() >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                // Phase e^{-i phi} on column q makes the pivot real, then a real rotation.
                const complex phase = std::conj(a(p, q)) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const complex u00 = c, u01 = -s, u10 = phase * s, u11 = phase * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * u00 + akq * u10;
                    a(k, q) = akp * u01 + akq * u11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
                    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * u00 + vkq * u10;
                    v(k, q) = vkp * u01 + vkq * u11;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> eigvals_hermitian(const ComplexMatrix& h) { return eig_hermitian(h).values; }

inline double trace_norm_hermitian(const ComplexMatrix& h) {
    double s = 0.0;
    for (double l : eigvals_hermitian(h)) s += std::abs(l);
    return s;
}

inline double purity(const ComplexMatrix& rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double s = 0.0;
    for (const auto& z : rho.entries()) s += std::norm(z);
    return s;
}

inline constexpr double kEigenClamp = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;

/// Shannon entropy in bits of a probability spectrum; clamps [-1e-10, 0) to 0.
inline double spectrum_entropy(std::span<const double> spectrum) {
    double s = 0.0;
    for (double l : spectrum) {
        if (l < -kEigenClamp) {
            throw NotPhysicalError("entropy: eigenvalue " + std::to_string(l) + " below clamp window");
        }
        if (l > 0.0) s -= l * std::log2(l);
    }
    return s;
}

/// -tr(rho log2 rho).
inline double von_neumann_entropy(const ComplexMatrix& rho) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw NotPhysicalError("entropy: trace " + std::to_string(tr) + " != 1");
    }
    const auto vals = eigvals_hermitian(rho);
    return spectrum_entropy(vals);
}

}  // namespace monolab
