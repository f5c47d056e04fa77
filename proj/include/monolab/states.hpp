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

// Named multipartite states, white-noise mixtures and seeded random
// ensembles.
//
// Reproducibility: every random constructor draws from std::mt19937_64
// seeded with a 64-bit seed. Uniform doubles take the top 53 bits of each
// draw; Gaussians use Box-Muller. Neither goes through <random>
// distributions, whose output is implementation-defined, so the same seed
// gives bit-identical states on every platform.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monolab/tensor.hpp"

namespace monolab {

class MultipartiteState {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-9;
    static constexpr double kPositivityTol = 1e-9;

    MultipartiteState() = default;

    /// Validates Hermiticity, unit trace and positivity.
    MultipartiteState(ComplexMatrix rho, DimSpec dims, std::vector<std::string> labels = {})
        : rho_(std::move(rho)), dims_(std::move(dims)), labels_(std::move(labels)) {
        detail::require_square_of(rho_, dims_, "MultipartiteState");
        validate();
        fill_labels();
    }

    /// Pure state from a ket; normalizes it.
    static MultipartiteState from_ket(std::span<const complex> ket, DimSpec dims) {
        if (ket.size() != dims.total()) throw DimensionError("from_ket: ket length does not match dims");
        double norm2 = 0.0;
        for (const auto& z : ket) norm2 += std::norm(z);
        if (!(norm2 > 0.0)) throw DomainError("from_ket: zero vector");
        std::vector<complex> v(ket.begin(), ket.end());
        for (auto& z : v) z /= std::sqrt(norm2);
        return trusted(ComplexMatrix::outer(v), std::move(dims));
    }

    /// Skips validation; for matrices that are density matrices by construction.
    static MultipartiteState trusted(ComplexMatrix rho, DimSpec dims) {
        MultipartiteState s;
        s.rho_ = std::move(rho);
        s.dims_ = std::move(dims);
        s.fill_labels();
        return s;
    }

    const ComplexMatrix& rho() const noexcept { return rho_; }
    const DimSpec& dims() const noexcept { return dims_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t parties() const noexcept { return dims_.size(); }
    std::size_t dimension() const noexcept { return rho_.rows(); }

    double purity() const { return monolab::purity(rho_); }

    MultipartiteState reduced(std::span<const std::size_t> keep) const {
        const Subsystems kept = detail::normalized_set(keep, dims_.size(), "reduced");
        return trusted(partial_trace(rho_, dims_, kept), dims_.select(kept));
    }

private:
    void validate() const {
        const double herm = rho_.hermiticity_error();
        if (herm > kHermitianTol) {
            throw NotPhysicalError("state is not Hermitian (error " + std::to_string(herm) + ")");
        }
        const double tr = rho_.trace().real();
        if (std::abs(tr - 1.0) > kTraceTol) {
            throw NotPhysicalError("state trace " + std::to_string(tr) + " != 1");
        }
        const auto vals = eigvals_hermitian(rho_);
        if (vals.front() < -kPositivityTol) {
            throw NotPhysicalError("state has negative eigenvalue " + std::to_string(vals.front()));
        }
    }

    void fill_labels() {
        if (!labels_.empty()) {
            if (labels_.size() != dims_.size()) throw DimensionError("labels do not match subsystem count");
            return;
        }
        labels_.reserve(dims_.size());
        labels_.push_back("A");
        for (std::size_t k = 1; k < dims_.size(); ++k) labels_.push_back("B" + std::to_string(k));
    }

    ComplexMatrix rho_;
    DimSpec dims_;
    std::vector<std::string> labels_;
};

/// Reproducible generator: mt19937_64 with hand-rolled uniform and Box-Muller.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream for sample `index` of a run seeded with `seed`.
    static Rng for_sample(std::uint64_t seed, std::uint64_t index) { return Rng(seed + index); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

    double gaussian() {
        if (spare_) {
            const double g = *spare_;
            spare_.reset();
            return g;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        return radius * std::cos(angle);
    }

    complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

inline MultipartiteState ghz(std::size_t n) {
    if (n < 2) throw DomainError("ghz: need at least 2 parties");
    const DimSpec dims = DimSpec::qubits(n);
    std::vector<complex> ket(dims.total());
    ket.front() = std::numbers::sqrt2 / 2.0;
    ket.back() = std::numbers::sqrt2 / 2.0;
    return MultipartiteState::from_ket(ket, dims);
}

inline MultipartiteState w(std::size_t n) {
    if (n < 2) throw DomainError("w: need at least 2 parties");
    const DimSpec dims = DimSpec::qubits(n);
    std::vector<complex> ket(dims.total());
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) ket[std::size_t{1} << k] = amp;
    return MultipartiteState::from_ket(ket, dims);
}

/// (1 - p) rho + p I/d.
inline MultipartiteState white_noise_mix(const MultipartiteState& state, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("white_noise_mix: p must lie in [0, 1]");
    const std::size_t d = state.dimension();
    ComplexMatrix rho = state.rho() * complex(1.0 - p);
    for (std::size_t i = 0; i < d; ++i) rho(i, i) += p / static_cast<double>(d);
    return MultipartiteState::trusted(std::move(rho), state.dims());
}

/// (|000><000| + |111><111|)/2.
inline MultipartiteState classical_corr_state() {
    std::vector<double> diag(8, 0.0);
    diag.front() = 0.5;
    diag.back() = 0.5;
    return MultipartiteState(ComplexMatrix::diagonal(diag), DimSpec::qubits(3));
}

inline MultipartiteState product_state(std::span<const std::vector<complex>> factors) {
    std::vector<std::size_t> d;
    std::vector<complex> ket{1.0};
    for (const auto& f : factors) {
        d.push_back(f.size());
        std::vector<complex> next;
        next.reserve(ket.size() * f.size());
        for (const auto& a : ket)
            for (const auto& b : f) next.push_back(a * b);
        ket = std::move(next);
    }
    return MultipartiteState::from_ket(ket, DimSpec(std::move(d)));
}

inline std::vector<complex> haar_ket(std::size_t d, Rng& rng) {
    std::vector<complex> ket(d);
    for (auto& z : ket) z = rng.complex_gaussian();
    return ket;
}

/// Normalized complex Gaussian vector, Haar distributed by unitary invariance.
inline MultipartiteState haar_pure(const DimSpec& dims, std::uint64_t seed) {
    Rng rng(seed);
    return MultipartiteState::from_ket(haar_ket(dims.total(), rng), dims);
}

/// Induced measure: Haar pure state on system (x) C^rank, ancilla traced out.
/// Computed as G G^H / tr(G G^H) for a d x rank complex Gaussian G, which is
/// the same matrix as the reshaped ancilla trace.
inline MultipartiteState random_mixed(const DimSpec& dims, std::size_t rank, std::uint64_t seed) {
    const std::size_t d = dims.total();
    if (rank < 1 || rank > d) throw DomainError("random_mixed: rank must lie in [1, d]");
    Rng rng(seed);
    ComplexMatrix g(d, rank);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < rank; ++k) g(i, k) = rng.complex_gaussian();
    ComplexMatrix rho = g * g.adjoint();
    rho *= complex(1.0 / rho.trace().real());
    for (std::size_t i = 0; i < d; ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < d; ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return MultipartiteState::trusted(std::move(rho), dims);
}

/// Haar unitary from Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) = rng.complex_gaussian();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            complex dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, prev)) * u(i, c);
            for (std::size_t i = 0; i < n; ++i) u(i, c) -= dot * u(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(u(i, c));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) u(i, c) /= norm;
    }
    return u;
}

/// U rho U^H.
inline MultipartiteState apply_unitary(const MultipartiteState& state, const ComplexMatrix& u) {
    ComplexMatrix rho = u * state.rho() * u.adjoint();
    return MultipartiteState::trusted(std::move(rho), state.dims());
}

/// Reorders subsystems: new subsystem k is old subsystem order[k].
inline MultipartiteState permute_subsystems(const MultipartiteState& state,
                                            std::span<const std::size_t> order) {
    const DimSpec& dims = state.dims();
    if (order.size() != dims.size()) throw DimensionError("permute_subsystems: order has wrong length");
    const DimSpec out_dims = dims.select(order);
    const std::size_t d = dims.total();
    std::vector<std::size_t> map(d);
    std::vector<std::size_t> nd(dims.size());
    for (std::size_t i = 0; i < d; ++i) {
        const auto od = dims.digits(i);
        for (std::size_t k = 0; k < order.size(); ++k) nd[k] = od[order[k]];
        map[i] = out_dims.index(nd);
    }
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho(map[i], map[j]) = state.rho()(i, j);
    return MultipartiteState::trusted(std::move(rho), out_dims);
}

/// Named catalog entries: ghz<N>, w<N>, product<N> (|0...0>), classical.
inline MultipartiteState named_state(const std::string& name) {
    auto parties = [&](std::size_t prefix) -> std::size_t {
        const std::string digits = name.substr(prefix);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw DomainError("unknown state '" + name + "'");
        }
        return static_cast<std::size_t>(std::stoul(digits));
    };
    if (name == "classical") return classical_corr_state();
    if (name.rfind("ghz", 0) == 0) return ghz(parties(3));
    if (name.rfind("product", 0) == 0) {
        const std::size_t n = parties(7);
        if (n < 2) throw DomainError("product: need at least 2 parties");
        const std::vector<std::vector<complex>> zero(n, std::vector<complex>{1.0, 0.0});
        return product_state(zero);
    }
    if (name.rfind("w", 0) == 0) return w(parties(1));
    throw DomainError("unknown state '" + name + "'");
}

}  // namespace monolab
