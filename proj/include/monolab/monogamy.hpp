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

// Monogamy scores delta = Q^r(A:rest) - sum_j Q^r(A:B_j), their dependence on
// the exponent r, and the hierarchical / strong (subset-averaged) variants.
//
// Conventions: 0^r = 0 for r > 0; exponents r <= 0 are rejected. A score
// >= -1e-9 counts as monogamous.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "monolab/measures.hpp"

namespace monolab {

inline constexpr double kMonogamyTolerance = 1e-9;

inline void require_positive_exponent(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("exponent must be a finite positive number");
}

inline double raise(double q, double r) { return q <= 0.0 ? 0.0 : std::pow(q, r); }

/// Unexponentiated Q on the focus:rest cut and on each focus:B_j pair cut.
struct BaseValues {
    double whole = 0.0;
    std::vector<double> parts;
};

struct MonogamyReport {
    MeasureKind measure;
    double exponent = 1.0;
    double whole = 0.0;
    std::vector<double> parts;
    double score = 0.0;
};

/// Pair-cut partners of `focus`, in index order.
inline Subsystems partners_of(std::size_t parties, std::size_t focus) {
    Subsystems out;
    for (std::size_t k = 0; k < parties; ++k)
        if (k != focus) out.push_back(k);
    return out;
}

inline BaseValues base_values(const MeasureKind& kind, const MultipartiteState& state, std::size_t focus) {
    if (state.parties() < 3) throw DomainError("monogamy score needs at least 3 subsystems");
    if (focus >= state.parties()) throw DomainError("focus subsystem out of range");
    BaseValues b;
    b.whole = evaluate(kind, state, focus_rest_cut(state.parties(), focus));
    for (auto j : partners_of(state.parties(), focus)) b.parts.push_back(evaluate(kind, state, Cut{{focus}, {j}}));
    return b;
}

inline double score_at(const BaseValues& base, double r) {
    double s = raise(base.whole, r);
    for (double q : base.parts) s -= raise(q, r);
    return s;
}

inline MonogamyReport report_at(const BaseValues& base, const MeasureKind& kind, double r) {
    require_positive_exponent(r);
    MonogamyReport rep{kind, r, raise(base.whole, r), {}, 0.0};
    rep.score = rep.whole;
    for (double q : base.parts) {
        rep.parts.push_back(raise(q, r));
        rep.score -= rep.parts.back();
    }
    return rep;
}

inline MonogamyReport monogamy_score(const MeasureKind& kind, const MultipartiteState& state, std::size_t focus,
                                     double r) {
    require_positive_exponent(r);
    return report_at(base_values(kind, state, focus), kind, r);
}

/// One report per grid point; measure values are computed once.
inline std::vector<MonogamyReport> power_sweep(const MeasureKind& kind, const MultipartiteState& state,
                                               std::size_t focus, std::span<const double> r_grid) {
    for (double r : r_grid) require_positive_exponent(r);
    const BaseValues base = base_values(kind, state, focus);
    std::vector<MonogamyReport> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) out.push_back(report_at(base, kind, r));
    return out;
}

struct BisectionStep {
    double r;
    double score;
};

struct CriticalExponent {
    double r_star = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double score_lo = 0.0;  // at the user's bracket endpoints
    double score_hi = 0.0;
    std::vector<BisectionStep> trace;
};

/// Bisection for the sign change of delta(r) inside [r_lo, r_hi]; requires
/// delta(r_lo) < 0 < delta(r_hi). Assumes a single crossing in the bracket.
inline CriticalExponent critical_exponent(const BaseValues& base, double r_lo, double r_hi, double tol) {
    require_positive_exponent(r_lo);
    require_positive_exponent(r_hi);
    if (!(r_lo < r_hi)) throw DomainError("bracket must satisfy r_lo < r_hi");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    CriticalExponent out;
    out.score_lo = score_at(base, r_lo);
    out.score_hi = score_at(base, r_hi);
    if (!(out.score_lo < 0.0 && out.score_hi > 0.0)) {
        throw NoBracketedCrossing("no bracketed crossing: delta(" + std::to_string(r_lo) +
                                  ") = " + std::to_string(out.score_lo) + ", delta(" + std::to_string(r_hi) +
                                  ") = " + std::to_string(out.score_hi));
    }
    double lo = r_lo, hi = r_hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double s = score_at(base, mid);
        out.trace.push_back({mid, s});
        if (s < 0.0) lo = mid;
        else hi = mid;
    }
    out.lo = lo;
    out.hi = hi;
    out.r_star = 0.5 * (lo + hi);
    return out;
}

inline CriticalExponent critical_exponent(const MeasureKind& kind, const MultipartiteState& state,
                                          std::size_t focus, double r_lo, double r_hi, double tol) {
    return critical_exponent(base_values(kind, state, focus), r_lo, r_hi, tol);
}

struct StrongMonogamyReport {
    double alpha = 1.0;
    std::size_t n = 0;                  // parties in B
    double whole = 0.0;                 // Q^a(A:B)
    double subset_average = 0.0;        // sum_X Q^a(A:X) / (2^{n-1} - 1)
    double pair_sum = 0.0;              // sum_j Q^a(A:B_j)
    std::vector<std::uint32_t> masks;   // bit j selects the j-th member of B
    std::vector<double> subset_values;  // Q^a(A:X) per mask
};

/// Subsets X are nonempty proper subsets of B = all subsystems but focus,
/// enumerated as masks 1 .. 2^n - 2 in ascending order.
inline StrongMonogamyReport strong_monogamy_report(const MeasureKind& kind, const MultipartiteState& state,
                                                   std::size_t focus, double alpha) {
    require_positive_exponent(alpha);
    if (focus >= state.parties()) throw DomainError("focus subsystem out of range");
    const Subsystems b = partners_of(state.parties(), focus);
    const std::size_t n = b.size();
    if (n < 2) throw DomainError("strong monogamy needs at least 2 parties besides the focus");
    if (n > 20) throw DomainError("too many parties for subset enumeration");

    StrongMonogamyReport rep;
    rep.alpha = alpha;
    rep.n = n;
    rep.whole = raise(evaluate(kind, state, Cut{{focus}, b}), alpha);

    std::vector<double> pairs(n);
    for (std::size_t j = 0; j < n; ++j) {
        pairs[j] = raise(evaluate(kind, state, Cut{{focus}, {b[j]}}), alpha);
        rep.pair_sum += pairs[j];
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    double total = 0.0;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        double v;
        if ((mask & (mask - 1)) == 0) {
            v = pairs[static_cast<std::size_t>(std::countr_zero(mask))];
        } else {
            Subsystems x;
            for (std::size_t j = 0; j < n; ++j)
                if (mask >> j & 1u) x.push_back(b[j]);
            v = raise(evaluate(kind, state, Cut{{focus}, x}), alpha);
        }
        rep.masks.push_back(mask);
        rep.subset_values.push_back(v);
        total += v;
    }
    const double weight = static_cast<double>((std::uint64_t{1} << (n - 1)) - 1);
    rep.subset_average = total / weight;
    return rep;
}

struct HierarchyReport {
    double alpha = 1.0;
    double whole = 0.0;          // Q^a(A:rest)
    std::vector<double> levels;  // coarsest first
};

/// Right-hand sides Q^a(A:P) + sum_{j<k} Q^a(A:C_j) + Q^a(A:C_k..C_m), k = 1..m,
/// where P is `partner` and C_1..C_m are the remaining subsystems in index order.
inline HierarchyReport hierarchy_chain(const MeasureKind& kind, const MultipartiteState& state,
                                       std::size_t focus, std::size_t partner, double alpha) {
    require_positive_exponent(alpha);
    const std::size_t parties = state.parties();
    if (focus >= parties || partner >= parties || focus == partner) {
        throw DomainError("hierarchy_chain: focus and partner must be distinct subsystems");
    }
    Subsystems c;
    for (std::size_t k = 0; k < parties; ++k)
        if (k != focus && k != partner) c.push_back(k);
    if (c.empty()) throw DomainError("hierarchy_chain: needs at least 3 subsystems");

    HierarchyReport rep;
    rep.alpha = alpha;
    rep.whole = raise(evaluate(kind, state, focus_rest_cut(parties, focus)), alpha);
    const double head = raise(evaluate(kind, state, Cut{{focus}, {partner}}), alpha);
    double singles = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Subsystems tail(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
        const double block = raise(evaluate(kind, state, Cut{{focus}, tail}), alpha);
        rep.levels.push_back(head + singles + block);
        singles += k + 1 < c.size() ? raise(evaluate(kind, state, Cut{{focus}, {c[k]}}), alpha) : 0.0;
    }
    return rep;
}

/// sum_j Q(A:B_j) with the normalized variant of the measure.
inline double share_sum(MeasureKind kind, const MultipartiteState& state, std::size_t focus) {
    kind.normalized = true;
    if (focus >= state.parties()) throw DomainError("focus subsystem out of range");
    double s = 0.0;
    for (auto j : partners_of(state.parties(), focus)) s += evaluate(kind, state, Cut{{focus}, {j}});
    return s;
}

}  // namespace monolab
