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

// Sampling-based checks of the monogamy results over state ensembles.
//
// Every suite returns a VerificationSummary. Margins are signed slacks of
// the checked inequality (negative = violated); a check passes when its
// margin is >= -tolerance. Report-only suites (probe, search, r = 1
// lifting) set asserted = false and never count violations against ok().
//
// Sample i of a run seeded with s is drawn from stream s + i, and results
// are reduced in sample order, so summaries do not depend on thread count.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monolab/io.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/parallel.hpp"

namespace monolab {

struct EnsembleSpec {
    enum class Source { Named, HaarPure, RandomMixed, Explicit };

    Source source = Source::HaarPure;
    std::string name;              // Named
    std::vector<double> noise;     // Named: white-noise grid (empty = p 0 only)
    DimSpec dims = DimSpec::qubits(3);
    std::size_t count = 0;         // HaarPure / RandomMixed
    std::size_t rank = 0;          // RandomMixed; 0 cycles through 1..d
    std::vector<MultipartiteState> states;  // Explicit
    std::string label;             // Explicit

    static EnsembleSpec named(std::string n, std::vector<double> p = {}) {
        EnsembleSpec e;
        e.source = Source::Named;
        e.name = std::move(n);
        e.noise = std::move(p);
        return e;
    }
    static EnsembleSpec haar_pure(DimSpec d, std::size_t count) {
        EnsembleSpec e;
        e.source = Source::HaarPure;
        e.dims = std::move(d);
        e.count = count;
        return e;
    }
    static EnsembleSpec random_mixed(DimSpec d, std::size_t count, std::size_t rank = 0) {
        EnsembleSpec e;
        e.source = Source::RandomMixed;
        e.dims = std::move(d);
        e.count = count;
        e.rank = rank;
        return e;
    }
    static EnsembleSpec explicit_states(std::vector<MultipartiteState> s, std::string label) {
        EnsembleSpec e;
        e.source = Source::Explicit;
        e.states = std::move(s);
        e.label = std::move(label);
        return e;
    }

    std::string description() const {
        auto dims_str = [&] {
            std::string s;
            for (auto d : dims.dims()) s += (s.empty() ? "" : ",") + std::to_string(d);
            return s;
        };
        switch (source) {
            case Source::Named:
                return name + (noise.empty() ? "" : " + white noise (" + std::to_string(noise.size()) + " p values)");
            case Source::HaarPure: return "haar-pure dims=" + dims_str();
            case Source::RandomMixed:
                return "random-mixed dims=" + dims_str() +
                       (rank ? " rank=" + std::to_string(rank) : std::string(" rank=cycle"));
            case Source::Explicit: return label;
        }
        return "";
    }
};

inline std::vector<MultipartiteState> sample_ensemble(const EnsembleSpec& spec, std::uint64_t seed) {
    switch (spec.source) {
        case EnsembleSpec::Source::Named: {
            const MultipartiteState base = named_state(spec.name);
            if (spec.noise.empty()) return {base};
            std::vector<MultipartiteState> out;
            for (double p : spec.noise) out.push_back(white_noise_mix(base, p));
            return out;
        }
        case EnsembleSpec::Source::HaarPure:
            return parallel_map(spec.count, [&](std::size_t i) { return haar_pure(spec.dims, seed + i); });
        case EnsembleSpec::Source::RandomMixed: {
            const std::size_t d = spec.dims.total();
            return parallel_map(spec.count, [&](std::size_t i) {
                const std::size_t rank = spec.rank ? spec.rank : 1 + i % d;
                return random_mixed(spec.dims, rank, seed + i);
            });
        }
        case EnsembleSpec::Source::Explicit: return spec.states;
    }
    return {};
}

struct VerificationSummary {
    std::string tag;
    std::string ensemble;
    std::size_t count = 0;  // ensemble size
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;
    bool asserted = true;
    std::optional<MultipartiteState> offender;
    double offender_margin = 0.0;
    json details = json::object();

    bool ok() const { return !asserted || violations == 0; }

    json to_json() const {
        json j{{"tag", tag},
               {"ensemble", {{"description", ensemble}, {"count", count}, {"seed", seed}}},
               {"counts", {{"checked", checked}, {"passed", passed}, {"skipped", skipped}, {"violations", violations}}},
               {"asserted", asserted},
               {"ok", ok()},
               {"worst_margin", worst_margin},
               {"details", details}};
        if (offender) j["offender"] = {{"state", state_to_json(*offender)}, {"margin", offender_margin}};
        else j["offender"] = nullptr;
        return j;
    }
};

namespace detail {

/// Per-sample outcome before reduction.
struct Outcome {
    bool skipped = false;
    double margin = 0.0;
};

/// Folds outcomes in sample order into the summary.
inline void accumulate(VerificationSummary& s, std::span<const Outcome> outcomes,
                       std::span<const MultipartiteState> states, double tolerance) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.skipped) {
            ++s.skipped;
            continue;
        }
        ++s.checked;
        worst = std::min(worst, o.margin);
        if (o.margin >= -tolerance) {
            ++s.passed;
        } else {
            ++s.violations;
            if (!s.offender || o.margin < s.offender_margin) {
                s.offender = states[i];
                s.offender_margin = o.margin;
            }
        }
    }
    s.worst_margin = std::isfinite(worst) ? worst : 0.0;
}

inline VerificationSummary start(std::string tag, const EnsembleSpec& spec, std::size_t count, std::uint64_t seed) {
    VerificationSummary s;
    s.tag = std::move(tag);
    s.ensemble = spec.description();
    s.count = count;
    s.seed = seed;
    return s;
}

inline double relative_slack(double lhs, double rhs) {
    return (lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace detail

inline constexpr double kLemmaTolerance = 1e-12;

/// Random audit of the scalar inequalities behind the power theorems:
///   (1+x)^t >= 1 + x^t               0 <= x <= 1, t >= 1
///   (sum x_i^t)^(s/t) >= sum x_i^s   0 <= x_i <= 1, s >= t >= 1
///   (1+x)^t <= 1 + x^t               x > 0, 0 < t <= 1
///   sum a_i b_i <= sqrt(sum a_i^2 sum b_i^2)
/// Slack is relative to max(1, |lhs|, |rhs|). A fifth, report-only tally
/// covers the decreasing-concave variant with f(x) = 1 - x^c.
inline VerificationSummary check_scalar_lemmas(std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("check_scalar_lemmas: need at least one sample");
    VerificationSummary s;
    s.tag = "lemmas";
    s.ensemble = "uniform scalar draws";
    s.count = samples;
    s.seed = seed;

    struct Tally {
        const char* name;
        std::size_t checked = 0, violations = 0;
        double worst = std::numeric_limits<double>::infinity();
    };
    std::array<Tally, 4> tallies{Tally{"power_of_sum"}, Tally{"norm_monotonicity"}, Tally{"subadditive_power"},
                                 Tally{"cauchy_schwarz"}};
    auto record = [&](Tally& t, double slack) {
        ++t.checked;
        t.worst = std::min(t.worst, slack);
        if (slack < -kLemmaTolerance) ++t.violations;
    };

    Rng rng(seed);
    std::size_t concave_checked = 0, concave_violations = 0, concave_literal_condition = 0;
    double concave_worst = std::numeric_limits<double>::infinity();
    double x[8], a[8], b[8];
    for (std::size_t k = 0; k < samples; ++k) {
        {
            const double xv = k == 0 ? 0.0 : k == 1 ? 1.0 : rng.uniform();
            const double t = k == 1 ? 2.0 : rng.uniform(1.0, 8.0);
            record(tallies[0], detail::relative_slack(std::pow(1.0 + xv, t), 1.0 + std::pow(xv, t)));
        }
        {
            const std::size_t n = 1 + rng.index(8);
            const double t = rng.uniform(1.0, 8.0);
            const double sp = rng.uniform(t, t + 8.0);
            double st = 0.0, ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = rng.uniform();
                st += std::pow(x[i], t);
                ss += std::pow(x[i], sp);
            }
            record(tallies[1], detail::relative_slack(std::pow(st, sp / t), ss));
        }
        {
            const double xv = 10.0 * (1.0 - rng.uniform());  // (0, 10]
            const double t = 1.0 - rng.uniform();            // (0, 1]
            record(tallies[2], detail::relative_slack(1.0 + std::pow(xv, t), std::pow(1.0 + xv, t)));
        }
        {
            const std::size_t n = 1 + rng.index(8);
            double ab = 0.0, aa = 0.0, bb = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = rng.uniform(-1.0, 1.0);
                b[i] = rng.uniform(-1.0, 1.0);
                ab += a[i] * b[i];
                aa += a[i] * a[i];
                bb += b[i] * b[i];
            }
            record(tallies[3], detail::relative_slack(std::sqrt(aa * bb), ab));
        }
        {
            // f decreasing concave on [0,1]; whole w >= sum of pair values y_j.
            const double c = rng.uniform(1.0, 4.0);
            const double m = rng.uniform(0.5, 3.0);
            const std::size_t n = 2 + rng.index(3);
            const double budget = rng.uniform();
            double raw = 0.0;
            for (std::size_t i = 0; i < n; ++i) raw += (x[i] = rng.uniform());
            double sum_y = 0.0;
            for (std::size_t i = 0; i < n; ++i) sum_y += (x[i] *= budget / raw);
            const double w = rng.uniform(sum_y, 1.0);
            auto fm = [&](double v) { return std::pow(1.0 - std::pow(v, c), m); };
            double rhs = 0.0;
            for (std::size_t i = 0; i < n; ++i) rhs += fm(x[i]);
            if (fm(sum_y) >= rhs) ++concave_literal_condition;
            if (fm(sum_y) <= rhs) {
                ++concave_checked;
                const double slack = detail::relative_slack(rhs, fm(w));
                concave_worst = std::min(concave_worst, slack);
                if (slack < -kLemmaTolerance) ++concave_violations;
            }
        }
    }

    double worst = std::numeric_limits<double>::infinity();
    for (const auto& t : tallies) {
        s.checked += t.checked;
        s.violations += t.violations;
        worst = std::min(worst, t.worst);
        s.details[t.name] = {{"checked", t.checked}, {"violations", t.violations}, {"worst_slack", t.worst}};
    }
    s.passed = s.checked - s.violations;
    s.worst_margin = worst;
    s.details["decreasing_concave"] = {
        {"asserted", false},
        {"checked", concave_checked},
        {"violations", concave_violations},
        {"literal_side_condition_held", concave_literal_condition},
        {"worst_slack", std::isfinite(concave_worst) ? concave_worst : 0.0}};
    return s;
}

/// delta(r) >= 0  =>  delta(alpha) >= 0 for alpha >= r >= 1 (normalized measure).
/// States not monogamous at r are skipped.
inline VerificationSummary verify_raising(MeasureKind kind, const EnsembleSpec& spec, double r,
                                          std::span<const double> alphas, std::uint64_t seed) {
    if (r < 1.0) throw DomainError("verify_raising: r must be >= 1");
    for (double a : alphas)
        if (a < r) throw DomainError("verify_raising: every alpha must be >= r");
    kind.normalized = true;
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("raising", spec, states.size(), seed);
    const auto outcomes = parallel_map(states.size(), [&](std::size_t i) {
        const BaseValues base = base_values(kind, states[i], 0);
        if (score_at(base, r) < -kMonogamyTolerance) return detail::Outcome{true, 0.0};
        double margin = std::numeric_limits<double>::infinity();
        for (double a : alphas) margin = std::min(margin, score_at(base, a));
        return detail::Outcome{false, alphas.empty() ? 0.0 : margin};
    });
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    s.details = {{"measure", to_string(kind.tag)}, {"r", r}, {"alphas", std::vector<double>(alphas.begin(), alphas.end())}};
    return s;
}

/// delta(r) <= 0  =>  delta(alpha) <= 0 for alpha <= r. Monogamous states are skipped.
inline VerificationSummary verify_lowering(MeasureKind kind, const EnsembleSpec& spec, double r,
                                           std::span<const double> alphas, std::uint64_t seed) {
    require_positive_exponent(r);
    for (double a : alphas) {
        require_positive_exponent(a);
        if (a > r) throw DomainError("verify_lowering: every alpha must be <= r");
    }
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("lowering", spec, states.size(), seed);
    const auto outcomes = parallel_map(states.size(), [&](std::size_t i) {
        const BaseValues base = base_values(kind, states[i], 0);
        if (score_at(base, r) > kMonogamyTolerance) return detail::Outcome{true, 0.0};
        double margin = std::numeric_limits<double>::infinity();
        for (double a : alphas) margin = std::min(margin, -score_at(base, a));
        return detail::Outcome{false, alphas.empty() ? 0.0 : margin};
    });
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    s.details = {{"measure", to_string(kind.tag)}, {"r", r}, {"alphas", std::vector<double>(alphas.begin(), alphas.end())}};
    return s;
}

/// EoF^m monogamy (m = 2 is the squared-EoF case) with EoF = f(C^2),
/// f(x) = h((1 + sqrt(1 - x))/2), on qubit ensembles with focus 0.
///
/// Pure states use the entanglement entropy for the whole cut. For mixed
/// states the whole cut has no closed form, so the certified lower bound
/// eof_lower_bound is used instead; the asserted margin is then a lower bound
/// on the true one. The scalar side condition f^m(sum q_j^2) >= sum f^m(q_j^2)
/// is asserted on the sampled pair concurrences when sum q_j^2 <= 1 and
/// flagged otherwise.
inline VerificationSummary verify_functional_lift(const EnsembleSpec& spec, double m, std::uint64_t seed) {
    require_positive_exponent(m);
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("functional", spec, states.size(), seed);

    struct Sample {
        detail::Outcome outcome;
        bool mixed = false;
        bool side_in_range = false;
        double side_slack = 0.0;
    };
    const MeasureKind eof{MeasureTag::EoF, true};
    const MeasureKind conc{MeasureTag::Concurrence, true};
    auto f_pow = [m](double tau) { return raise(eof_from_concurrence(std::sqrt(std::clamp(tau, 0.0, 1.0))), m); };

    const auto samples = parallel_map(states.size(), [&](std::size_t i) {
        const auto& st = states[i];
        if (st.parties() < 3) throw DomainError("verify_functional_lift: need at least 3 subsystems");
        const Cut whole_cut = focus_rest_cut(st.parties(), 0);
        Sample out;
        out.mixed = !detail::is_pure(st.rho());
        const double whole = out.mixed ? eof_lower_bound(st, whole_cut) : evaluate(eof, st, whole_cut);
        double delta = raise(whole, m);
        double sum_tau = 0.0, side_rhs = 0.0;
        for (auto j : partners_of(st.parties(), 0)) {
            const Cut pair{{0}, {j}};
            delta -= raise(evaluate(eof, st, pair), m);
            const double tau = std::pow(evaluate(conc, st, pair), 2);
            sum_tau += tau;
            side_rhs += f_pow(tau);
        }
        out.outcome = {false, delta};
        out.side_in_range = sum_tau <= 1.0;
        if (out.side_in_range) out.side_slack = f_pow(sum_tau) - side_rhs;
        return out;
    });

    std::vector<detail::Outcome> outcomes;
    std::size_t mixed = 0, side_checked = 0, side_violations = 0, side_out_of_range = 0;
    double side_worst = std::numeric_limits<double>::infinity();
    for (const auto& smp : samples) {
        outcomes.push_back(smp.outcome);
        mixed += smp.mixed;
        if (!smp.side_in_range) {
            ++side_out_of_range;
            continue;
        }
        ++side_checked;
        side_worst = std::min(side_worst, smp.side_slack);
        if (smp.side_slack < -kMonogamyTolerance) ++side_violations;
    }
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    // A side-condition failure is a violation of the suite as well.
    s.violations += side_violations;
    s.details = {{"m", m},
                 {"mixed_states_using_lower_bound", mixed},
                 {"side_condition", {{"checked", side_checked},
                                     {"violations", side_violations},
                                     {"out_of_range_flagged", side_out_of_range},
                                     {"worst_slack", std::isfinite(side_worst) ? side_worst : 0.0}}}};
    return s;
}

/// Mixed-state lifting: delta of Q^r on mixed ensembles, focus 0.
/// Asserted only for r = 2 with a convex measure (Negativity, Concurrence);
/// r = 1 and LogNegativity are tabulated. Samples whose cuts are not
/// computable for the measure are skipped. delta at r = 1 is always tabulated.
inline VerificationSummary verify_mixed_lifting(MeasureKind kind, double r, const EnsembleSpec& spec,
                                                std::uint64_t seed) {
    if (r != 1.0 && r != 2.0) throw DomainError("verify_mixed_lifting: r must be 1 or 2");
    if (kind.tag != MeasureTag::Negativity && kind.tag != MeasureTag::LogNegativity &&
        kind.tag != MeasureTag::Concurrence) {
        throw DomainError("verify_mixed_lifting: measure must be negativity, lognegativity or concurrence");
    }
    kind.normalized = true;
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("mixed", spec, states.size(), seed);
    s.asserted = r == 2.0 && kind.tag != MeasureTag::LogNegativity;

    struct Sample {
        detail::Outcome outcome;
        double delta_r1 = 0.0;
    };
    const auto samples = parallel_map(states.size(), [&](std::size_t i) {
        try {
            const BaseValues base = base_values(kind, states[i], 0);
            return Sample{{false, score_at(base, r)}, score_at(base, 1.0)};
        } catch (const MeasureUndefined&) {
            return Sample{{true, 0.0}, 0.0};
        }
    });
    std::vector<detail::Outcome> outcomes;
    std::size_t r1_negative = 0;
    double r1_worst = std::numeric_limits<double>::infinity();
    for (const auto& smp : samples) {
        outcomes.push_back(smp.outcome);
        if (smp.outcome.skipped) continue;
        r1_worst = std::min(r1_worst, smp.delta_r1);
        if (smp.delta_r1 < -kMonogamyTolerance) ++r1_negative;
    }
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    if (!s.asserted) {
        s.violations = 0;
        s.offender.reset();
    }
    s.details = {{"measure", to_string(kind.tag)},
                 {"r", r},
                 {"r1_tabulation", {{"negative_count", r1_negative},
                                    {"worst_delta", std::isfinite(r1_worst) ? r1_worst : 0.0}}}};
    return s;
}

/// Exploratory: delta of normalized N^r for r > 2 on mixed ensembles. Cross-checks
/// the implication delta(2) >= 0 and values <= 1  =>  delta(r) >= 0 for r >= 2.
inline VerificationSummary probe_high_power_mixed(std::span<const double> r_values, const EnsembleSpec& spec,
                                                  std::uint64_t seed) {
    for (double r : r_values) require_positive_exponent(r);
    const MeasureKind kind{MeasureTag::Negativity, true};
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("probe-high-power", spec, states.size(), seed);
    s.asserted = false;

    const auto bases = parallel_map(states.size(), [&](std::size_t i) { return base_values(kind, states[i], 0); });
    std::vector<detail::Outcome> outcomes;
    json per_r = json::array();
    std::size_t implication_failures = 0;
    std::vector<double> worst(r_values.size(), std::numeric_limits<double>::infinity());
    std::vector<std::size_t> negatives(r_values.size(), 0);
    for (const auto& base : bases) {
        double margin = std::numeric_limits<double>::infinity();
        const bool premise = score_at(base, 2.0) >= -kMonogamyTolerance && base.whole <= 1.0 &&
                             std::all_of(base.parts.begin(), base.parts.end(), [](double q) { return q <= 1.0; });
        for (std::size_t k = 0; k < r_values.size(); ++k) {
            const double d = score_at(base, r_values[k]);
            worst[k] = std::min(worst[k], d);
            margin = std::min(margin, d);
            if (d < -kMonogamyTolerance) {
                ++negatives[k];
                if (premise && r_values[k] >= 2.0) ++implication_failures;
            }
        }
        outcomes.push_back({false, r_values.empty() ? 0.0 : margin});
    }
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    s.violations = 0;
    for (std::size_t k = 0; k < r_values.size(); ++k) {
        per_r.push_back({{"r", r_values[k]},
                         {"negative_count", negatives[k]},
                         {"worst_delta", std::isfinite(worst[k]) ? worst[k] : 0.0}});
    }
    s.details = {{"per_r", per_r}, {"implication_failures", implication_failures}};
    return s;
}

/// whole >= subset average >= pair sum for each state (focus 0).
inline VerificationSummary verify_strong(const MeasureKind& kind, const EnsembleSpec& spec, double alpha,
                                         std::uint64_t seed) {
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("strong", spec, states.size(), seed);
    std::size_t n2_exact = 0, n2_total = 0;
    const auto reports =
        parallel_map(states.size(), [&](std::size_t i) { return strong_monogamy_report(kind, states[i], 0, alpha); });
    std::vector<detail::Outcome> outcomes;
    for (const auto& rep : reports) {
        outcomes.push_back({false, std::min(rep.whole - rep.subset_average, rep.subset_average - rep.pair_sum)});
        if (rep.n == 2) {
            ++n2_total;
            n2_exact += rep.subset_average == rep.pair_sum;
        }
    }
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    s.details = {{"measure", to_string(kind.tag)}, {"alpha", alpha}, {"n2_states", n2_total}, {"n2_exact", n2_exact}};
    if (n2_exact != n2_total) s.violations += n2_total - n2_exact;
    return s;
}

/// Every hierarchy level <= whole, and levels non-increasing (focus 0, partner 1).
inline VerificationSummary verify_hierarchy(const MeasureKind& kind, const EnsembleSpec& spec, double alpha,
                                            std::uint64_t seed) {
    const auto states = sample_ensemble(spec, seed);
    auto s = detail::start("hierarchy", spec, states.size(), seed);
    const auto outcomes = parallel_map(states.size(), [&](std::size_t i) {
        const auto rep = hierarchy_chain(kind, states[i], 0, 1, alpha);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < rep.levels.size(); ++k) {
            margin = std::min(margin, rep.whole - rep.levels[k]);
            if (k + 1 < rep.levels.size()) margin = std::min(margin, rep.levels[k] - rep.levels[k + 1]);
        }
        return detail::Outcome{false, margin};
    });
    detail::accumulate(s, outcomes, states, kMonogamyTolerance);
    s.details = {{"measure", to_string(kind.tag)}, {"alpha", alpha}};
    return s;
}

struct SearchOptions {
    double initial_step = 0.1;
    double min_step = 1e-6;
    std::size_t rejections_before_halving = 20;
    std::size_t max_steps = 200000;  // per restart; 0 returns the random starts
};

struct SearchEndpoint {
    MultipartiteState state;
    double score = 0.0;
};

struct SearchResult {
    VerificationSummary summary;
    std::vector<SearchEndpoint> endpoints;  // one per restart
};

/// Minimizes delta(r) over pure states on `dims` (focus 0): random Haar
/// starts, then coordinate-wise random perturbations of the ket's real and
/// imaginary parts. A step size is halved after 20 consecutive rejections;
/// a restart ends when the step drops below 1e-6.
inline SearchResult counterexample_search(const MeasureKind& kind, double r, const DimSpec& dims,
                                          std::size_t restarts, std::uint64_t seed, const SearchOptions& opt = {}) {
    require_positive_exponent(r);
    if (restarts < 1) throw DomainError("counterexample_search: need at least one restart");
    if (dims.size() < 3) throw DomainError("counterexample_search: need at least 3 subsystems");
    const std::size_t d = dims.total();

    auto score_of = [&](const std::vector<complex>& ket) {
        return score_at(base_values(kind, MultipartiteState::from_ket(ket, dims), 0), r);
    };

    SearchResult out;
    out.endpoints = parallel_map(restarts, [&](std::size_t k) {
        Rng rng(seed + k);
        std::vector<complex> ket = haar_ket(d, rng);
        double best = score_of(ket);
        double step = opt.initial_step;
        std::size_t rejections = 0;
        for (std::size_t it = 0; it < opt.max_steps && step >= opt.min_step; ++it) {
            const std::size_t coord = rng.index(2 * d);
            const double shift = step * rng.uniform(-1.0, 1.0);
            std::vector<complex> trial = ket;
            if (coord < d) trial[coord] += shift;
            else trial[coord - d] += complex(0.0, shift);
            double norm2 = 0.0;
            for (const auto& z : trial) norm2 += std::norm(z);
            if (norm2 < 1e-12) continue;
            for (auto& z : trial) z /= std::sqrt(norm2);
            const double sc = score_of(trial);
            if (sc < best) {
                best = sc;
                ket = std::move(trial);
                rejections = 0;
            } else if (++rejections >= opt.rejections_before_halving) {
                step *= 0.5;
                rejections = 0;
            }
        }
        return SearchEndpoint{MultipartiteState::from_ket(ket, dims), best};
    });

    auto& s = out.summary;
    s.tag = "search";
    s.ensemble = "hill-climb over pure states";
    s.count = restarts;
    s.seed = seed;
    s.asserted = false;
    s.checked = restarts;
    std::size_t best_k = 0, negative = 0;
    for (std::size_t k = 0; k < restarts; ++k) {
        if (out.endpoints[k].score < out.endpoints[best_k].score) best_k = k;
        negative += out.endpoints[k].score < -kMonogamyTolerance;
    }
    s.passed = restarts - negative;
    s.worst_margin = out.endpoints[best_k].score;
    s.offender = out.endpoints[best_k].state;
    s.offender_margin = out.endpoints[best_k].score;
    s.details = {{"measure", to_string(kind.tag)}, {"r", r}, {"negative_endpoints", negative}};
    return out;
}

}  // namespace monolab
