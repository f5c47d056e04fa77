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

#include <gtest/gtest.h>

#include <cmath>

#include "monolab/monogamy.hpp"

namespace monolab {
namespace {

const MeasureKind kNeg{MeasureTag::Negativity, false};
const MeasureKind kLogNeg{MeasureTag::LogNegativity, false};
const MeasureKind kConc{MeasureTag::Concurrence, true};

MultipartiteState product3() {
    const std::vector<std::vector<complex>> f{{0.6, 0.8}, {1.0, 0.0}, {complex(0.0, 1.0), 0.0}};
    return product_state(f);
}

TEST(Score, GhzNegativity) {
    const auto rep = monogamy_score(kNeg, ghz(3), 0, 1.0);
    EXPECT_NEAR(rep.score, 0.5, 1e-12);
    for (double q : rep.parts) EXPECT_EQ(q, 0.0);
}

TEST(Score, WConcurrenceSquaredSaturates) {
    const auto rep = monogamy_score(kConc, w(3), 0, 2.0);
    EXPECT_NEAR(rep.whole, 8.0 / 9, 1e-12);
    EXPECT_NEAR(rep.parts[0], 4.0 / 9, 1e-12);
    EXPECT_NEAR(rep.score, 0.0, 1e-9);
}

TEST(Score, ProductStateIsZero) {
    for (const auto& kind : {kNeg, kLogNeg, kConc, MeasureKind{MeasureTag::EoF, false}})
        for (std::size_t focus = 0; focus < 3; ++focus)
            for (double r : {0.5, 1.0, 2.7}) EXPECT_EQ(monogamy_score(kind, product3(), focus, r).score, 0.0);
}

TEST(Score, ScoreIsWholeMinusParts) {
    const auto rep = monogamy_score(kLogNeg, haar_pure(DimSpec::qubits(4), 8), 2, 1.3);
    double s = rep.whole;
    for (double q : rep.parts) s -= q;
    EXPECT_EQ(rep.score, s);
    EXPECT_EQ(rep.parts.size(), 3u);
}

TEST(Score, Errors) {
    EXPECT_THROW(monogamy_score(kNeg, ghz(3), 0, 0.0), DomainError);
    EXPECT_THROW(monogamy_score(kNeg, ghz(3), 0, -1.0), DomainError);
    EXPECT_THROW(monogamy_score(kNeg, ghz(2), 0, 1.0), DomainError);
    EXPECT_THROW(monogamy_score(kNeg, ghz(3), 3, 1.0), DomainError);
    EXPECT_THROW(monogamy_score({MeasureTag::EoF, false}, white_noise_mix(w(3), 0.3), 0, 1.0), MeasureUndefined);
}

TEST(Sweep, GhzScoreDecreasesWithPower) {
    const double grid[] = {1.0, 2.0};
    const auto reps = power_sweep(kNeg, white_noise_mix(ghz(3), 0.2), 0, grid);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_LE(reps[1].score, reps[0].score);
    EXPECT_EQ(reps[1].exponent, 2.0);
}

TEST(Sweep, WLogNegativitySignChange) {
    const double grid[] = {1.0, 2.0};
    const auto reps = power_sweep(kLogNeg, w(3), 0, grid);
    EXPECT_LT(reps[0].score, 0.0);
    EXPECT_GT(reps[1].score, 0.0);
}

TEST(CriticalExponent, WLogNegativity) {
    const auto ce = critical_exponent(kLogNeg, w(3), 0, 1.0, 2.0, 1e-4);
    EXPECT_GE(ce.r_star, 1.05);
    EXPECT_LE(ce.r_star, 1.07);
    EXPECT_LE(ce.hi - ce.lo, 1e-4);
    EXPECT_LT(ce.score_lo, 0.0);
    EXPECT_GT(ce.score_hi, 0.0);
    const BaseValues base = base_values(kLogNeg, w(3), 0);
    EXPECT_LE(score_at(base, ce.r_star - 1e-4), 0.0);
    EXPECT_GE(score_at(base, ce.r_star + 1e-4), 0.0);
}

TEST(CriticalExponent, SyntheticClosedForm) {
    const BaseValues base{0.9, {0.8, 0.8}};
    const double exact = std::log(2.0) / std::log(0.9 / 0.8);
    const auto ce = critical_exponent(base, 1.0, 10.0, 1e-8);
    EXPECT_NEAR(ce.r_star, exact, 1e-8);
    EXPECT_FALSE(ce.trace.empty());
}

TEST(CriticalExponent, NoCrossing) {
    EXPECT_THROW(critical_exponent(kNeg, w(3), 0, 1.0, 1.5, 1e-4), NoBracketedCrossing);
    EXPECT_THROW(critical_exponent(kNeg, ghz(3), 0, 1.0, 2.0, 1e-4), NoBracketedCrossing);
    EXPECT_THROW(critical_exponent(kNeg, w(3), 0, 2.0, 1.0, 1e-4), DomainError);
}

TEST(Strong, CollapsesForTwoPartners) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto rep = strong_monogamy_report(kConc, haar_pure(DimSpec::qubits(3), seed), 0, 2.0);
        EXPECT_EQ(rep.n, 2u);
        EXPECT_EQ(rep.subset_average, rep.pair_sum);
        EXPECT_EQ(rep.masks, (std::vector<std::uint32_t>{1, 2}));
    }
}

TEST(Strong, Ghz4) {
    const auto rep = strong_monogamy_report(kConc, ghz(4), 0, 2.0);
    EXPECT_NEAR(rep.whole, 1.0, 1e-12);
    EXPECT_EQ(rep.pair_sum, 0.0);
    EXPECT_EQ(rep.masks.size(), 6u);
    EXPECT_GE(rep.whole, rep.subset_average - 1e-9);
    EXPECT_GE(rep.subset_average, rep.pair_sum);
}

TEST(Strong, RandomFourQubitChain) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto rep = strong_monogamy_report(kConc, haar_pure(DimSpec::qubits(4), seed), 0, 2.0);
        EXPECT_GE(rep.whole - rep.subset_average, -1e-9);
        EXPECT_GE(rep.subset_average - rep.pair_sum, -1e-9);
        EXPECT_GE(rep.pair_sum, -1e-12);
        double total = 0.0;
        for (double v : rep.subset_values) total += v;
        EXPECT_NEAR(rep.subset_average, total / 3.0, 1e-15);
    }
}

TEST(Strong, Errors) {
    EXPECT_THROW(strong_monogamy_report(kConc, ghz(2), 0, 2.0), DomainError);
    EXPECT_THROW(strong_monogamy_report(kConc, ghz(3), 0, 0.0), DomainError);
}

TEST(Hierarchy, ThreePartiesHasOneLevel) {
    const auto s = haar_pure(DimSpec::qubits(3), 4);
    const auto rep = hierarchy_chain(kConc, s, 0, 1, 2.0);
    ASSERT_EQ(rep.levels.size(), 1u);
    const auto mono = monogamy_score(kConc, s, 0, 2.0);
    EXPECT_NEAR(rep.levels[0], mono.parts[0] + mono.parts[1], 1e-15);
}

TEST(Hierarchy, Ghz4BelowWhole) {
    const auto rep = hierarchy_chain(kConc, ghz(4), 0, 1, 2.0);
    ASSERT_EQ(rep.levels.size(), 2u);
    for (double l : rep.levels) EXPECT_LE(l, rep.whole + 1e-9);
}

TEST(Hierarchy, RandomMonotone) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto rep = hierarchy_chain(kConc, haar_pure(DimSpec::qubits(4), seed), 0, 1, 2.0);
        for (std::size_t k = 0; k < rep.levels.size(); ++k) {
            EXPECT_LE(rep.levels[k], rep.whole + 1e-9);
            if (k + 1 < rep.levels.size()) {
                EXPECT_GE(rep.levels[k], rep.levels[k + 1] - 1e-9);
            }
        }
    }
}

TEST(Hierarchy, Errors) {
    EXPECT_THROW(hierarchy_chain(kConc, ghz(3), 0, 0, 2.0), DomainError);
    EXPECT_THROW(hierarchy_chain(kConc, ghz(2), 0, 1, 2.0), DomainError);
}

TEST(ShareSum, Cases) {
    EXPECT_EQ(share_sum(kConc, product3(), 0), 0.0);
    EXPECT_NEAR(share_sum(kConc, w(3), 0), 4.0 / 3, 1e-12);
    EXPECT_EQ(share_sum(kNeg, classical_corr_state(), 0), 0.0);
}

TEST(Raise, ZeroConvention) {
    EXPECT_EQ(raise(0.0, 0.3), 0.0);
    EXPECT_EQ(raise(0.25, 0.5), 0.5);
}

}  // namespace
}  // namespace monolab
