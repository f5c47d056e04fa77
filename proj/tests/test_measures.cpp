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

#include <algorithm>
#include <cmath>

#include "monolab/measures.hpp"

namespace monolab {
namespace {

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(d); }

const Cut kAB{{0}, {1}};
const Cut kABC{{0}, {1, 2}};

ComplexMatrix w_pair() {
    const Subsystems ab{0, 1};
    return w(3).reduced(ab).rho();
}

MultipartiteState two_qubit(const ComplexMatrix& rho) { return MultipartiteState(rho, DimSpec::qubits(2)); }

MultipartiteState product_pure(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<complex>> f;
    for (std::size_t k = 0; k < n; ++k) f.push_back(haar_ket(2, rng));
    return product_state(f);
}

double h(double x) { return binary_entropy(x); }

TEST(Concurrence, Cases) {
    EXPECT_NEAR(concurrence_two_qubit(ghz(2).rho()), 1.0, 1e-12);
    EXPECT_NEAR(concurrence_two_qubit(diag({1, 0, 0, 0})), 0.0, 1e-12);
    EXPECT_NEAR(concurrence_two_qubit(w_pair()), 2.0 / 3, 1e-12);
    EXPECT_NEAR(concurrence_two_qubit(ComplexMatrix::identity(4) * complex(0.25)), 0.0, 1e-12);
    EXPECT_THROW(concurrence_two_qubit(ComplexMatrix::identity(8)), DimensionError);
}

TEST(Concurrence, WernerClosedForm) {
    // p |Psi-><Psi-| + (1-p) I/4: C = max(0, (3p - 1)/2)
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<complex> ket{0.0, s, -s, 0.0};
    for (double p : {0.0, 0.2, 1.0 / 3, 0.5, 0.8, 1.0}) {
        const ComplexMatrix rho = ComplexMatrix::outer(ket) * complex(p) + ComplexMatrix::identity(4) * complex((1 - p) / 4);
        EXPECT_NEAR(concurrence_two_qubit(rho), std::max(0.0, (3 * p - 1) / 2), 1e-12) << p;
    }
}

TEST(Concurrence, PureCut) {
    EXPECT_NEAR(concurrence_pure_cut(ghz(3), kABC), 1.0, 1e-12);
    EXPECT_NEAR(concurrence_pure_cut(product_pure(3, 1), kABC), 0.0, 1e-7);
    EXPECT_NEAR(concurrence_pure_cut(w(3), kABC), 2 * std::sqrt(2.0) / 3, 1e-12);
    EXPECT_THROW(concurrence_pure_cut(white_noise_mix(ghz(3), 0.1), kABC), DomainError);
    EXPECT_THROW(concurrence_pure_cut(ghz(3), Cut{{0, 1}, {2}}), DomainError);
}

TEST(Concurrence, Rank2TangleMatchesWootters) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = random_mixed(DimSpec::qubits(2), 1 + seed % 2, seed);
        const double c = concurrence_two_qubit(s.rho());
        const Subsystems a{0};
        EXPECT_NEAR(rank2_tangle(s.rho(), s.dims(), a), c * c, 1e-10);
    }
}

TEST(Concurrence, Rank2TangleRejectsHighRank) {
    const auto s = random_mixed(DimSpec::qubits(3), 3, 4);
    const Subsystems a{0};
    EXPECT_THROW(rank2_tangle(s.rho(), s.dims(), a), MeasureUndefined);
}

TEST(Concurrence, MixedWideCutViaRank2) {
    // A:(BC) of a 4-qubit pure state restricted to ABC has rank <= 2.
    const auto s = haar_pure(DimSpec::qubits(4), 3);
    const Subsystems abc{0, 1, 2};
    const double c = evaluate({MeasureTag::Concurrence, false}, s.reduced(abc), kABC);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
    EXPECT_THROW(evaluate({MeasureTag::Concurrence, false}, random_mixed(DimSpec::qubits(3), 5, 1), kABC),
                 MeasureUndefined);
}

TEST(Negativity, Cases) {
    const auto c = classical_corr_state();
    for (const Cut& cut : {kABC, kAB, Cut{{1}, {0, 2}}, Cut{{2}, {0}}}) EXPECT_EQ(negativity(c, cut), 0.0);
    EXPECT_NEAR(negativity(ghz(3), kABC), 0.5, 1e-12);
    EXPECT_NEAR(negativity(ghz(3), kAB), 0.0, 1e-12);
    EXPECT_NEAR(negativity(ghz(2), kAB, true), 1.0, 1e-12);
}

TEST(LogNegativity, Cases) {
    EXPECT_NEAR(log_negativity(classical_corr_state(), kABC), 0.0, 1e-12);
    EXPECT_NEAR(log_negativity(ghz(3), kABC), 1.0, 1e-12);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto s = random_mixed(DimSpec::qubits(3), 1 + seed % 8, seed);
        for (const Cut& cut : {kAB, kABC}) {
            const double n = evaluate({MeasureTag::Negativity, false}, s, cut);
            const double ln = evaluate({MeasureTag::LogNegativity, false}, s, cut);
            EXPECT_EQ(n == 0.0, ln == 0.0);
            EXPECT_NEAR(ln, std::log2(2 * n + 1), 1e-12);
        }
    }
}

TEST(Eof, TwoQubit) {
    EXPECT_NEAR(eof_two_qubit(ghz(2).rho()), 1.0, 1e-12);
    EXPECT_EQ(eof_two_qubit(diag({0, 1, 0, 0})), 0.0);
    EXPECT_NEAR(eof_two_qubit(w_pair()), h((1 + std::sqrt(5.0) / 3) / 2), 1e-12);
    EXPECT_NEAR(eof_from_concurrence(1.0), 1.0, 1e-15);
    EXPECT_EQ(eof_from_concurrence(0.0), 0.0);
}

TEST(Eof, PureCut) {
    EXPECT_NEAR(eof_pure_cut(ghz(3), kABC), 1.0, 1e-12);
    EXPECT_NEAR(eof_pure_cut(product_pure(3, 2), kABC), 0.0, 1e-9);
    EXPECT_NEAR(eof_pure_cut(w(3), kABC), h(1.0 / 3), 1e-12);
    EXPECT_NEAR(eof_pure_cut(w(3), kABC), 0.9183, 1e-4);
    EXPECT_THROW(eof_pure_cut(white_noise_mix(w(3), 0.2), kABC), DomainError);
}

TEST(Eof, UndefinedOnMixedWideCut) {
    const auto s = white_noise_mix(w(3), 0.2);
    try {
        evaluate({MeasureTag::EoF, false}, s, kABC);
        FAIL() << "expected MeasureUndefined";
    } catch (const MeasureUndefined& e) {
        EXPECT_NE(std::string(e.what()).find("measure undefined on cut"), std::string::npos);
    }
}

TEST(Eof, LowerBoundIsBelowExact) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = two_qubit(random_mixed(DimSpec::qubits(2), 1 + seed % 4, seed).rho());
        EXPECT_LE(eof_lower_bound(s, kAB), eof_two_qubit(s.rho()) + 1e-12);
    }
}

TEST(ClassicalCorrelation, Cases) {
    const ComplexMatrix cc = diag({0.5, 0, 0, 0.5});
    EXPECT_NEAR(classical_correlation(cc, MeasuredSide::A), 1.0, 1e-4);
    EXPECT_NEAR(classical_correlation(cc, MeasuredSide::B), 1.0, 1e-4);
    const ComplexMatrix prod = kron(diag({0.3, 0.7}), ComplexMatrix(2, 2, {0.6, complex(0.1, 0.2), complex(0.1, -0.2), 0.4}));
    EXPECT_NEAR(classical_correlation(prod, MeasuredSide::A), 0.0, 1e-4);
    EXPECT_NEAR(classical_correlation(ghz(2).rho(), MeasuredSide::B), 1.0, 1e-4);
}

TEST(Discord, Cases) {
    EXPECT_NEAR(discord(diag({0.5, 0, 0, 0.5}), MeasuredSide::A), 0.0, 1e-4);
    EXPECT_NEAR(discord(ghz(2).rho(), MeasuredSide::A), 1.0, 1e-4);
    EXPECT_NEAR(discord(kron(diag({0.3, 0.7}), diag({0.9, 0.1})), MeasuredSide::B), 0.0, 1e-4);
    EXPECT_THROW(evaluate({MeasureTag::Discord, false}, ghz(3), kABC), MeasureUndefined);
}

TEST(Evaluate, Dispatch) {
    EXPECT_NEAR(evaluate({MeasureTag::Negativity, false}, ghz(3), kABC), 0.5, 1e-12);
    EXPECT_NEAR(evaluate({MeasureTag::Negativity, true}, ghz(3), kABC), 1.0, 1e-12);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto p = product_pure(3, seed);
        EXPECT_EQ(evaluate({MeasureTag::Concurrence, false}, p, kABC), 0.0);
        EXPECT_EQ(evaluate({MeasureTag::Concurrence, false}, p, Cut{{1}, {0, 2}}), 0.0);
    }
    EXPECT_EQ(evaluate({MeasureTag::EoF, false}, w(3), kAB), eof_two_qubit(w_pair()));
    EXPECT_EQ(parse_measure("logneg"), MeasureTag::LogNegativity);
    EXPECT_THROW(parse_measure("bogus"), DomainError);
}

TEST(Evaluate, ReportsTinyValuesAsZero) {
    EXPECT_EQ(evaluate({MeasureTag::Negativity, false}, white_noise_mix(ghz(3), 1.0), kABC), 0.0);
}

TEST(Invariants, PureTwoQubitConsistency) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto s = haar_pure(DimSpec::qubits(2), seed);
        EXPECT_NEAR(concurrence_pure_cut(s, kAB), concurrence_two_qubit(s.rho()), 1e-8);
        EXPECT_NEAR(eof_pure_cut(s, kAB), eof_two_qubit(s.rho()), 1e-8);
    }
}

TEST(Invariants, EofMonotoneInConcurrence) {
    std::vector<std::pair<double, double>> pts;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto rho = random_mixed(DimSpec::qubits(2), 1 + seed % 4, seed).rho();
        pts.emplace_back(concurrence_two_qubit(rho), eof_two_qubit(rho));
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GE(pts[i].second, pts[i - 1].second - 1e-12);
}

TEST(Invariants, NegativityConvex) {
    Rng rng(99);
    const Cut cuts[] = {kAB, kABC, Cut{{1}, {2}}};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = random_mixed(DimSpec::qubits(3), 1 + seed % 8, seed);
        const auto b = random_mixed(DimSpec::qubits(3), 1 + (seed + 3) % 8, seed + 1000);
        const double lam = rng.uniform();
        const MultipartiteState mix(a.rho() * complex(lam) + b.rho() * complex(1 - lam), a.dims());
        for (const Cut& cut : cuts) {
            EXPECT_LE(negativity(mix, cut), lam * negativity(a, cut) + (1 - lam) * negativity(b, cut) + 1e-9);
        }
    }
}

TEST(Invariants, Positivity) {
    const MeasureKind kinds[] = {{MeasureTag::Concurrence, false}, {MeasureTag::Negativity, false},
                                 {MeasureTag::LogNegativity, false}, {MeasureTag::EoF, false}};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = random_mixed(DimSpec::qubits(3), 1 + seed % 8, seed);
        for (const auto& k : kinds) EXPECT_GE(evaluate(k, s, kAB), -1e-9);
        const auto rho2 = s.reduced(Subsystems{0, 1}).rho();
        EXPECT_GE(discord(rho2, MeasuredSide::A), -1e-9);
        EXPECT_GE(classical_correlation(rho2, MeasuredSide::B), -1e-9);
    }
}

ComplexMatrix local_unitary(const DimSpec& dims, Rng& rng) {
    ComplexMatrix u = random_unitary(dims[0], rng);
    for (std::size_t k = 1; k < dims.size(); ++k) u = kron(u, random_unitary(dims[k], rng));
    return u;
}

TEST(Invariants, LocalUnitaryInvariance) {
    Rng rng(2024);
    const MeasureKind exact[] = {{MeasureTag::Concurrence, false}, {MeasureTag::Negativity, false},
                                 {MeasureTag::LogNegativity, false}, {MeasureTag::EoF, false}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_mixed(DimSpec::qubits(2), 1 + seed % 4, seed);
        const auto t = apply_unitary(s, local_unitary(s.dims(), rng));
        for (const auto& k : exact) EXPECT_NEAR(evaluate(k, s, kAB), evaluate(k, t, kAB), 1e-6);
        for (auto side : {MeasuredSide::A, MeasuredSide::B}) {
            EXPECT_NEAR(discord(s.rho(), side), discord(t.rho(), side), 1e-3);
            EXPECT_NEAR(classical_correlation(s.rho(), side), classical_correlation(t.rho(), side), 1e-3);
        }
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = haar_pure(DimSpec::qubits(3), seed);
        const auto t = apply_unitary(s, local_unitary(s.dims(), rng));
        for (const auto& k : exact) EXPECT_NEAR(evaluate(k, s, kABC), evaluate(k, t, kABC), 1e-6);
    }
}

}  // namespace
}  // namespace monolab
