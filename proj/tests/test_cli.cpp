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

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace monolab::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) rows.push_back(split(line, ','));
    return rows;
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "monolab_" + name; }

TEST(CliSweep, GhzNegativityGrid) {
    const auto r = run_cli({"sweep", "--measure", "negativity", "--state", "ghz3", "--p-grid", "0:1:0.1", "--r", "1,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 23u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"p", "r", "measure", "whole", "part_1", "part_2", "delta"}));
    EXPECT_EQ(rows[1][0], "0");
    EXPECT_EQ(rows[1][1], "1");
    EXPECT_NEAR(std::stod(rows[1][6]), 0.5, 1e-12);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double whole = std::stod(rows[i][3]), a = std::stod(rows[i][4]), b = std::stod(rows[i][5]);
        const double delta = std::stod(rows[i][6]);
        EXPECT_GE(whole, -1e-12);
        EXPECT_GE(a, -1e-12);
        EXPECT_GE(b, -1e-12);
        EXPECT_NEAR(delta, whole - a - b, 1e-12);
        EXPECT_GE(delta, -1e-9);
    }
}

TEST(CliSweep, SinglePoint) {
    const auto r = run_cli({"sweep", "--measure", "negativity", "--state", "ghz3", "--p-grid", "0", "--r", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(csv_rows(r.out).size(), 2u);
}

TEST(CliSweep, WLogNegativityNegative) {
    const auto r = run_cli({"sweep", "--measure", "lognegativity", "--state", "w3", "--p-grid", "0", "--r", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_LT(std::stod(csv_rows(r.out)[1][6]), 0.0);
}

TEST(CliSweep, FullPrecisionAndDeterministic) {
    const std::vector<std::string> args{"sweep", "--measure", "lognegativity", "--state", "w3", "--p-grid", "0,0.3", "--r", "1,1.5"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("0.95814410"), std::string::npos);
    const auto j = run_cli({"sweep", "--measure", "negativity", "--state", "ghz3", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    const json parsed = json::parse(j.out);
    EXPECT_EQ(parsed["provenance"]["seed"], 1);
    EXPECT_NEAR(parsed["rows"][0]["delta"].get<double>(), 0.5, 1e-12);
}

TEST(CliSweep, ExitCodes) {
    EXPECT_EQ(run_cli({"sweep", "--measure", "eof", "--state", "w3", "--p-grid", "0.2"}).code, 3);
    EXPECT_EQ(run_cli({"sweep", "--measure", "nope", "--state", "w3"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--measure", "negativity"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--measure", "negativity", "--state", "w3", "--p-grid", "0.5,0.1"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--measure", "negativity", "--state", "w3", "--p-grid", "1.5"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--bogus"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliRstar, WLogNegativity) {
    const auto r = run_cli({"rstar", "--measure", "lognegativity", "--state", "w3", "--bracket", "1,2", "--tol", "1e-4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows[0][0], "r_star");
    const double rs = std::stod(rows[0][1]);
    EXPECT_GE(rs, 1.05);
    EXPECT_LE(rs, 1.07);
    const auto j = run_cli({"rstar", "--measure", "lognegativity", "--state", "w3", "--bracket", "1,2", "--format", "json"});
    const json parsed = json::parse(j.out);
    EXPECT_FALSE(parsed["trace"].empty());
    EXPECT_LT(parsed["delta_lo"].get<double>(), 0.0);
}

TEST(CliRstar, NoCrossingExit4) {
    EXPECT_EQ(run_cli({"rstar", "--measure", "negativity", "--state", "ghz3", "--bracket", "1,2"}).code, 4);
    EXPECT_EQ(run_cli({"rstar", "--measure", "negativity", "--state", "ghz3"}).code, 2);
}

TEST(CliRstar, SyntheticStateFile) {
    // W-class state with unequal weights; r* must bracket the sign change of delta
    const std::string path = tmp("wclass.json");
    const double amp[] = {0.5, 0.5, std::sqrt(0.5)};
    std::vector<complex> ket(8);
    ket[1] = amp[0];
    ket[2] = amp[1];
    ket[4] = amp[2];
    save_state_file(MultipartiteState::from_ket(ket, DimSpec::qubits(3)), path);
    const auto r = run_cli({"rstar", "--measure", "lognegativity", "--state-file", path, "--bracket", "1,3", "--tol", "1e-6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double got = std::stod(csv_rows(r.out)[0][1]);
    const auto base = base_values({MeasureTag::LogNegativity, false}, load_state_file(path), 0);
    EXPECT_LE(score_at(base, got - 1e-6), 0.0);
    EXPECT_GE(score_at(base, got + 1e-6), 0.0);
}

TEST(CliVerify, Lemmas) {
    const auto r = run_cli({"verify", "lemmas", "--samples", "100000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["counts"]["violations"], 0);
    EXPECT_EQ(j["provenance"]["config"]["tag"], "lemmas");
}

TEST(CliVerify, Strong) {
    const auto r = run_cli({"verify", "strong", "--state", "random-pure", "--dims", "2,2,2,2", "--measure",
                            "concurrence", "--alpha", "2", "--count", "200"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliVerify, RaisingSkipsNonMonogamousSeed) {
    const auto r = run_cli({"verify", "raising", "--measure", "lognegativity", "--state", "w3", "--r", "1", "--alpha", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["counts"]["skipped"], 1);
    EXPECT_EQ(j["counts"]["checked"], 0);
}

TEST(CliVerify, WritesFileAndIsByteIdentical) {
    const std::string a = tmp("verify_a.json"), b = tmp("verify_b.json");
    const std::vector<std::string> base{"verify", "mixed", "--measure", "negativity", "--count", "30", "--seed", "4"};
    auto args = base;
    args.insert(args.end(), {"--out", a});
    ASSERT_EQ(run_cli(args).code, 0);
    args = base;
    args.insert(args.end(), {"--out", b});
    ASSERT_EQ(run_cli(args).code, 0);
    const std::string ta = slurp(a), tb = slurp(b);
    EXPECT_FALSE(ta.empty());
    // the echoed --out differs; everything else matches
    EXPECT_EQ(json::parse(ta)["details"], json::parse(tb)["details"]);
    EXPECT_EQ(json::parse(ta)["worst_margin"], json::parse(tb)["worst_margin"]);
}

TEST(CliVerify, SearchAndProbeExitZero) {
    EXPECT_EQ(run_cli({"verify", "search", "--measure", "lognegativity", "--r", "1", "--restarts", "2", "--max-steps",
                       "300"})
                  .code,
              0);
    EXPECT_EQ(run_cli({"verify", "probe-high-power", "--r-grid", "2,3", "--count", "10"}).code, 0);
}

TEST(CliVerify, UsageErrors) {
    EXPECT_EQ(run_cli({"verify", "bogus-tag"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "raising", "--measure", "concurrence", "--r", "2", "--alpha", "1"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "lemmas", "--samples", "0"}).code, 2);
}

TEST(CliFigure, FigureOneAndSidecar) {
    const std::string path = tmp("fig1.csv");
    const auto r = run_cli({"figure", "1", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(slurp(path));
    ASSERT_EQ(rows.size(), 1u + 51 * 2 * 2);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(std::stod(rows[i][6]), -1e-9) << i;
    const json meta = json::parse(slurp(sidecar_path(path)));
    EXPECT_EQ(meta["negativity_normalized"], false);
    EXPECT_EQ(meta["lognegativity_base"], 2);
    EXPECT_EQ(meta["p_grid"]["values"].size(), 51u);
}

TEST(CliFigure, FigureTwoMaximallyMixedEnd) {
    const std::string path = tmp("fig2.csv");
    ASSERT_EQ(run_cli({"figure", "2", "--out", path}).code, 0);
    for (const auto& row : csv_rows(slurp(path))) {
        if (row[0] == "1") {
            EXPECT_EQ(std::stod(row[6]), 0.0);
        }
    }
}

TEST(CliFigure, FigureThreeCrossing) {
    const std::string path = tmp("fig3.csv");
    ASSERT_EQ(run_cli({"figure", "3", "--out", path}).code, 0);
    const auto rows = csv_rows(slurp(path));
    ASSERT_EQ(rows.size(), 102u);
    double last_negative = 0.0, first_positive = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double r = std::stod(rows[i][1]), d = std::stod(rows[i][6]);
        if (d < 0) last_negative = r;
        else if (first_positive == 0.0) first_positive = r;
    }
    EXPECT_GE(last_negative, 1.05);
    EXPECT_LE(first_positive, 1.07);
    EXPECT_LT(last_negative, first_positive);
}

TEST(CliFigure, Deterministic) {
    const std::string a = tmp("fig3a.csv"), b = tmp("fig3b.csv");
    ASSERT_EQ(run_cli({"figure", "3", "--out", a}).code, 0);
    ASSERT_EQ(run_cli({"figure", "3", "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(CliFigure, UnknownId) { EXPECT_EQ(run_cli({"figure", "4"}).code, 2); }

TEST(CliStateExport, RoundTrip) {
    const std::string path = tmp("exported.json");
    ASSERT_EQ(run_cli({"state-export", "--state", "random-mixed", "--dims", "2,3", "--rank", "2", "--seed", "9",
                       "--out", path})
                  .code,
              0);
    const auto s = load_state_file(path);
    EXPECT_EQ(s.rho(), random_mixed(DimSpec({2, 3}), 2, 9).rho());
    const auto g = run_cli({"state-export", "--state", "ghz3", "--noise", "0.5"});
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(state_from_json(json::parse(g.out)).rho(), white_noise_mix(ghz(3), 0.5).rho());
    EXPECT_EQ(run_cli({"state-export", "--state", "nope"}).code, 2);
}

TEST(CliGrid, Parsing) {
    EXPECT_EQ(parse_grid("0:1:0.25", "x"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
    EXPECT_EQ(parse_grid("0:1:0.02", "x").size(), 51u);
    EXPECT_EQ(parse_grid("1:1.2:0.002", "x").size(), 101u);
    EXPECT_EQ(parse_grid("0:1:0.1", "x")[3], 0.3);
    EXPECT_THROW(parse_grid("", "x"), ConfigError);
    EXPECT_THROW(parse_grid("1,a", "x"), ConfigError);
    EXPECT_THROW(parse_grid("0:1", "x"), ConfigError);
    EXPECT_THROW(parse_grid("1,1", "x"), ConfigError);
}

}  // namespace
}  // namespace monolab::cli
