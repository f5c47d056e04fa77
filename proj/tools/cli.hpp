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

// monolab command line: sweep | rstar | verify | figure | state-export.
//
// Exit codes: 0 ok, 1 other error, 2 usage/config error, 3 measure undefined
// on a cut, 4 no bracketed crossing, 5 verification violation.

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monolab/io.hpp"
#include "monolab/monogamy.hpp"
#include "monolab/parallel.hpp"
#include "monolab/verifier.hpp"

#ifndef MONOLAB_VERSION
#define MONOLAB_VERSION "0.0.0"
#endif

namespace monolab::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kUndefined = 3,
    kNoCrossing = 4,
    kViolation = 5,
};

/// Bad flag values detected after CLI11 parsing.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string measure;
    bool normalized = false;
    std::string state;
    std::string state_file;
    std::string dims = "2,2,2";
    std::size_t focus = 0;
    std::string r;
    std::string r_grid;
    std::string p_grid;
    std::string bracket;
    double tol = 1e-4;
    std::string alpha;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t rank = 0;
    std::size_t samples = 1000000;
    std::size_t restarts = 8;
    std::size_t max_steps = 200000;
    double noise = 0.0;
    std::string out;
    std::string format = "csv";
    std::string tag;  // verify
    int figure = 0;

    json echo() const {
        json j{{"command", command}, {"seed", seed}, {"format", format}};
        auto put = [&](const char* key, const std::string& v) {
            if (!v.empty()) j[key] = v;
        };
        put("measure", measure);
        put("state", state);
        put("state_file", state_file);
        put("r", r);
        put("r_grid", r_grid);
        put("p_grid", p_grid);
        put("bracket", bracket);
        put("alpha", alpha);
        put("tag", tag);
        if (!measure.empty()) j["normalized"] = normalized;
        j["focus"] = focus;
        return j;
    }
};

// ---- flag value parsing ---------------------------------------------------

inline double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw ConfigError("not a number: '" + s + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

/// "a,b,c" or "start:stop:step"; result must be nonempty and ascending.
inline std::vector<double> parse_grid(const std::string& text, const char* what) {
    std::vector<double> g;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ConfigError(std::string(what) + ": range must be start:stop:step");
        const double start = parse_number(parts[0]), stop = parse_number(parts[1]), step = parse_number(parts[2]);
        if (!(step > 0.0) || stop < start) throw ConfigError(std::string(what) + ": need step > 0 and stop >= start");
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t k = 0; k < n; ++k) g.push_back(std::round((start + k * step) * 1e12) / 1e12);
    } else {
        for (const auto& item : split(text, ',')) g.push_back(parse_number(item));
    }
    if (g.empty()) throw ConfigError(std::string(what) + ": empty grid");
    if (!std::is_sorted(g.begin(), g.end()) || std::adjacent_find(g.begin(), g.end()) != g.end()) {
        throw ConfigError(std::string(what) + ": grid must be strictly ascending");
    }
    return g;
}

inline std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> v;
    for (const auto& item : split(text, ',')) v.push_back(parse_number(item));
    if (v.empty()) throw ConfigError(std::string(what) + ": empty list");
    return v;
}

inline DimSpec parse_dims(const std::string& text) {
    std::vector<std::size_t> d;
    for (const auto& item : split(text, ',')) {
        const double v = parse_number(item);
        if (v < 2 || v != std::floor(v)) throw ConfigError("--dims: entries must be integers >= 2");
        d.push_back(static_cast<std::size_t>(v));
    }
    try {
        return DimSpec(d);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("--dims: ") + e.what());
    }
}

inline MeasureKind measure_of(const RunConfig& cfg) {
    if (cfg.measure.empty()) throw ConfigError("--measure is required");
    try {
        return {parse_measure(cfg.measure), cfg.normalized};
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

/// The one state named by --state or --state-file.
inline MultipartiteState single_state(const RunConfig& cfg) {
    if (cfg.state.empty() == cfg.state_file.empty()) {
        throw ConfigError("exactly one of --state, --state-file is required");
    }
    if (!cfg.state_file.empty()) return load_state_file(cfg.state_file);
    try {
        return named_state(cfg.state);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

inline std::vector<double> exponent_grid(const RunConfig& cfg, std::vector<double> fallback) {
    if (!cfg.r.empty() && !cfg.r_grid.empty()) throw ConfigError("give --r or --r-grid, not both");
    if (!cfg.r.empty()) return parse_grid(cfg.r, "--r");
    if (!cfg.r_grid.empty()) return parse_grid(cfg.r_grid, "--r-grid");
    return fallback;
}

inline double single_value(const std::string& text, const char* what, double fallback) {
    if (text.empty()) return fallback;
    const auto v = parse_list(text, what);
    if (v.size() != 1) throw ConfigError(std::string(what) + ": expected a single value");
    return v[0];
}

inline json provenance(const RunConfig& cfg) {
    return {{"tool", "monolab"}, {"version", MONOLAB_VERSION}, {"seed", cfg.seed}, {"config", cfg.echo()}};
}

/// Writes to --out when set, else to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + cfg.out + "'");
    f << text;
}

// ---- sweep ----------------------------------------------------------------

struct SweepRow {
    double p;
    double r;
    double whole;
    std::vector<double> parts;
    double delta;
};

inline std::vector<SweepRow> sweep_rows(const MeasureKind& kind, const MultipartiteState& base, std::size_t focus,
                                        const std::vector<double>& p_grid, const std::vector<double>& r_grid) {
    for (double p : p_grid)
        if (p < 0.0 || p > 1.0) throw ConfigError("--p-grid: values must lie in [0, 1]");
    for (double r : r_grid)
        if (!(r > 0.0)) throw ConfigError("exponents must be positive");
    const auto per_p = parallel_map(p_grid.size(), [&](std::size_t i) {
        return power_sweep(kind, white_noise_mix(base, p_grid[i]), focus, r_grid);
    });
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < p_grid.size(); ++i)
        for (const auto& rep : per_p[i]) rows.push_back({p_grid[i], rep.exponent, rep.whole, rep.parts, rep.score});
    return rows;
}

inline std::string rows_csv(const std::vector<SweepRow>& rows, std::string_view measure_name) {
    std::string s = "p,r,measure,whole";
    const std::size_t n = rows.empty() ? 0 : rows.front().parts.size();
    for (std::size_t j = 1; j <= n; ++j) s += ",part_" + std::to_string(j);
    s += ",delta\n";
    for (const auto& row : rows) {
        s += format_double(row.p) + "," + format_double(row.r) + "," + std::string(measure_name) + "," +
             format_double(row.whole);
        for (double q : row.parts) s += "," + format_double(q);
        s += "," + format_double(row.delta) + "\n";
    }
    return s;
}

inline json rows_json(const std::vector<SweepRow>& rows, std::string_view measure_name) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back({{"p", row.p},
                       {"r", row.r},
                       {"measure", measure_name},
                       {"whole", row.whole},
                       {"parts", row.parts},
                       {"delta", row.delta}});
    }
    return arr;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const MeasureKind kind = measure_of(cfg);
    const MultipartiteState state = single_state(cfg);
    const auto p_grid = cfg.p_grid.empty() ? std::vector<double>{0.0} : parse_grid(cfg.p_grid, "--p-grid");
    const auto r_grid = exponent_grid(cfg, {1.0});
    const auto rows = sweep_rows(kind, state, cfg.focus, p_grid, r_grid);
    const auto name = to_string(kind.tag);
    if (cfg.format == "json") {
        emit(cfg, out, json{{"provenance", provenance(cfg)}, {"rows", rows_json(rows, name)}}.dump(2) + "\n");
    } else {
        emit(cfg, out, rows_csv(rows, name));
    }
    return kOk;
}

// ---- rstar ----------------------------------------------------------------

inline int cmd_rstar(const RunConfig& cfg, std::ostream& out) {
    const MeasureKind kind = measure_of(cfg);
    const MultipartiteState state = single_state(cfg);
    if (cfg.bracket.empty()) throw ConfigError("--bracket lo,hi is required");
    const auto br = parse_list(cfg.bracket, "--bracket");
    if (br.size() != 2) throw ConfigError("--bracket: expected lo,hi");
    CriticalExponent ce;
    try {
        ce = critical_exponent(kind, state, cfg.focus, br[0], br[1], cfg.tol);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (cfg.format == "json") {
        json trace = json::array();
        for (const auto& st : ce.trace) trace.push_back({{"r", st.r}, {"delta", st.score}});
        json j{{"provenance", provenance(cfg)},
               {"r_star", ce.r_star},
               {"interval", {ce.lo, ce.hi}},
               {"bracket", br},
               {"delta_lo", ce.score_lo},
               {"delta_hi", ce.score_hi},
               {"tol", cfg.tol},
               {"trace", trace}};
        emit(cfg, out, j.dump(2) + "\n");
    } else {
        emit(cfg, out,
             "r_star," + format_double(ce.r_star) + "\nr_lo," + format_double(br[0]) + "\ndelta_lo," +
                 format_double(ce.score_lo) + "\nr_hi," + format_double(br[1]) + "\ndelta_hi," +
                 format_double(ce.score_hi) + "\n");
    }
    return kOk;
}

// ---- verify ---------------------------------------------------------------

inline EnsembleSpec ensemble_of(const RunConfig& cfg, EnsembleSpec fallback) {
    if (!cfg.state.empty() && !cfg.state_file.empty()) throw ConfigError("give --state or --state-file, not both");
    if (!cfg.state_file.empty()) return EnsembleSpec::explicit_states({load_state_file(cfg.state_file)}, cfg.state_file);
    if (cfg.state.empty()) {
        fallback.count = cfg.count;
        if (cfg.rank) fallback.rank = cfg.rank;
        return fallback;
    }
    if (cfg.state == "random-pure") return EnsembleSpec::haar_pure(parse_dims(cfg.dims), cfg.count);
    if (cfg.state == "random-mixed") {
        const DimSpec d = parse_dims(cfg.dims);
        if (cfg.rank > d.total()) throw ConfigError("--rank exceeds the total dimension");
        return EnsembleSpec::random_mixed(d, cfg.count, cfg.rank);
    }
    try {
        named_state(cfg.state);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return EnsembleSpec::named(cfg.state, cfg.p_grid.empty() ? std::vector<double>{}
                                                             : parse_grid(cfg.p_grid, "--p-grid"));
}

inline VerificationSummary run_verify(const RunConfig& cfg) {
    const std::string& tag = cfg.tag;
    const EnsembleSpec pure3 = EnsembleSpec::haar_pure(DimSpec::qubits(3), cfg.count);
    const EnsembleSpec mixed3 = EnsembleSpec::random_mixed(DimSpec::qubits(3), cfg.count);
    const EnsembleSpec pure4 = EnsembleSpec::haar_pure(DimSpec::qubits(4), cfg.count);
    try {
        if (tag == "lemmas") {
            if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");
            return check_scalar_lemmas(cfg.samples, cfg.seed);
        }
        if (tag == "raising") {
            const double r = single_value(cfg.r, "--r", 2.0);
            const auto alphas = cfg.alpha.empty() ? std::vector<double>{r + 1.0} : parse_list(cfg.alpha, "--alpha");
            return verify_raising(measure_of(cfg), ensemble_of(cfg, pure3), r, alphas, cfg.seed);
        }
        if (tag == "lowering") {
            const double r = single_value(cfg.r, "--r", 1.0);
            const auto alphas = cfg.alpha.empty() ? std::vector<double>{r / 2} : parse_list(cfg.alpha, "--alpha");
            return verify_lowering(measure_of(cfg), ensemble_of(cfg, pure3), r, alphas, cfg.seed);
        }
        if (tag == "functional") {
            return verify_functional_lift(ensemble_of(cfg, pure3), single_value(cfg.alpha, "--alpha", 2.0),
                                          cfg.seed);
        }
        if (tag == "mixed") {
            const MeasureKind kind =
                cfg.measure.empty() ? MeasureKind{MeasureTag::Negativity, true} : measure_of(cfg);
            return verify_mixed_lifting(kind, single_value(cfg.r, "--r", 2.0), ensemble_of(cfg, mixed3),
                                        cfg.seed);
        }
        if (tag == "strong") {
            return verify_strong(measure_of(cfg), ensemble_of(cfg, pure4), single_value(cfg.alpha, "--alpha", 2.0),
                                 cfg.seed);
        }
        if (tag == "hierarchy") {
            return verify_hierarchy(measure_of(cfg), ensemble_of(cfg, pure4),
                                    single_value(cfg.alpha, "--alpha", 2.0), cfg.seed);
        }
        if (tag == "probe-high-power") {
            return probe_high_power_mixed(exponent_grid(cfg, {3.0}), ensemble_of(cfg, mixed3), cfg.seed);
        }
        if (tag == "search") {
            SearchOptions opt;
            opt.max_steps = cfg.max_steps;
            auto res = counterexample_search(measure_of(cfg), single_value(cfg.r, "--r", 1.0),
                                             parse_dims(cfg.dims), cfg.restarts, cfg.seed, opt);
            json ends = json::array();
            for (const auto& e : res.endpoints) ends.push_back(e.score);
            res.summary.details["endpoint_scores"] = ends;
            return res.summary;
        }
    } catch (const DimensionError& e) {
        throw ConfigError(e.what());
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown verify tag '" + tag + "'");
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const VerificationSummary s = run_verify(cfg);
    json j = s.to_json();
    j["provenance"] = provenance(cfg);
    emit(cfg, out, j.dump(2) + "\n");
    return s.ok() ? kOk : kViolation;
}

// ---- figure ---------------------------------------------------------------

inline std::string sidecar_path(const std::string& csv) {
    const auto dot = csv.rfind('.');
    const auto slash = csv.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? csv.substr(0, dot) : csv) + ".meta.json";
}

inline int cmd_figure(RunConfig cfg, std::ostream& out) {
    if (cfg.figure < 1 || cfg.figure > 3) throw ConfigError("figure id must be 1, 2 or 3");
    if (cfg.out.empty()) cfg.out = "figure" + std::to_string(cfg.figure) + ".csv";
    const std::string state_name = cfg.figure == 1 ? "ghz3" : "w3";
    const MultipartiteState state = named_state(state_name);

    std::vector<double> p_grid, r_grid;
    std::vector<MeasureTag> measures;
    std::string p_desc = "0:1:0.02", r_desc = "1,2";
    if (cfg.figure == 3) {
        p_desc = "0";
        r_desc = "1:1.2:0.002";
        measures = {MeasureTag::LogNegativity};
    } else {
        measures = {MeasureTag::Negativity, MeasureTag::LogNegativity};
    }
    if (!cfg.p_grid.empty()) p_desc = cfg.p_grid;
    if (!cfg.r.empty() || !cfg.r_grid.empty()) r_desc = cfg.r.empty() ? cfg.r_grid : cfg.r;
    p_grid = parse_grid(p_desc, "--p-grid");
    r_grid = exponent_grid(cfg, parse_grid(r_desc, "--r-grid"));

    std::vector<SweepRow> all;
    std::vector<std::string> names;
    for (auto tag : measures) {
        auto rows = sweep_rows({tag, false}, state, 0, p_grid, r_grid);
        for (auto& row : rows) {
            all.push_back(std::move(row));
            names.emplace_back(to_string(tag));
        }
    }
    std::string csv = "p,r,measure,whole,part_1,part_2,delta\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& row = all[i];
        csv += format_double(row.p) + "," + format_double(row.r) + "," + names[i] + "," + format_double(row.whole);
        for (double q : row.parts) csv += "," + format_double(q);
        csv += "," + format_double(row.delta) + "\n";
    }
    emit(cfg, out, csv);

    json meas = json::array();
    for (auto tag : measures) meas.push_back(to_string(tag));
    const json meta{{"figure", cfg.figure},
                    {"csv", cfg.out},
                    {"state", state_name},
                    {"focus", 0},
                    {"measures", meas},
                    {"negativity_normalized", false},
                    {"negativity_convention", "sum of |negative eigenvalues| of the partial transpose"},
                    {"lognegativity_base", 2},
                    {"noise", "rho(p) = (1 - p) rho + p I / d"},
                    {"p_grid", {{"spec", p_desc}, {"values", p_grid}}},
                    {"r_grid", {{"spec", r_desc}, {"values", r_grid}}},
                    {"rows", all.size()},
                    {"provenance", provenance(cfg)}};
    std::ofstream f(sidecar_path(cfg.out), std::ios::binary);
    if (!f) throw DomainError("cannot write '" + sidecar_path(cfg.out) + "'");
    f << meta.dump(2) << '\n';
    out << "wrote " << cfg.out << " (" << all.size() << " rows) and " << sidecar_path(cfg.out) << "\n";
    return kOk;
}

// ---- state-export ---------------------------------------------------------

inline int cmd_state_export(const RunConfig& cfg, std::ostream& out) {
    if (cfg.state.empty()) throw ConfigError("--state is required");
    if (cfg.noise < 0.0 || cfg.noise > 1.0) throw ConfigError("--noise must lie in [0, 1]");
    MultipartiteState s;
    if (cfg.state == "random-pure") {
        s = haar_pure(parse_dims(cfg.dims), cfg.seed);
    } else if (cfg.state == "random-mixed") {
        const DimSpec d = parse_dims(cfg.dims);
        const std::size_t rank = cfg.rank ? cfg.rank : d.total();
        if (rank > d.total()) throw ConfigError("--rank exceeds the total dimension");
        s = random_mixed(d, rank, cfg.seed);
    } else {
        try {
            s = named_state(cfg.state);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }
    if (cfg.noise > 0.0) s = white_noise_mix(s, cfg.noise);
    emit(cfg, out, state_to_json(s).dump(2) + "\n");
    return kOk;
}

// ---- entry point ----------------------------------------------------------

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monolab: monogamy of quantum correlations under powers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", MONOLAB_VERSION);
    RunConfig cfg;

    auto add_measure = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--measure", cfg.measure,
                                    "concurrence | negativity | lognegativity | eof | discord | classical");
        if (required) opt->required();
        sub->add_flag("--normalized", cfg.normalized, "use the [0,1]-normalized measure (negativity x2)");
    };
    auto add_state = [&](CLI::App* sub) {
        sub->add_option("--state", cfg.state, "ghz<N> | w<N> | product<N> | classical");
        sub->add_option("--state-file", cfg.state_file, "JSON state file");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output path (default: stdout)");
        sub->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* sweep = app.add_subcommand("sweep", "monogamy score over noise and exponent grids");
    add_measure(sweep, true);
    add_state(sweep);
    add_out(sweep);
    sweep->add_option("--focus", cfg.focus, "focus subsystem");
    sweep->add_option("--r", cfg.r, "exponents, a,b,c or start:stop:step");
    sweep->add_option("--r-grid", cfg.r_grid, "exponent grid, a,b,c or start:stop:step");
    sweep->add_option("--p-grid", cfg.p_grid, "white-noise grid, a,b,c or start:stop:step");

    auto* rstar = app.add_subcommand("rstar", "critical exponent by bisection");
    add_measure(rstar, true);
    add_state(rstar);
    add_out(rstar);
    rstar->add_option("--focus", cfg.focus, "focus subsystem");
    rstar->add_option("--bracket", cfg.bracket, "lo,hi")->required();
    rstar->add_option("--tol", cfg.tol, "bracket width at which bisection stops");

    auto* verify = app.add_subcommand("verify", "sampling-based theorem checks");
    verify->add_option("tag", cfg.tag,
                       "lemmas | raising | lowering | functional | mixed | strong | hierarchy | "
                       "probe-high-power | search")
        ->required();
    add_measure(verify, false);
    verify->add_option("--state", cfg.state, "ghz<N> | w<N> | product<N> | classical | random-pure | random-mixed");
    verify->add_option("--state-file", cfg.state_file, "JSON state file");
    verify->add_option("--dims", cfg.dims, "local dimensions, e.g. 2,2,2");
    verify->add_option("--count", cfg.count, "ensemble size");
    verify->add_option("--rank", cfg.rank, "random-mixed rank (0 cycles 1..d)");
    verify->add_option("--r", cfg.r, "base exponent");
    verify->add_option("--r-grid", cfg.r_grid, "exponents (probe-high-power)");
    verify->add_option("--p-grid", cfg.p_grid, "white-noise grid for named states");
    verify->add_option("--alpha", cfg.alpha, "target exponent(s)");
    verify->add_option("--seed", cfg.seed, "base seed; sample i uses seed + i");
    verify->add_option("--samples", cfg.samples, "draws per lemma");
    verify->add_option("--restarts", cfg.restarts, "search restarts");
    verify->add_option("--max-steps", cfg.max_steps, "search steps per restart");
    verify->add_option("--out", cfg.out, "output path (default: stdout)");

    auto* figure = app.add_subcommand("figure", "figure data: 1 GHZ noise, 2 W noise, 3 W exponent scan");
    figure->add_option("id", cfg.figure, "1 | 2 | 3")->required();
    figure->add_option("--out", cfg.out, "CSV path (default figure<id>.csv)");
    figure->add_option("--p-grid", cfg.p_grid, "override noise grid");
    figure->add_option("--r", cfg.r, "override exponents");
    figure->add_option("--r-grid", cfg.r_grid, "override exponent grid");

    auto* exporter = app.add_subcommand("state-export", "write a state as JSON");
    exporter->add_option("--state", cfg.state, "ghz<N> | w<N> | product<N> | classical | random-pure | random-mixed")
        ->required();
    exporter->add_option("--dims", cfg.dims, "local dimensions for random states");
    exporter->add_option("--rank", cfg.rank, "random-mixed rank (default full)");
    exporter->add_option("--seed", cfg.seed, "random seed");
    exporter->add_option("--noise", cfg.noise, "white-noise weight p");
    exporter->add_option("--out", cfg.out, "output path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (rstar->parsed()) return cmd_rstar(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (figure->parsed()) return cmd_figure(cfg, out);
        if (exporter->parsed()) return cmd_state_export(cfg, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MeasureUndefined& e) {
        err << "error: " << e.what() << "\n";
        return kUndefined;
    } catch (const NoBracketedCrossing& e) {
        err << "error: " << e.what() << "\n";
        return kNoCrossing;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace monolab::cli
