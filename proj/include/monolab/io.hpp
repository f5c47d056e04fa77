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

// State files: {"dims": [...], "rho_re": [[...]], "rho_im": [[...]]},
// doubles written with round-trip precision.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "monolab/states.hpp"

namespace monolab {

using json = nlohmann::json;

inline json state_to_json(const MultipartiteState& state) {
    const auto& rho = state.rho();
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t j = 0; j < rho.cols(); ++j) {
            rrow.push_back(rho(i, j).real());
            irow.push_back(rho(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    json dims = json::array();
    for (auto d : state.dims().dims()) dims.push_back(d);
    return json{{"dims", dims}, {"rho_re", re}, {"rho_im", im}};
}

/// Parses and validates a state object.
inline MultipartiteState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("rho_re") || !j.contains("rho_im")) {
        throw DomainError("state JSON needs keys dims, rho_re, rho_im");
    }
    const DimSpec dims(j.at("dims").get<std::vector<std::size_t>>());
    const std::size_t d = dims.total();
    const auto& re = j.at("rho_re");
    const auto& im = j.at("rho_im");
    if (!re.is_array() || !im.is_array() || re.size() != d || im.size() != d) {
        throw DimensionError("state JSON: rho_re/rho_im must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (re[i].size() != d || im[i].size() != d) throw DimensionError("state JSON: ragged matrix row");
        for (std::size_t k = 0; k < d; ++k) rho(i, k) = {re[i][k].get<double>(), im[i][k].get<double>()};
    }
    return MultipartiteState(std::move(rho), dims);
}

inline MultipartiteState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open state file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DomainError("state file '" + path + "': " + e.what());
    }
    return state_from_json(j);
}

inline void save_state_file(const MultipartiteState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write state file '" + path + "'");
    out << state_to_json(state).dump(2) << '\n';
}

/// Full-precision decimal (17 significant digits).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace monolab
