// Copyright 2026 The rucbound developers
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

#include "scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rucb::cli {

namespace {

using nlohmann::json;

// byte offset -> "line L, column C" for parse diagnostics
std::string locate(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("parse error at " + locate(text, e.byte) + ": " + e.what());
  }
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + k + "'");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<size_t>(dim)) {
    throw ParseError(where + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " matrix");
  }
  std::vector<cplx> e;
  e.reserve(static_cast<size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<size_t>(dim)) {
      throw ParseError(where + ": row " + std::to_string(i) + " has the wrong length");
    }
    for (int k = 0; k < dim; ++k) {
      e.push_back(parse_complex(row[static_cast<size_t>(k)],
                                where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
  }
  return ComplexMatrix(dim, std::span<const cplx>(e));
}

std::vector<std::string> parse_labels(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of labels");
  std::vector<std::string> out;
  for (const json& l : j) {
    if (!l.is_string()) throw ParseError(where + ": labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

ChannelMeasurement parse_measurement(const json& j, const std::string& where) {
  require_keys(j, {"input", "povm"}, where);
  QubitState input(parse_matrix(j["input"], 2, where + ".input"));
  if (!j["povm"].is_array() || j["povm"].empty()) {
    throw ParseError(where + ".povm: expected a non-empty list of effects");
  }
  std::vector<ComplexMatrix> effects;
  std::vector<std::string> labels;
  size_t i = 0;
  for (const json& item : j["povm"]) {
    const std::string at = where + ".povm[" + std::to_string(i++) + "]";
    require_keys(item, {"label", "effect"}, at);
    if (!item["label"].is_string()) throw ParseError(at + ".label: must be a string");
    labels.push_back(item["label"].get<std::string>());
    effects.push_back(parse_matrix(item["effect"], 2, at + ".effect"));
  }
  return ChannelMeasurement(std::move(input), Povm(std::move(effects), std::move(labels)));
}

void check_version(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>() != "1") {
    throw ParseError(where + ": unsupported schema version (expected \"1\")");
  }
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json complex_to_json(const cplx& c) {
  return json::array({json::parse(fmt17(c.real())), json::parse(fmt17(c.imag()))});
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json measurement_to_json(const ChannelMeasurement& meas) {
  json povm = json::array();
  for (size_t i = 0; i < meas.povm().size(); ++i) {
    povm.push_back({{"label", meas.povm().labels()[i]},
                    {"effect", matrix_to_json(meas.povm().effect_at(i))}});
  }
  return {{"input", matrix_to_json(meas.input().matrix())}, {"povm", povm}};
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"version", "r", "meas1", "meas2", "subsetM", "subsetN"}, "scenario");
  check_version(j["version"], "scenario.version");
  if (!j["r"].is_number()) throw ParseError("scenario.r: must be a number");
  return Scenario(parse_measurement(j["meas1"], "scenario.meas1"),
                  parse_measurement(j["meas2"], "scenario.meas2"), j["r"].get<double>(),
                  parse_labels(j["subsetM"], "scenario.subsetM"),
                  parse_labels(j["subsetN"], "scenario.subsetN"));
}

Scenario load_scenario(const std::string& path) {
  return parse_scenario(read_file(path));
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["version"] = "1";
  j["r"] = json::parse(fmt17(s.r()));
  j["meas1"] = measurement_to_json(s.meas1());
  j["meas2"] = measurement_to_json(s.meas2());
  j["subsetM"] = s.subset_m();
  j["subsetN"] = s.subset_n();
  return j.dump(2) + "\n";
}

ComplexMatrix parse_state(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"version", "state"}, "state");
  check_version(j["version"], "state.version");
  return parse_matrix(j["state"], 4, "state.state");
}

ComplexMatrix load_state(const std::string& path) {
  return parse_state(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace rucb::cli
