// Copyright 2026 The Pants Authors
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

#include "pants/io.h"

#include <fstream>

#include "pants/error.h"

namespace pants {
namespace {

Json Words(const std::vector<CyclicWord>& words) {
  Json out = Json::array();
  for (const CyclicWord& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

Json ToJson(const IntersectionReport& r) {
  Json set_counts = Json::object();
  for (const auto& [label, count] : r.set_counts) set_counts[label] = count;
  return {
      {"word", r.word.str()},
      {"root", r.root.str()},
      {"multiplicity", r.multiplicity},
      {"n", r.n},
      {"L", r.length},
      {"H", r.h},
      {"set_counts", set_counts},
      {"closed_form", r.closed_form},
      {"i", r.i},
      {"bounds",
       {{"lower", r.lower_bound},
        {"upper", r.upper_bound},
        {"parity_lower", r.parity_lower},
        {"parity_upper", r.parity_upper}}},
  };
}

Json ToJson(const CensusRow& row) {
  return {{"word", row.word.str()}, {"L", row.length},
          {"n", row.n},             {"i", row.i},
          {"H", row.h},             {"lower", row.lower},
          {"upper", row.upper},     {"primitive", row.primitive},
          {"simple", row.simple}};
}

Json ToJson(const std::vector<CensusRow>& rows) {
  Json out = Json::array();
  for (const CensusRow& row : rows) out.push_back(ToJson(row));
  return out;
}

Json ToJson(const Spectrum& s) {
  Json out = {{"L", s.length},
              {"max", s.max},
              {"max_witnesses", Words(s.max_witnesses)},
              {"min_nonsimple", nullptr},
              {"min_witnesses", Words(s.min_witnesses)}};
  if (s.min_nonsimple) out["min_nonsimple"] = *s.min_nonsimple;
  return out;
}

Json ToJson(const VerifyReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"row", ToJson(v.row)}, {"checks", v.checks}});
  }
  Json mismatches = Json::array();
  for (const OracleMismatch& m : r.oracle_mismatches) {
    Json j = {{"word", m.word.str()}, {"i", m.i}, {"oracle", nullptr}};
    if (m.oracle) j["oracle"] = *m.oracle;
    if (!m.error.empty()) j["error"] = m.error;
    mismatches.push_back(j);
  }
  return {{"max_length", r.max_length},
          {"classes", r.classes},
          {"violations", violations},
          {"oracle_checked", r.oracle_checked},
          {"oracle_mismatches", mismatches},
          {"ok", r.ok()}};
}

Json ToJson(const EpsilonReport& r) {
  return {{"L", r.length},
          {"epsilon", r.epsilon.str()},
          {"count_A", r.count_a},
          {"count_B", r.count_b},
          {"total", r.total},
          {"paper_total", r.paper_total.str()}};
}

Json ToJson(const ClassCounts& c) {
  return {{"L", c.length},
          {"all", c.all},
          {"primitive", c.primitive},
          {"simple", c.simple},
          {"paper_formula", c.paper_formula.str()}};
}

Json ToJson(const ConfigParams& p) {
  return {{"angles_deg", p.angles_deg}, {"radii", p.radii}};
}

std::string CsvLine(const CensusRow& row) {
  return row.word.str() + "," + std::to_string(row.length) + "," +
         std::to_string(row.n) + "," + std::to_string(row.i) + "," +
         std::to_string(row.h) + "," + std::to_string(row.lower) + "," +
         std::to_string(row.upper) + "," + (row.primitive ? "1" : "0") + "," +
         (row.simple ? "1" : "0");
}

void WriteCsv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << kCsvHeader << '\n';
  for (const CensusRow& row : rows) out << CsvLine(row) << '\n';
}

ConfigParams ConfigFromJson(const Json& json) {
  auto numbers = [&](const char* key) {
    if (!json.is_object() || !json.contains(key) || !json[key].is_array() ||
        json[key].size() != 4) {
      throw Error(ErrorCode::kInvalidConfiguration,
                  std::string("config needs '") + key + "' with 4 numbers");
    }
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!json[key][k].is_number()) {
        throw Error(ErrorCode::kInvalidConfiguration,
                    std::string("config '") + key + "' must be numeric");
      }
      out[k] = json[key][k].get<double>();
    }
    return out;
  };
  ConfigParams p;
  p.angles_deg = numbers("angles_deg");
  p.radii = numbers("radii");
  return p;
}

ConfigParams LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidConfiguration,
                "cannot read config file '" + path + "'");
  }
  Json json = Json::parse(in, nullptr, false);
  if (json.is_discarded()) {
    throw Error(ErrorCode::kInvalidConfiguration,
                "config file '" + path + "' is not valid JSON");
  }
  return ConfigFromJson(json);
}

}  // namespace pants
