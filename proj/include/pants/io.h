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

#ifndef PANTS_IO_H_
#define PANTS_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pants/census.h"
#include "pants/intersection.h"
#include "pants/oracle.h"

namespace pants {

using Json = nlohmann::json;

// Keys: word, root, multiplicity, n, L, H, set_counts, closed_form, i,
// bounds{lower, upper, parity_lower, parity_upper}.
Json ToJson(const IntersectionReport& report);
Json ToJson(const CensusRow& row);
Json ToJson(const std::vector<CensusRow>& rows);
Json ToJson(const Spectrum& spectrum);
Json ToJson(const VerifyReport& report);
Json ToJson(const EpsilonReport& report);
Json ToJson(const ClassCounts& counts);
Json ToJson(const ConfigParams& params);

inline constexpr const char* kCsvHeader =
    "word,L,n,i,H,lower,upper,primitive,simple";

std::string CsvLine(const CensusRow& row);
// Header plus one LF-terminated line per row.
void WriteCsv(std::ostream& out, const std::vector<CensusRow>& rows);

// Expects angles_deg and radii, four numbers each. Throws
// Error(kInvalidConfiguration).
ConfigParams ConfigFromJson(const Json& json);
ConfigParams LoadConfig(const std::string& path);

}  // namespace pants

#endif  // PANTS_IO_H_
