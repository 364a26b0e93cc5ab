// Copyright 2026 The qwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWC_SERIALIZE_HPP
#define QWC_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "qwc/census.hpp"
#include "qwc/controllability.hpp"
#include "qwc/lie.hpp"
#include "qwc/qwalk.hpp"

// JSON documents for every report type. Conventions: each document
// carries its schema id in a "schema" field ("qwc.<name>/1"); integers
// that may exceed 64 bits (determinants, polynomial coefficients) are
// decimal strings; vertex lists are sorted; object keys serialize
// sorted, so output is stable.

namespace qwc {

/// Map key for a degree sequence, e.g. "1,2,2,2,3,4".
std::string degree_sequence_key(const DegreeSequence& d);

std::string to_decimal(const BigInt& v);

nlohmann::json to_json(const ControllabilityReport& rep);
nlohmann::json to_json(const WalkMatrix& w);
nlohmann::json to_json(const CensusResult& res);
nlohmann::json to_json(const FamilyCheckReport& rep);

nlohmann::json charpoly_json(const Graph& x, const IntPoly& phi);
nlohmann::json saturation_json(const std::string& graph6, const VertexSet& s,
                           LieMode mode, const SaturationReport& rep);
nlohmann::json cone_json(const Graph& x, int v, const Graph& hat,
                         bool premise, bool conclusion);
nlohmann::json synthesis_json(const Graph& x, const VertexSet& s,
                              const SynthesisConfig& cfg,
                              const SynthesisResult& res);

}  // namespace qwc

#endif  // QWC_SERIALIZE_HPP
