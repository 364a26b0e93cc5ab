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

#include "qwc/serialize.hpp"

namespace qwc {

using nlohmann::json;

std::string degree_sequence_key(const DegreeSequence& d) {
  std::string key;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(d[i]);
  }
  return key;
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

namespace {

json subset_array(const VertexSet& s) { return json(s.members()); }

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const ControllabilityReport& rep) {
  json doc;
  doc["schema"] = "qwc.check/1";
  doc["graph6"] = to_graph6(rep.base);
  doc["n"] = rep.base.n();
  doc["subset"] = subset_array(rep.subset);
  doc["controllable"] = rep.controllable;
  doc["det"] = to_decimal(rep.det_certificate);
  doc["rank"] = rep.rank;
  doc["spectral_rank"] = optional_int(rep.spectral_rank);
  doc["gcd_degree"] = optional_int(rep.gcd_degree);
  doc["fixing_automorphisms"] = rep.fixing_automorphisms
                                    ? json(*rep.fixing_automorphisms)
                                    : json(nullptr);
  return doc;
}

json to_json(const WalkMatrix& w) {
  json rows = json::array();
  for (int i = 0; i < w.matrix.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.matrix.cols(); ++j)
      row.push_back(to_decimal(w.matrix.at(i, j)));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["schema"] = "qwc.walk-matrix/1";
  doc["graph6"] = to_graph6(w.base);
  doc["n"] = w.base.n();
  doc["subset"] = subset_array(w.subset);
  doc["matrix"] = std::move(rows);
  doc["det"] = to_decimal(w.determinant);
  doc["rank"] = w.rank;
  return doc;
}

json to_json(const CensusResult& res) {
  json doc;
  doc["schema"] = "qwc.census/1";
  doc["n"] = res.n;
  doc["mode"] =
      res.mode == SubsetMode::kAllOnes ? "all-ones" : "every-singleton";
  // Per-vertex statistics have no published counterpart; flag them.
  doc["beyond_published"] = res.mode == SubsetMode::kEverySingleton;
  doc["connected"] = res.connected_total;
  doc["controllable"] = res.controllable_count;
  json seqs = json::object();
  for (const auto& [d, count] : res.degree_sequences)
    seqs[degree_sequence_key(d)] = count;
  doc["degree_sequences"] = std::move(seqs);
  doc["controllable_graph6"] = res.controllable_graph6;
  if (res.mode == SubsetMode::kEverySingleton) {
    json rows = json::array();
    for (const auto& row : res.singleton_rows)
      rows.push_back({{"graph6", row.graph6},
                      {"controllable_vertices", row.controllable_vertices}});
    doc["singleton"] = std::move(rows);
  }
  doc["elapsed_seconds"] = res.elapsed_seconds;
  return doc;
}

json to_json(const FamilyCheckReport& rep) {
  json doc;
  doc["schema"] = "qwc.family/1";
  bool is_cone =
      rep.construction == FamilyCheckReport::Construction::kCone;
  doc["construction"] = is_cone ? "cone" : "attach-path";
  if (!is_cone) doc["attach_m"] = rep.attach_m;
  json levels = json::array();
  for (const auto& lvl : rep.levels)
    levels.push_back({{"graph6", lvl.graph6},
                      {"n", lvl.n},
                      {"controllable", lvl.controllable},
                      {"det", to_decimal(lvl.det)}});
  doc["levels"] = std::move(levels);
  doc["all_controllable"] = rep.all_controllable;
  doc["first_failure_level"] = rep.first_failure_level;
  return doc;
}

json charpoly_json(const Graph& x, const IntPoly& phi) {
  json coeffs = json::array();
  for (int k = 0; k <= phi.degree(); ++k)
    coeffs.push_back(to_decimal(phi.coeff(k)));
  json doc;
  doc["schema"] = "qwc.charpoly/1";
  doc["graph6"] = to_graph6(x);
  doc["n"] = x.n();
  doc["coefficients"] = std::move(coeffs);  // ascending powers of t
  doc["pretty"] = phi.to_string();
  return doc;
}

json saturation_json(const std::string& graph6, const VertexSet& s, LieMode mode,
                 const SaturationReport& rep) {
  json doc;
  doc["schema"] = "qwc.lie-dim/1";
  doc["graph6"] = graph6;
  doc["n"] = rep.n;
  doc["subset"] = subset_array(s);
  doc["mode"] = mode == LieMode::kExact ? "exact" : "floating";
  doc["controllable"] = rep.controllable;
  doc["real_dim"] = rep.real_dim;
  doc["skew_dim"] = rep.skew_dim;
  doc["full_dim"] = rep.n * rep.n;
  doc["saturation_holds"] = rep.saturation_holds;
  doc["commutator_products"] = rep.commutator_products;
  return doc;
}

json cone_json(const Graph& x, int v, const Graph& hat, bool premise,
               bool conclusion) {
  json doc;
  doc["schema"] = "qwc.cone/1";
  doc["graph6"] = to_graph6(x);
  doc["vertex"] = v;
  doc["cone_graph6"] = to_graph6(hat);
  doc["premise_controllable"] = premise;
  doc["cone_controllable"] = conclusion;
  doc["implication_holds"] = !premise || conclusion;
  doc["charpoly_identity"] = true;  // checked exactly; failure throws
  return doc;
}

json synthesis_json(const Graph& x, const VertexSet& s,
                    const SynthesisConfig& cfg, const SynthesisResult& res) {
  json segments = json::array();
  for (int k = 0; k < res.schedule.pairs(); ++k)
    segments.push_back({{"segment", k},
                        {"s", res.schedule.s(k)},
                        {"t", res.schedule.t(k)}});
  json doc;
  doc["schema"] = "qwc.synthesize/1";
  doc["graph6"] = to_graph6(x);
  doc["n"] = x.n();
  doc["subset"] = subset_array(s);
  doc["segment_pairs"] = cfg.segment_pairs;
  doc["restarts"] = cfg.restarts;
  doc["rng_seed"] = cfg.rng_seed;
  doc["target_infidelity"] = cfg.target_infidelity;
  doc["achieved_infidelity"] = res.achieved_infidelity;
  doc["reached_target"] = res.reached_target;
  doc["pair_controllable"] = res.pair_controllable;
  doc["has_negative_durations"] = res.has_negative_durations;
  doc["best_restart"] = res.best_restart;
  doc["iterations_used"] = res.iterations_used;
  doc["schedule"] = std::move(segments);
  return doc;
}

}  // namespace qwc
