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

#ifndef QWC_CENSUS_HPP
#define QWC_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qwc/exact.hpp"
#include "qwc/graph.hpp"

namespace qwc {

/// Lexicographically minimal packed upper-triangle bit-string of x over
/// all vertex relabelings. Two graphs are isomorphic exactly when their
/// canonical forms agree. Branch-and-bound over partial labelings;
/// n <= 11 (the form must fit one 64-bit word).
std::uint64_t canonical_form(const Graph& x);

/// The canonically labeled representative of x's isomorphism class.
Graph canonical_graph(const Graph& x);

/// One representative per isomorphism class of connected graphs on n
/// vertices, sorted by canonical form. Graphs are grown one vertex at a
/// time over all nonempty attachment subsets, deduplicating by
/// canonical form per level. The cost guard rejects n > 8 unless
/// allow_large is set (hard cap n = 11).
///
/// enumerate_connected_serial is the reference implementation;
/// enumerate_connected parallelizes over parent graphs and must return
/// the identical list. jobs = 0 means the runtime default.
std::vector<Graph> enumerate_connected_serial(int n, bool allow_large = false);
std::vector<Graph> enumerate_connected(int n, int jobs = 0,
                                       bool allow_large = false);

enum class SubsetMode { kAllOnes, kEverySingleton };

struct CensusResult {
  int n = 0;
  SubsetMode mode = SubsetMode::kAllOnes;
  long connected_total = 0;
  /// All-ones mode: graphs X with (X, V) controllable. Every-singleton
  /// mode: controllable pairs (X, {v}), summed over graphs.
  long controllable_count = 0;
  /// Degree sequences of the controllable graphs (all-ones mode only).
  std::map<DegreeSequence, long> degree_sequences;
  /// graph6 of the controllable graphs, sorted (all-ones mode only).
  std::vector<std::string> controllable_graph6;

  /// Per-graph detail for every-singleton mode. These statistics go
  /// beyond the published counts and are labeled as such in output.
  struct SingletonRow {
    std::string graph6;
    std::vector<int> controllable_vertices;
  };
  std::vector<SingletonRow> singleton_rows;

  double elapsed_seconds = 0;
};

/// Sweeps the isomorph-free connected graphs on n vertices. In all-ones
/// mode a graph is counted when (X, V) is controllable; regular graphs
/// are excluded up front (their walk matrix has rank 1; this also keeps
/// the one-vertex graph out of the count).
CensusResult census(int n, SubsetMode mode, int jobs = 0,
                    bool allow_large = false);

/// Same sweep over an externally supplied graph list (e.g. graph6 file
/// input). Disconnected entries are skipped; no isomorphism dedup is
/// performed. Every graph must have exactly n vertices.
CensusResult census_from_graphs(const std::vector<Graph>& graphs, int n,
                                SubsetMode mode, int jobs = 0);

/// Iterated growth along one of the two constructions, testing
/// controllability at every level.
struct FamilyCheckReport {
  enum class Construction { kCone, kAttachPath };
  Construction construction = Construction::kCone;
  int attach_m = 1;  // path length per level (attach_path only)
  struct Level {
    std::string graph6;
    int n = 0;
    bool controllable = false;
    BigInt det;
  };
  std::vector<Level> levels;  // level 0 is the base pair
  bool all_controllable = false;
  int first_failure_level = -1;  // -1 when every level passes
};

/// Precondition: (base, S) controllable. Cone levels replace the pair
/// by (cone over S, {apex}); attach-path levels join a fresh m-path to
/// S and test the grown graph against its all-ones vector, so S becomes
/// the full vertex set from the first level on.
FamilyCheckReport family_check(const Graph& base, const VertexSet& s,
                               FamilyCheckReport::Construction construction,
                               int attach_m, int depth);

}  // namespace qwc

#endif  // QWC_CENSUS_HPP
