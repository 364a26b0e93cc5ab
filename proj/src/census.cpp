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

#include "qwc/census.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qwc/controllability.hpp"

namespace qwc {

namespace {

// Branch-and-bound over partial labelings: once the bits determined by
// the placed vertices exceed the corresponding prefix of the best form,
// no completion can win.
struct CanonicalSearch {
  const Graph& g;
  int n;
  int pairs;
  std::uint64_t best;
  std::array<int, 11> perm{};

  void run(int depth, std::uint32_t used, std::uint64_t prefix, int bits) {
    if (depth == n) {
      if (prefix < best) best = prefix;
      return;
    }
    for (int old = 0; old < n; ++old) {
      if ((used >> old) & 1u) continue;
      std::uint64_t p = prefix;
      for (int i = 0; i < depth; ++i)
        p = (p << 1) | (g.adjacent(perm[i], old) ? 1u : 0u);
      int nb = bits + depth;
      if (p > (best >> (pairs - nb))) continue;
      perm[depth] = old;
      run(depth + 1, used | (1u << old), p, nb);
    }
  }
};

void check_enumeration_size(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > 11)
    throw std::invalid_argument("enumeration is capped at n = 11");
  if (n > 8 && !allow_large)
    throw std::invalid_argument(
        "enumeration beyond n = 8 is slow; pass the large-size override");
}

Graph add_attached_vertex(const Graph& parent, std::uint32_t mask) {
  int k = parent.n();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (parent.adjacent(i, j)) edges.emplace_back(i, j);
  for (int j = 0; j < k; ++j)
    if ((mask >> j) & 1u) edges.emplace_back(j, k);
  return Graph::from_edges(k + 1, edges);
}

std::vector<std::uint64_t> sorted_forms(
    const std::unordered_set<std::uint64_t>& seen) {
  std::vector<std::uint64_t> forms(seen.begin(), seen.end());
  std::sort(forms.begin(), forms.end());
  return forms;
}

std::vector<Graph> forms_to_graphs(const std::vector<std::uint64_t>& forms,
                                   int n) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (std::uint64_t c : forms) out.push_back(graph_from_triangle_bits(n, c));
  return out;
}

}  // namespace

std::uint64_t canonical_form(const Graph& x) {
  int n = x.n();
  if (n > 11)
    throw std::invalid_argument("canonical form supports n <= 11 only");
  if (n == 1) return 0;
  CanonicalSearch s{x, n, n * (n - 1) / 2, triangle_bits(x)};
  s.run(0, 0u, 0u, 0);
  return s.best;
}

Graph canonical_graph(const Graph& x) {
  return graph_from_triangle_bits(x.n(), canonical_form(x));
}

std::vector<Graph> enumerate_connected_serial(int n, bool allow_large) {
  check_enumeration_size(n, allow_large);
  std::vector<std::uint64_t> level{0};  // canonical forms, current size k
  for (int k = 1; k < n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t c : level) {
      Graph parent = graph_from_triangle_bits(k, c);
      // Attaching the new vertex to a nonempty subset keeps the graph
      // connected; every connected (k+1)-vertex graph arises this way
      // from deleting a non-cut vertex.
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
        seen.insert(canonical_form(add_attached_vertex(parent, mask)));
    }
    level = sorted_forms(seen);
  }
  return forms_to_graphs(level, n);
}

std::vector<Graph> enumerate_connected(int n, int jobs, bool allow_large) {
#ifndef _OPENMP
  (void)jobs;
  return enumerate_connected_serial(n, allow_large);
#else
  check_enumeration_size(n, allow_large);
  std::vector<std::uint64_t> level{0};
  for (int k = 1; k < n; ++k) {
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<std::unordered_set<std::uint64_t>> local(threads);
#pragma omp parallel num_threads(threads)
    {
      auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic)
      for (long idx = 0; idx < static_cast<long>(level.size()); ++idx) {
        Graph parent = graph_from_triangle_bits(k, level[idx]);
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
          mine.insert(canonical_form(add_attached_vertex(parent, mask)));
      }
    }
    std::unordered_set<std::uint64_t> seen;
    for (auto& s : local) seen.merge(s);
    level = sorted_forms(seen);
  }
  return forms_to_graphs(level, n);
#endif
}

namespace {

bool controllable_all_ones(const Graph& g) {
  // Regular graphs are never counted: the all-ones vector is an
  // eigenvector, so the walk matrix has rank 1. The explicit test also
  // keeps the one-vertex graph (whose 1x1 walk matrix is invertible)
  // out of the census.
  if (is_regular(g)) return false;
  return walk_matrix(g, VertexSet::all(g.n())).determinant != 0;
}

}  // namespace

CensusResult census_from_graphs(const std::vector<Graph>& graphs, int n,
                                SubsetMode mode, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& g : graphs)
    if (g.n() != n)
      throw std::invalid_argument("graph list contains a wrong-size graph");

  std::vector<Graph> connected;
  for (const auto& g : graphs)
    if (is_connected(g)) connected.push_back(g);

  CensusResult res;
  res.n = n;
  res.mode = mode;
  res.connected_total = static_cast<long>(connected.size());

  long count = static_cast<long>(connected.size());
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
#endif

  if (mode == SubsetMode::kAllOnes) {
    std::vector<char> ctrl(connected.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i)
      ctrl[i] = controllable_all_ones(connected[i]) ? 1 : 0;
    for (long i = 0; i < count; ++i) {
      if (!ctrl[i]) continue;
      ++res.controllable_count;
      ++res.degree_sequences[degrees(connected[i])];
      res.controllable_graph6.push_back(to_graph6(connected[i]));
    }
    std::sort(res.controllable_graph6.begin(), res.controllable_graph6.end());
  } else {
    std::vector<std::vector<int>> rows(connected.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) {
      const Graph& g = connected[i];
      for (int v = 0; v < g.n(); ++v)
        if (walk_matrix(g, VertexSet::single(g.n(), v)).determinant != 0)
          rows[i].push_back(v);
    }
    for (long i = 0; i < count; ++i) {
      res.controllable_count += static_cast<long>(rows[i].size());
      res.singleton_rows.push_back(
          {to_graph6(connected[i]), std::move(rows[i])});
    }
  }

  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

CensusResult census(int n, SubsetMode mode, int jobs, bool allow_large) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs = enumerate_connected(n, jobs, allow_large);
  CensusResult res = census_from_graphs(graphs, n, mode, jobs);
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

FamilyCheckReport family_check(const Graph& base, const VertexSet& s,
                               FamilyCheckReport::Construction construction,
                               int attach_m, int depth) {
  if (depth < 0 || depth > 8)
    throw std::invalid_argument("family depth must be in [0, 8]");
  if (construction == FamilyCheckReport::Construction::kAttachPath &&
      attach_m < 1)
    throw std::invalid_argument("attached path length must be positive");

  WalkMatrix w0 = walk_matrix(base, s);
  if (w0.determinant == 0)
    throw std::invalid_argument("base pair is not controllable");

  FamilyCheckReport rep;
  rep.construction = construction;
  rep.attach_m = attach_m;
  rep.levels.push_back({to_graph6(base), base.n(), true, w0.determinant});

  Graph x = base;
  VertexSet cur = s;
  for (int d = 1; d <= depth; ++d) {
    if (construction == FamilyCheckReport::Construction::kCone) {
      x = cone(x, cur);
      cur = VertexSet::single(x.n(), 0);
    } else {
      x = attach_path(x, cur, attach_m);
      cur = VertexSet::all(x.n());
    }
    WalkMatrix w = walk_matrix(x, cur);
    bool ok = w.determinant != 0;
    rep.levels.push_back({to_graph6(x), x.n(), ok, w.determinant});
    if (!ok && rep.first_failure_level < 0) rep.first_failure_level = d;
  }
  rep.all_controllable = rep.first_failure_level < 0;
  return rep;
}

}  // namespace qwc
