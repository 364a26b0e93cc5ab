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

#include "qwc/controllability.hpp"

#include <stdexcept>

namespace qwc {

IntMatrix adjacency_matrix(const Graph& x) {
  IntMatrix a(x.n(), x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j)
      if (x.adjacent(i, j)) a.at(i, j) = 1;
  return a;
}

IntVector indicator_vector(const VertexSet& s) {
  IntVector z(s.ambient(), BigInt(0));
  for (int v : s.members()) z[v] = 1;
  return z;
}

IntPoly characteristic_polynomial(const Graph& x) {
  return char_poly(adjacency_matrix(x));
}

WalkMatrix walk_matrix(const Graph& x, const VertexSet& s) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  int n = x.n();
  IntMatrix a = adjacency_matrix(x);
  std::vector<IntVector> cols = krylov_sequence(a, indicator_vector(s), n);
  IntMatrix w(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) w.at(i, j) = cols[j][i];
  BigInt d = det_bareiss(w);
  int r = rank(w);
  return {x, s, std::move(w), std::move(d), r};
}

ControllabilityReport is_controllable(const Graph& x, const VertexSet& s) {
  WalkMatrix w = walk_matrix(x, s);
  ControllabilityReport rep{x,       s,
                            w.determinant != 0,
                            w.determinant,
                            w.rank,
                            std::nullopt,
                            std::nullopt,
                            std::nullopt};
  int n = x.n();
  if (s.count() == 1 && n >= 2) {
    SpectralCriterion sc = spectral_criterion(x, s.members().front());
    rep.gcd_degree = sc.gcd_degree;
    rep.spectral_rank = n - sc.gcd_degree;
    // Both are theorems for singleton subsets; a mismatch means a bug
    // in the determinant, the rank, or the polynomial gcd.
    if (sc.coprime != rep.controllable)
      throw std::logic_error("determinant and spectral tests disagree");
    if (rep.rank != *rep.spectral_rank)
      throw std::logic_error("walk-matrix rank defect != gcd degree");
  }
  if (n <= 10) rep.fixing_automorphisms = automorphisms_fixing(x, s);
  return rep;
}

SpectralCriterion spectral_criterion(const Graph& x, int v) {
  if (x.n() < 2)
    throw std::invalid_argument("spectral criterion needs n >= 2");
  if (v < 0 || v >= x.n())
    throw std::invalid_argument("vertex out of range");
  IntPoly phi = characteristic_polynomial(x);
  IntPoly phi_del = characteristic_polynomial(delete_vertex(x, v));
  IntPoly g = poly_gcd(phi, phi_del);
  return {g.degree(), g.degree() == 0};
}

bool cone_theorem_check(const Graph& x, int v) {
  if (x.n() < 2)
    throw std::invalid_argument("cone theorem check needs n >= 2");
  if (v < 0 || v >= x.n())
    throw std::invalid_argument("vertex out of range");
  Graph hat = cone(x, VertexSet::single(x.n(), v));

  IntPoly lhs = characteristic_polynomial(hat);
  IntPoly rhs = shift(characteristic_polynomial(x), 1) -
                characteristic_polynomial(delete_vertex(x, v));
  if (!(lhs == rhs))
    throw std::logic_error("cone characteristic polynomial identity failed");

  bool premise =
      walk_matrix(x, VertexSet::single(x.n(), v)).determinant != 0;
  if (!premise) return true;
  bool conclusion =
      walk_matrix(hat, VertexSet::single(hat.n(), 0)).determinant != 0;
  return conclusion;
}

namespace {

long count_automorphisms(const Graph& x, const VertexSet& s, int depth,
                         std::uint32_t used, std::vector<int>& image) {
  int n = x.n();
  if (depth == n) return 1;
  long total = 0;
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1u) continue;
    if (x.degree(w) != x.degree(depth)) continue;
    if (s.contains(w) != s.contains(depth)) continue;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j)
      ok = x.adjacent(depth, j) == x.adjacent(w, image[j]);
    if (!ok) continue;
    image[depth] = w;
    total += count_automorphisms(x, s, depth + 1, used | (1u << w), image);
  }
  return total;
}

}  // namespace

long automorphisms_fixing(const Graph& x, const VertexSet& s) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  if (x.n() > 10)
    throw std::invalid_argument(
        "automorphism search is limited to n <= 10");
  std::vector<int> image(x.n());
  return count_automorphisms(x, s, 0, 0u, image);
}

std::vector<BigInt> walk_moments(const Graph& x, const VertexSet& s) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  int n = x.n();
  std::vector<IntVector> pows =
      krylov_sequence(adjacency_matrix(x), indicator_vector(s), n);
  std::vector<BigInt> c(2 * n - 1);
  for (int r = 0; r <= 2 * n - 2; ++r) {
    // A is symmetric, so z^T A^r z = (A^i z) . (A^j z) for i + j = r.
    int i = r / 2, j = r - r / 2;
    BigInt dot = 0;
    for (int k = 0; k < n; ++k) dot += pows[i][k] * pows[j][k];
    c[r] = dot;
  }
  return c;
}

}  // namespace qwc
