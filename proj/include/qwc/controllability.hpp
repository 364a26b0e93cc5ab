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

#ifndef QWC_CONTROLLABILITY_HPP
#define QWC_CONTROLLABILITY_HPP

#include <optional>
#include <vector>

#include "qwc/exact.hpp"
#include "qwc/graph.hpp"

namespace qwc {

/// Adjacency matrix of x as an exact integer matrix.
IntMatrix adjacency_matrix(const Graph& x);

/// Characteristic vector z of s, one entry per ambient vertex.
IntVector indicator_vector(const VertexSet& s);

/// Characteristic polynomial det(t*I - A(x)).
IntPoly characteristic_polynomial(const Graph& x);

/// The n x n matrix whose column j is A^j z for the characteristic
/// vector z of the subset.
struct WalkMatrix {
  Graph base;
  VertexSet subset;
  IntMatrix matrix;
  BigInt determinant;
  int rank;
};

WalkMatrix walk_matrix(const Graph& x, const VertexSet& s);

/// A pair (x, s) is controllable when its walk matrix is invertible.
/// For singleton subsets on n >= 2 vertices the equivalent spectral
/// test (coprimality of the characteristic polynomials of x and of x
/// with the vertex deleted) is run as well and must agree; the rank
/// defect of the walk matrix must equal the gcd degree.
struct ControllabilityReport {
  Graph base;
  VertexSet subset;
  bool controllable;
  BigInt det_certificate;
  int rank;
  std::optional<int> spectral_rank;          // singleton subsets, n >= 2
  std::optional<int> gcd_degree;             // singleton subsets, n >= 2
  std::optional<long> fixing_automorphisms;  // n <= 10
};

ControllabilityReport is_controllable(const Graph& x, const VertexSet& s);

struct SpectralCriterion {
  int gcd_degree;
  bool coprime;
};

/// Degree of gcd(phi(x,t), phi(x minus v, t)); the pair (x, {v}) is
/// controllable exactly when the gcd is constant. Requires n >= 2.
SpectralCriterion spectral_criterion(const Graph& x, int v);

/// Tests one instance of the cone implication: if (x, {v}) is
/// controllable then so is (cone(x, {v}), {apex}). Returns whether the
/// implication holds. Also checks the identity
///   phi(cone, t) = t*phi(x, t) - phi(x minus v, t)
/// exactly and throws std::logic_error if it ever fails.
bool cone_theorem_check(const Graph& x, int v);

/// Number of adjacency-preserving vertex permutations mapping s onto
/// itself. Brute force with degree pruning; requires n <= 10. The
/// identity is always counted, so the result is >= 1.
long automorphisms_fixing(const Graph& x, const VertexSet& s);

/// Moments c_r = z^T A^r z for r = 0..2n-2.
std::vector<BigInt> walk_moments(const Graph& x, const VertexSet& s);

}  // namespace qwc

#endif  // QWC_CONTROLLABILITY_HPP
