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

#ifndef QWC_LIE_HPP
#define QWC_LIE_HPP

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwc/exact.hpp"
#include "qwc/graph.hpp"

namespace qwc {

enum class LieMode { kExact, kFloating };

/// Complex matrix with exact integer real and imaginary parts. Used to
/// embed complex generators in a real vector space of twice the size.
struct ComplexIntMatrix {
  IntMatrix re;
  IntMatrix im;
};

struct ClosureReport {
  int dimension = 0;
  bool saturated = false;
  long commutator_products = 0;
};

/// Closure basis alongside the report. Exactly one of the basis
/// vectors is populated, matching the mode; vectors are flattened
/// matrices (row-major; complex inputs contribute the real part first,
/// then the imaginary part).
struct ClosureResult {
  ClosureReport report;
  int ambient_dim = 0;
  LieMode mode = LieMode::kExact;
  std::vector<IntVector> exact_basis;
  std::vector<Eigen::VectorXd> float_basis;
};

/// Floating-mode residual fell between the discard and accept
/// thresholds; rerun in exact mode instead of guessing.
class AmbiguousRankError : public std::runtime_error {
 public:
  explicit AmbiguousRankError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Dimension of the smallest real vector space containing the
/// generators and closed under the commutator [M, N] = MN - NM.
/// The basis is kept orthogonal under the trace inner product; new
/// commutators are orthogonalized against it and added when a nonzero
/// residual remains. In exact mode residuals are reduced to primitive
/// integer vectors; in floating mode a residual within a factor 10 of
/// the tolerance raises AmbiguousRankError.
ClosureResult lie_closure(std::span<const IntMatrix> generators,
                          LieMode mode);

/// Same closure over complex generators, viewed as a real vector space
/// of dimension 2n^2.
ClosureResult lie_closure_complex(
    std::span<const ComplexIntMatrix> generators, LieMode mode);

ClosureReport lie_closure_dimension(std::span<const IntMatrix> generators,
                                    LieMode mode);
ClosureReport lie_closure_dimension_complex(
    std::span<const ComplexIntMatrix> generators, LieMode mode);

/// True when v lies in the span of the (pairwise orthogonal) exact
/// basis vectors. Exposed for property tests.
bool in_exact_span(const std::vector<IntVector>& basis, IntVector v);

/// Checks the algebraic rank condition on a pair: with A the adjacency
/// matrix and L = zz^T, a controllable pair must generate the full
/// n^2-dimensional matrix algebra over {A, L} and the full
/// skew-Hermitian space (real dimension n^2) over {iA, iL}.
struct SaturationReport {
  int n = 0;
  bool controllable = false;
  int real_dim = 0;
  int skew_dim = 0;
  bool saturation_holds = false;
  long commutator_products = 0;
};

/// Cost guard: exact mode requires n <= 6, floating mode n <= 8.
SaturationReport verify_saturation(const Graph& x, const VertexSet& s, LieMode mode);

}  // namespace qwc

#endif  // QWC_LIE_HPP
