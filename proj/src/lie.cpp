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

#include "qwc/lie.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <utility>

#include "qwc/controllability.hpp"

namespace qwc {

namespace {

// ---- exact integer vectors -------------------------------------------

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

bool is_zero(const IntVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

// Divides out the content and makes the first nonzero entry positive.
void make_primitive(IntVector& v) {
  BigInt g = 0;
  for (const auto& e : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g > 1)
    for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& f : v) f = -f;
    break;
  }
}

// Orthogonalizes v against a pairwise-orthogonal basis, fraction-free:
// v <- (b.b) v - (v.b) b keeps everything integral; the primitive
// reduction after each step bounds coefficient growth.
void reduce_against(const std::vector<IntVector>& basis, IntVector& v) {
  for (const auto& b : basis) {
    BigInt num = dot(v, b);
    if (num == 0) continue;
    BigInt den = dot(b, b);
    for (size_t k = 0; k < v.size(); ++k) v[k] = den * v[k] - num * b[k];
    make_primitive(v);
  }
}

IntVector flatten(const IntMatrix& m) {
  IntVector v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

IntMatrix unflatten(const IntVector& v, int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

IntVector flatten_complex(const IntMatrix& re, const IntMatrix& im) {
  IntVector v = flatten(re);
  IntVector w = flatten(im);
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

IntVector commutator_real(const IntVector& a, const IntVector& b, int n) {
  IntMatrix m = unflatten(a, n), k = unflatten(b, n);
  return flatten(sub(m * k, k * m));
}

// [M, N] for M = Mr + i Mi, N = Nr + i Ni, all parts integral.
IntVector commutator_complex(const IntVector& a, const IntVector& b, int n) {
  IntVector ar(a.begin(), a.begin() + n * n), ai(a.begin() + n * n, a.end());
  IntVector br(b.begin(), b.begin() + n * n), bi(b.begin() + n * n, b.end());
  IntMatrix mr = unflatten(ar, n), mi = unflatten(ai, n);
  IntMatrix nr = unflatten(br, n), ni = unflatten(bi, n);
  IntMatrix re = sub(sub(mr * nr, mi * ni), sub(nr * mr, ni * mi));
  IntMatrix im = sub(sub(mr * ni, ni * mr), sub(nr * mi, mi * nr));
  return flatten_complex(re, im);
}

using FlatCommutator =
    std::function<IntVector(const IntVector&, const IntVector&)>;

ClosureResult closure_exact(std::vector<IntVector> gen_flats, int ambient,
                            const FlatCommutator& comm) {
  ClosureResult res;
  res.mode = LieMode::kExact;
  res.ambient_dim = ambient;
  auto& basis = res.exact_basis;
  std::deque<std::pair<int, int>> work;

  auto try_add = [&](IntVector v) {
    reduce_against(basis, v);
    if (is_zero(v)) return;
    int k = static_cast<int>(basis.size());
    basis.push_back(std::move(v));
    for (int i = 0; i < k; ++i) work.emplace_back(k, i);
  };

  for (auto& g : gen_flats) try_add(std::move(g));
  while (!work.empty() && static_cast<int>(basis.size()) < ambient) {
    auto [i, j] = work.front();
    work.pop_front();
    ++res.report.commutator_products;
    try_add(comm(basis[i], basis[j]));
  }
  res.report.dimension = static_cast<int>(basis.size());
  // Either the queue drained, or the span is already the whole ambient
  // space and nothing can escape it.
  res.report.saturated = true;
  return res;
}

// ---- floating vectors ------------------------------------------------

using FloatCommutator =
    std::function<Eigen::VectorXd(const Eigen::VectorXd&,
                                  const Eigen::VectorXd&)>;

using RowMajorMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::VectorXd float_commutator_real(const Eigen::VectorXd& a,
                                      const Eigen::VectorXd& b, int n) {
  Eigen::Map<const RowMajorMatrixXd> m(a.data(), n, n), k(b.data(), n, n);
  RowMajorMatrixXd c = m * k - k * m;
  return Eigen::Map<const Eigen::VectorXd>(c.data(), n * n);
}

Eigen::VectorXd float_commutator_complex(const Eigen::VectorXd& a,
                                         const Eigen::VectorXd& b, int n) {
  using CMat = Eigen::MatrixXcd;
  auto assemble = [n](const Eigen::VectorXd& v) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = std::complex<double>(v[i * n + j], v[n * n + i * n + j]);
    return m;
  };
  CMat c = assemble(a) * assemble(b) - assemble(b) * assemble(a);
  Eigen::VectorXd out(2 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out[i * n + j] = c(i, j).real();
      out[n * n + i * n + j] = c(i, j).imag();
    }
  return out;
}

ClosureResult closure_float(std::vector<Eigen::VectorXd> gen_flats,
                            int ambient, double tol,
                            const FloatCommutator& comm) {
  ClosureResult res;
  res.mode = LieMode::kFloating;
  res.ambient_dim = ambient;
  auto& basis = res.float_basis;
  std::deque<std::pair<int, int>> work;

  auto try_add = [&](Eigen::VectorXd v) {
    // Two Gram-Schmidt passes keep the basis orthonormal to working
    // precision even when v is nearly dependent.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    double r = v.norm();
    if (r <= tol) return;
    if (r < 10.0 * tol)
      throw AmbiguousRankError(
          "closure residual " + std::to_string(r) +
          " falls between the discard and accept thresholds (tol " +
          std::to_string(tol) + "); rerun in exact mode");
    int k = static_cast<int>(basis.size());
    basis.push_back(v / r);
    for (int i = 0; i < k; ++i) work.emplace_back(k, i);
  };

  for (auto& g : gen_flats) try_add(std::move(g));
  while (!work.empty() && static_cast<int>(basis.size()) < ambient) {
    auto [i, j] = work.front();
    work.pop_front();
    ++res.report.commutator_products;
    try_add(comm(basis[i], basis[j]));
  }
  res.report.dimension = static_cast<int>(basis.size());
  res.report.saturated = true;
  return res;
}

int checked_common_size(size_t count, const std::function<int(size_t)>& rows,
                        const std::function<int(size_t)>& cols) {
  if (count == 0)
    throw std::invalid_argument("closure needs at least one generator");
  int n = rows(0);
  for (size_t g = 0; g < count; ++g)
    if (rows(g) != n || cols(g) != n)
      throw std::invalid_argument("generators must be square, same size");
  return n;
}

double frobenius(const IntMatrix& m) {
  double s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double e = m.at(i, j).get_d();
      s += e * e;
    }
  return std::sqrt(s);
}

double float_tolerance(double max_gen_norm) {
  return 1e-9 * max_gen_norm;
}

}  // namespace

ClosureResult lie_closure(std::span<const IntMatrix> generators,
                          LieMode mode) {
  int n = checked_common_size(
      generators.size(), [&](size_t g) { return generators[g].rows(); },
      [&](size_t g) { return generators[g].cols(); });
  if (mode == LieMode::kExact) {
    std::vector<IntVector> flats;
    for (const auto& g : generators) flats.push_back(flatten(g));
    return closure_exact(std::move(flats), n * n,
                         [n](const IntVector& a, const IntVector& b) {
                           return commutator_real(a, b, n);
                         });
  }
  std::vector<Eigen::VectorXd> flats;
  double max_norm = 0;
  for (const auto& g : generators) {
    max_norm = std::max(max_norm, frobenius(g));
    Eigen::VectorXd v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = g.at(i, j).get_d();
    flats.push_back(std::move(v));
  }
  return closure_float(std::move(flats), n * n, float_tolerance(max_norm),
                       [n](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
                         return float_commutator_real(a, b, n);
                       });
}

ClosureResult lie_closure_complex(std::span<const ComplexIntMatrix> generators,
                                  LieMode mode) {
  for (const auto& g : generators)
    if (g.im.rows() != g.re.rows() || g.im.cols() != g.re.cols())
      throw std::invalid_argument("real and imaginary parts disagree");
  int n = checked_common_size(
      generators.size(), [&](size_t g) { return generators[g].re.rows(); },
      [&](size_t g) { return generators[g].re.cols(); });
  if (mode == LieMode::kExact) {
    std::vector<IntVector> flats;
    for (const auto& g : generators)
      flats.push_back(flatten_complex(g.re, g.im));
    return closure_exact(std::move(flats), 2 * n * n,
                         [n](const IntVector& a, const IntVector& b) {
                           return commutator_complex(a, b, n);
                         });
  }
  std::vector<Eigen::VectorXd> flats;
  double max_norm = 0;
  for (const auto& g : generators) {
    double fr = frobenius(g.re), fi = frobenius(g.im);
    max_norm = std::max(max_norm, std::sqrt(fr * fr + fi * fi));
    Eigen::VectorXd v(2 * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        v[i * n + j] = g.re.at(i, j).get_d();
        v[n * n + i * n + j] = g.im.at(i, j).get_d();
      }
    flats.push_back(std::move(v));
  }
  return closure_float(std::move(flats), 2 * n * n,
                       float_tolerance(max_norm),
                       [n](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
                         return float_commutator_complex(a, b, n);
                       });
}

ClosureReport lie_closure_dimension(std::span<const IntMatrix> generators,
                                    LieMode mode) {
  return lie_closure(generators, mode).report;
}

ClosureReport lie_closure_dimension_complex(
    std::span<const ComplexIntMatrix> generators, LieMode mode) {
  return lie_closure_complex(generators, mode).report;
}

bool in_exact_span(const std::vector<IntVector>& basis, IntVector v) {
  reduce_against(basis, v);
  return is_zero(v);
}

SaturationReport verify_saturation(const Graph& x, const VertexSet& s, LieMode mode) {
  if (s.ambient() != x.n())
    throw std::invalid_argument("vertex set belongs to a different graph");
  int n = x.n();
  if (mode == LieMode::kExact && n > 6)
    throw std::invalid_argument("exact closure is limited to n <= 6");
  if (mode == LieMode::kFloating && n > 8)
    throw std::invalid_argument("floating closure is limited to n <= 8");

  IntMatrix a = adjacency_matrix(x);
  IntVector z = indicator_vector(s);
  IntMatrix l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l.at(i, j) = z[i] * z[j];

  std::vector<IntMatrix> gens{a, l};
  ClosureReport real_rep = lie_closure_dimension(gens, mode);
  IntMatrix zero(n, n);
  std::vector<ComplexIntMatrix> cgens{{zero, a}, {zero, l}};
  ClosureReport skew_rep = lie_closure_dimension_complex(cgens, mode);

  SaturationReport rep;
  rep.n = n;
  rep.controllable = walk_matrix(x, s).determinant != 0;
  rep.real_dim = real_rep.dimension;
  rep.skew_dim = skew_rep.dimension;
  rep.commutator_products =
      real_rep.commutator_products + skew_rep.commutator_products;
  rep.saturation_holds =
      !rep.controllable || (rep.real_dim == n * n && rep.skew_dim == n * n);
  return rep;
}

}  // namespace qwc
