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

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qwc/exact.hpp"

namespace qwc {
namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo,
                        int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// Oracle: cofactor expansion along the first row. Exponential, so only
// used up to 5x5.
BigInt det_cofactor(const IntMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
    BigInt term = m.at(0, j) * det_cofactor(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Oracle: plain Gaussian elimination over the rationals.
int rank_rational(const IntMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rational(m.at(i, j));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Oracle: textbook Euclidean algorithm over rational polynomials,
// result reduced to a primitive integer polynomial.
using RatPoly = std::vector<Rational>;  // ascending, no trailing zeros

RatPoly rat_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = rat_trim(std::move(a));
  }
  return a;
}

IntPoly gcd_euclid_oracle(const IntPoly& p, const IntPoly& q) {
  auto to_rat = [](const IntPoly& x) {
    RatPoly out;
    for (const auto& c : x.coeffs()) out.emplace_back(c);
    return out;
  };
  RatPoly a = to_rat(p), b = to_rat(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // Clear denominators, then reduce to the primitive part.
  BigInt denom = 1;
  for (const auto& c : a) denom = denom / gcd(denom, c.get_den()) * c.get_den();
  std::vector<BigInt> ints;
  for (const auto& c : a) {
    Rational scaled = c * Rational(denom);
    ints.push_back(scaled.get_num());
  }
  return IntPoly(std::move(ints)).primitive_part();
}

IntPoly random_poly(std::mt19937& rng, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(lo, hi);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

TEST_SUITE("exact.matrix") {
  TEST_CASE("identity and multiplication") {
    IntMatrix i3 = IntMatrix::identity(3);
    std::mt19937 rng(11);
    IntMatrix m = random_matrix(rng, 3, 3, -9, 9);
    CHECK(i3 * m == m);
    CHECK(m * i3 == m);
    CHECK(trace(i3) == 3);
  }

  TEST_CASE("mat_vec matches column arithmetic") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = -1;
    m.at(1, 1) = 0;
    m.at(1, 2) = 4;
    IntVector v{BigInt(1), BigInt(1), BigInt(2)};
    IntVector got = mat_vec(m, v);
    CHECK(got == IntVector{BigInt(9), BigInt(7)});
  }
}

TEST_SUITE("exact.det") {
  TEST_CASE("small fixed determinants") {
    CHECK(det_bareiss(IntMatrix::identity(4)) == 1);
    IntMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = 7;
    m.at(1, 0) = 2;
    m.at(1, 1) = 5;
    CHECK(det_bareiss(m) == 1);
    IntMatrix z(3, 3);
    CHECK(det_bareiss(z) == 0);
  }

  TEST_CASE("repeated row is singular") {
    std::mt19937 rng(5);
    IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    for (int j = 0; j < 4; ++j) m.at(3, j) = m.at(1, j);
    CHECK(det_bareiss(m) == 0);
  }

  TEST_CASE("agrees with cofactor expansion") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + trial % 5;
      IntMatrix m = random_matrix(rng, n, n, -8, 8);
      CHECK(det_bareiss(m) == det_cofactor(m));
    }
  }

  TEST_CASE("multiplicative over products") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix a = random_matrix(rng, 4, 4, -6, 6);
      IntMatrix b = random_matrix(rng, 4, 4, -6, 6);
      CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
  }

  TEST_CASE("row swap flips the sign") {
    std::mt19937 rng(44);
    IntMatrix m = random_matrix(rng, 5, 5, -9, 9);
    IntMatrix swapped = m;
    for (int j = 0; j < 5; ++j) std::swap(swapped.at(0, j), swapped.at(2, j));
    CHECK(det_bareiss(swapped) == -det_bareiss(m));
  }

  TEST_CASE("non-square throws") {
    CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_SUITE("exact.rank") {
  TEST_CASE("fixed ranks") {
    CHECK(rank(IntMatrix::identity(5)) == 5);
    CHECK(rank(IntMatrix(3, 4)) == 0);
    IntMatrix outer(3, 3);  // (1,2,3)^T (1,1,1): rank one
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) outer.at(i, j) = i + 1;
    CHECK(rank(outer) == 1);
  }

  TEST_CASE("agrees with rational elimination") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + trial % 5, cols = 1 + (trial / 2) % 6;
      // Small entry range makes rank-deficient samples common.
      IntMatrix m = random_matrix(rng, rows, cols, -2, 2);
      CHECK(rank(m) == rank_rational(m));
    }
  }

  TEST_CASE("square: full rank iff nonzero determinant") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 1 + trial % 5;
      IntMatrix m = random_matrix(rng, n, n, -2, 2);
      CHECK((rank(m) == n) == (det_bareiss(m) != 0));
    }
  }
}

TEST_SUITE("exact.poly") {
  TEST_CASE("normalization and degree") {
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{0, 0, 0}.degree() == -1);
    CHECK(IntPoly{5}.degree() == 0);
    CHECK(IntPoly{0, -2, 0, 1}.degree() == 3);
    CHECK(IntPoly::monomial(BigInt(3), 4).degree() == 4);
  }

  TEST_CASE("to_string") {
    CHECK(IntPoly{0, -2, 0, 1}.to_string() == "t^3 - 2*t");
    CHECK(IntPoly{-1, 0, 1}.to_string() == "t^2 - 1");
    CHECK(IntPoly{7}.to_string() == "7");
    CHECK(IntPoly{}.to_string() == "0");
  }

  TEST_CASE("arithmetic agrees with evaluation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      IntPoly p = random_poly(rng, 6, -9, 9);
      IntPoly q = random_poly(rng, 6, -9, 9);
      for (long x : {-3L, -1L, 0L, 1L, 2L, 5L}) {
        BigInt bx(x);
        CHECK((p + q).eval(bx) == p.eval(bx) + q.eval(bx));
        CHECK((p - q).eval(bx) == p.eval(bx) - q.eval(bx));
        CHECK((p * q).eval(bx) == p.eval(bx) * q.eval(bx));
        CHECK(shift(p, 2).eval(bx) == p.eval(bx) * bx * bx);
      }
    }
  }

  TEST_CASE("rational evaluation") {
    IntPoly p{0, -2, 0, 1};  // t^3 - 2t
    Rational half(1, 2);
    CHECK(p.eval(half) == Rational(-7, 8));
  }

  TEST_CASE("content and primitive part") {
    IntPoly p{6, -9, 12};
    CHECK(p.content() == 3);
    CHECK(p.primitive_part() == IntPoly{2, -3, 4});
    IntPoly neg{-4, 0, -6};
    // Leading coefficient is normalized positive.
    CHECK(neg.primitive_part() == IntPoly{2, 0, 3});
    CHECK(IntPoly{}.primitive_part() == IntPoly{});
  }

  TEST_CASE("divisibility") {
    IntPoly t2m1{-1, 0, 1};
    CHECK(t2m1.divisible_by(IntPoly{-1, 1}));   // t - 1
    CHECK(t2m1.divisible_by(IntPoly{1, 1}));    // t + 1
    CHECK(!t2m1.divisible_by(IntPoly{-2, 1}));  // t - 2
    // Integer quotients only: 2t is not an integer multiple of 4t.
    CHECK(!IntPoly{0, 2}.divisible_by(IntPoly{0, 4}));
  }
}

TEST_SUITE("exact.charpoly") {
  TEST_CASE("hand-computed adjacency examples") {
    IntMatrix p2(2, 2);
    p2.at(0, 1) = p2.at(1, 0) = 1;
    CHECK(char_poly(p2) == IntPoly{-1, 0, 1});  // t^2 - 1

    IntMatrix p3(3, 3);
    p3.at(0, 1) = p3.at(1, 0) = 1;
    p3.at(1, 2) = p3.at(2, 1) = 1;
    CHECK(char_poly(p3) == IntPoly{0, -2, 0, 1});  // t^3 - 2t
  }

  TEST_CASE("evaluation matches shifted determinant") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 1 + trial % 6;
      IntMatrix m = random_matrix(rng, n, n, -5, 5);
      IntPoly phi = char_poly(m);
      CHECK(phi.degree() == n);
      CHECK(phi.leading() == 1);
      for (long t0 : {-2L, 0L, 1L, 3L}) {
        IntMatrix shifted(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            shifted.at(i, j) = (i == j ? BigInt(t0) : BigInt(0)) - m.at(i, j);
        CHECK(phi.eval(BigInt(t0)) == det_bareiss(shifted));
      }
    }
  }

  TEST_CASE("trace and constant coefficients") {
    std::mt19937 rng(124);
    IntMatrix m = random_matrix(rng, 5, 5, -4, 4);
    IntPoly phi = char_poly(m);
    CHECK(phi.coeff(4) == -trace(m));
    BigInt c0 = phi.coeff(0);
    CHECK(c0 == ((5 % 2) ? -det_bareiss(m) : det_bareiss(m)));
  }
}

TEST_SUITE("exact.gcd") {
  TEST_CASE("path spectral examples") {
    IntPoly p3{0, -2, 0, 1};  // t^3 - 2t
    IntPoly p2{-1, 0, 1};     // t^2 - 1
    CHECK(poly_gcd(p3, p2) == IntPoly{1});
    CHECK(poly_gcd(p3, IntPoly{0, 0, 1}) == IntPoly{0, 1});  // gcd = t
    CHECK(poly_gcd(p2, IntPoly{0, 1}) == IntPoly{1});
  }

  TEST_CASE("zero handling") {
    CHECK(poly_gcd(IntPoly{4, 8}, IntPoly{}) == IntPoly{1, 2});
    CHECK(poly_gcd(IntPoly{}, IntPoly{4, 8}) == IntPoly{1, 2});
    CHECK_THROWS_AS(poly_gcd(IntPoly{}, IntPoly{}), std::invalid_argument);
  }

  TEST_CASE("common factor is recovered") {
    std::mt19937 rng(321);
    int done = 0;
    while (done < 25) {
      IntPoly g = random_poly(rng, 3, -5, 5);
      IntPoly p = random_poly(rng, 3, -5, 5);
      IntPoly q = random_poly(rng, 3, -5, 5);
      if (g.is_zero() || p.is_zero() || q.is_zero()) continue;
      if (poly_gcd(p, q).degree() != 0) continue;  // want coprime cofactors
      CHECK(poly_gcd(p * g, q * g) == g.primitive_part());
      ++done;
    }
  }

  TEST_CASE("agrees with rational Euclid oracle") {
    std::mt19937 rng(322);
    int done = 0;
    while (done < 60) {
      IntPoly p = random_poly(rng, 7, -20, 20);
      IntPoly q = random_poly(rng, 7, -20, 20);
      if (p.is_zero() || q.is_zero()) continue;
      CHECK(poly_gcd(p, q) == gcd_euclid_oracle(p, q));
      ++done;
    }
  }

  TEST_CASE("symmetric and divides both inputs") {
    std::mt19937 rng(323);
    for (int trial = 0; trial < 20; ++trial) {
      IntPoly p = random_poly(rng, 5, -9, 9);
      IntPoly q = random_poly(rng, 5, -9, 9);
      if (p.is_zero() || q.is_zero()) continue;
      IntPoly g = poly_gcd(p, q);
      CHECK(poly_gcd(q, p) == g);
      CHECK(g.leading() > 0);
      // p and q are rational multiples of g; over the integers that
      // means content-scaled divisibility, so test the primitive parts.
      CHECK(p.primitive_part().divisible_by(g));
      CHECK(q.primitive_part().divisible_by(g));
    }
  }
}

TEST_SUITE("exact.krylov") {
  TEST_CASE("path on three vertices") {
    IntMatrix p3(3, 3);
    p3.at(0, 1) = p3.at(1, 0) = 1;
    p3.at(1, 2) = p3.at(2, 1) = 1;
    IntVector e0{BigInt(1), BigInt(0), BigInt(0)};
    auto seq = krylov_sequence(p3, e0, 3);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == e0);
    CHECK(seq[1] == IntVector{BigInt(0), BigInt(1), BigInt(0)});
    CHECK(seq[2] == IntVector{BigInt(1), BigInt(0), BigInt(1)});
  }
}

}  // namespace
}  // namespace qwc
