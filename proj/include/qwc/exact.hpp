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

#ifndef QWC_EXACT_HPP
#define QWC_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qwc {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;

/// Dense matrix of arbitrary-precision integers, row-major.
/// All algorithms below are exact; there is no overflow and no rounding.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);
BigInt trace(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Every intermediate division is exact. Throws
/// std::invalid_argument if the matrix is not square.
BigInt det_bareiss(const IntMatrix& m);

/// Exact rank over the rationals, by fraction-free elimination with
/// row and column pivoting. Works for any shape.
int rank(const IntMatrix& m);

/// Integer polynomial, coefficients stored in ascending degree order.
/// The zero polynomial has an empty coefficient vector and degree -1;
/// otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of t^k; zero beyond the degree.
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;

  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  BigInt content() const;
  /// Divides out the content and normalizes the leading coefficient
  /// to be positive. primitive_part(0) = 0.
  IntPoly primitive_part() const;

  /// Exact divisibility test: does d divide *this with integer quotient?
  bool divisible_by(const IntPoly& d) const;

  std::string to_string(const std::string& var = "t") const;

  bool operator==(const IntPoly& other) const = default;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator*(const BigInt& c, const IntPoly& p);
/// p * t^k
IntPoly shift(const IntPoly& p, int k);

/// Monic characteristic polynomial det(tI - M), exact integer
/// coefficients via the Faddeev-LeVerrier recurrence. Every internal
/// division is checked exact; a failed check throws std::logic_error.
IntPoly char_poly(const IntMatrix& m);

/// gcd over the rationals, returned as a primitive integer polynomial
/// with positive leading coefficient. Subresultant PRS keeps the
/// intermediate coefficients polynomial-sized. Throws
/// std::invalid_argument if both inputs are zero.
IntPoly poly_gcd(IntPoly p, IntPoly q);

/// [z, Az, A^2 z, ..., A^{k-1} z] by repeated matrix-vector products.
std::vector<IntVector> krylov_sequence(const IntMatrix& a, const IntVector& z,
                                       int k);

}  // namespace qwc

#endif  // QWC_EXACT_HPP
