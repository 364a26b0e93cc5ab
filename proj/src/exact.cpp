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

#include "qwc/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qwc {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch");
  IntMatrix r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const BigInt& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols(); ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("dimension mismatch");
  IntVector r(m.rows(), BigInt(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

BigInt trace(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("trace of non-square matrix");
  BigInt t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

BigInt det_bareiss(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    // One-step Sylvester identity: after dividing by the previous pivot,
    // every entry is again a minor of the original matrix, so the
    // division is exact.
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : BigInt(-w.at(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
  const int nr = m.rows(), nc = m.cols();
  IntMatrix w = m;
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (w.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;  // zero column in the working submatrix
    if (piv != r)
      for (int j = 0; j < nc; ++j) std::swap(w.at(r, j), w.at(piv, j));
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j) {
        BigInt num = w.at(i, j) * w.at(r, c) - w.at(i, c) * w.at(r, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, c) = 0;
    }
    prev = w.at(r, c);
    ++r;
  }
  return r;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  if (c == 0) return IntPoly{};
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(int k) const {
  static const BigInt kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const BigInt& IntPoly::leading() const {
  static const BigInt kZero(0);
  return c_.empty() ? kZero : c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly{};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

bool IntPoly::divisible_by(const IntPoly& d) const {
  if (d.is_zero()) return is_zero();
  if (is_zero()) return true;
  if (degree() < d.degree()) return false;
  // Long division over the rationals; divisibility holds iff the
  // remainder vanishes and every quotient coefficient is an integer.
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = Rational(c_[i]);
  const Rational lead(d.leading());
  int rd = degree();
  while (rd >= d.degree()) {
    Rational q = r[rd] / lead;
    if (q.get_den() != 1) return false;
    for (int i = 0; i <= d.degree(); ++i)
      r[rd - d.degree() + i] -= q * Rational(d.coeff(i));
    --rd;
    while (rd >= 0 && r[rd] == 0) --rd;
  }
  return rd < 0;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt abs_c = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const bool unit = (abs_c == 1);
    if (k == 0) {
      out += abs_c.get_str();
    } else {
      if (!unit) out += abs_c.get_str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> v(std::max(p.coeffs().size(), q.coeffs().size()), BigInt(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> v(std::max(p.coeffs().size(), q.coeffs().size()), BigInt(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& p) {
  std::vector<BigInt> v(p.coeffs());
  for (BigInt& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly{};
  std::vector<BigInt> v(p.coeffs().size() + q.coeffs().size() - 1, BigInt(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    for (size_t j = 0; j < q.coeffs().size(); ++j)
      v[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  std::vector<BigInt> v(p.coeffs());
  for (BigInt& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly shift(const IntPoly& p, int k) {
  if (p.is_zero()) return IntPoly{};
  std::vector<BigInt> v(p.coeffs().size() + k, BigInt(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) v[i + k] = p.coeffs()[i];
  return IntPoly(std::move(v));
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[n] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));
  // Faddeev-LeVerrier: N_k = M (N_{k-1} + c_{k-1} I), c_k = -tr(N_k)/k.
  // Newton's identities over Z make each division exact.
  IntMatrix nk = m;
  BigInt ck = -trace(nk);
  coeffs[n - 1] = ck;
  for (int k = 2; k <= n; ++k) {
    IntMatrix b = nk;
    for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    nk = m * b;
    BigInt t = trace(nk);
    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("char_poly: inexact internal division");
    mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    ck = -ck;
    coeffs[n - k] = ck;
  }
  return IntPoly(std::move(coeffs));
}

namespace {

// r = lc(q)^(deg p - deg q + 1) * p mod q, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  IntPoly r = p;
  int e = p.degree() - q.degree() + 1;
  const BigInt& lq = q.leading();
  while (!r.is_zero() && r.degree() >= q.degree()) {
    IntPoly s = shift(IntPoly::monomial(r.leading(), 0) * q, r.degree() - q.degree());
    r = lq * r - s;
    --e;
  }
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lq.get_mpz_t(), static_cast<unsigned long>(e));
    r = f * r;
  }
  return r;
}

BigInt int_pow(const BigInt& b, int e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly p, IntPoly q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("poly_gcd of two zero polynomials");
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  p = p.primitive_part();
  q = q.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  if (q.degree() == 0) return IntPoly{1};
  // Brown's subresultant PRS.
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = p.degree() - q.degree();
    IntPoly r = pseudo_remainder(p, q);
    if (r.is_zero()) return q.primitive_part();
    if (r.degree() == 0) return IntPoly{1};
    p = std::move(q);
    BigInt divisor = g * int_pow(h, delta);
    std::vector<BigInt> v(r.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i)
      mpz_divexact(v[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(),
                   divisor.get_mpz_t());
    q = IntPoly(std::move(v));
    g = p.leading();
    if (delta <= 1) {
      h = int_pow(g, delta) * int_pow(h, 1 - delta);
    } else {
      BigInt num = int_pow(g, delta);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(),
                   int_pow(h, delta - 1).get_mpz_t());
    }
  }
}

std::vector<IntVector> krylov_sequence(const IntMatrix& a, const IntVector& z,
                                       int k) {
  if (!a.square() || a.cols() != static_cast<int>(z.size()))
    throw std::invalid_argument("dimension mismatch");
  std::vector<IntVector> out;
  out.reserve(k);
  IntVector v = z;
  for (int i = 0; i < k; ++i) {
    out.push_back(v);
    if (i + 1 < k) v = mat_vec(a, v);
  }
  return out;
}

}  // namespace qwc
