// Copyright 2026 The indicial-lab Authors
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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "indicial/rational.hpp"

namespace indicial {

/// Univariate polynomial in s over Q(i). Coefficient index is the power of s;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coefficients);

  static UniPoly constant(GaussianRational c);
  static UniPoly monomial(GaussianRational c, std::size_t power);
  /// The polynomial `s`.
  static UniPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_real_coefficients() const;

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(std::size_t power) const;

  GaussianRational eval(const GaussianRational& s) const;
  /// Horner evaluation in double precision.
  std::complex<double> eval(std::complex<double> s) const;

  std::vector<std::complex<double>> to_complex() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const GaussianRational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

/// Polynomial in (s, lambda) with rational coefficients. Terms are keyed by
/// (power of s, power of lambda) and iterate in that lexicographic order; zero
/// coefficients are never stored.
class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;

  BivariatePoly() = default;
  BivariatePoly(long constant);  // NOLINT(google-explicit-constructor)
  BivariatePoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static BivariatePoly term(const Rational& c, int s_power, int lambda_power);
  static BivariatePoly s() { return term(1, 1, 0); }
  static BivariatePoly lambda() { return term(1, 0, 1); }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(int s_power, int lambda_power) const;
  bool is_zero() const { return terms_.empty(); }
  int degree_s() const;
  int degree_lambda() const;

  Rational eval(const Rational& s, const Rational& lambda) const;
  std::complex<double> eval(std::complex<double> s, double lambda) const;

  /// Fixes lambda and returns the resulting polynomial in s.
  UniPoly specialize_lambda(const Rational& lambda) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator-(const BivariatePoly& a);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form with descending powers, e.g. "s^2 - 6*s + lambda".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);

  std::map<Exponent, Rational> terms_;
};

template <class T>
using Matrix4 = std::array<std::array<T, 4>, 4>;

/// Exact determinant by cofactor expansion along the first row.
BivariatePoly determinant4(const Matrix4<BivariatePoly>& m);

}  // namespace indicial
