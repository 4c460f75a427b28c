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

#include "indicial/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace indicial {

UniPoly::UniPoly(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(GaussianRational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(GaussianRational c, std::size_t power) {
  std::vector<GaussianRational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool UniPoly::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational& c) { return c.is_real(); });
}

GaussianRational UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : GaussianRational{};
}

GaussianRational UniPoly::eval(const GaussianRational& s) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const GaussianRational& c, const UniPoly& p) { return UniPoly::constant(c) * p; }

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == GaussianRational(1);
    if (!unit || i == 0) os << indicial::to_string(c);
    if (i > 0) os << (unit ? "" : "*") << "s" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

BivariatePoly::BivariatePoly(long constant) : BivariatePoly(Rational(constant)) {}

BivariatePoly::BivariatePoly(const Rational& constant) { add_term({0, 0}, constant); }

BivariatePoly BivariatePoly::term(const Rational& c, int s_power, int lambda_power) {
  BivariatePoly p;
  p.add_term({s_power, lambda_power}, c);
  return p;
}

void BivariatePoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational BivariatePoly::coefficient(int s_power, int lambda_power) const {
  auto it = terms_.find({s_power, lambda_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::degree_s() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePoly::degree_lambda() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

namespace {

Rational rational_pow(const Rational& base, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace

Rational BivariatePoly::eval(const Rational& s, const Rational& lambda) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) acc += c * rational_pow(s, e.first) * rational_pow(lambda, e.second);
  return acc;
}

std::complex<double> BivariatePoly::eval(std::complex<double> s, double lambda) const {
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) acc += to_double(c) * std::pow(s, e.first) * std::pow(lambda, e.second);
  return acc;
}

UniPoly BivariatePoly::specialize_lambda(const Rational& lambda) const {
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(std::max(degree_s(), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Rational v = c * rational_pow(lambda, e.second);
    coeffs[static_cast<std::size_t>(e.first)] += GaussianRational(v);
  }
  return UniPoly(std::move(coeffs));
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

BivariatePoly operator-(const BivariatePoly& a) {
  BivariatePoly out;
  out -= a;
  return out;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, Rational(ca * cb));
  return out;
}

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string factors;
    auto append = [&factors](const char* name, int power) {
      if (power == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (power > 1) factors += "^" + std::to_string(power);
    };
    append("s", e.first);
    append("lambda", e.second);
    if (factors.empty()) {
      os << indicial::to_string(mag);
    } else if (mag == 1) {
      os << factors;
    } else {
      os << indicial::to_string(mag) << "*" << factors;
    }
  }
  return os.str();
}

namespace {

BivariatePoly det3(const Matrix4<BivariatePoly>& m, int skip_col) {
  std::array<int, 3> cols{};
  for (int c = 0, k = 0; c < 4; ++c)
    if (c != skip_col) cols[static_cast<std::size_t>(k++)] = c;
  auto at = [&](int r, int k) -> const BivariatePoly& {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[static_cast<std::size_t>(k)])];
  };
  return at(1, 0) * (at(2, 1) * at(3, 2) - at(2, 2) * at(3, 1)) -
         at(1, 1) * (at(2, 0) * at(3, 2) - at(2, 2) * at(3, 0)) +
         at(1, 2) * (at(2, 0) * at(3, 1) - at(2, 1) * at(3, 0));
}

}  // namespace

BivariatePoly determinant4(const Matrix4<BivariatePoly>& m) {
  BivariatePoly det;
  for (int c = 0; c < 4; ++c) {
    const auto& pivot = m[0][static_cast<std::size_t>(c)];
    if (pivot.is_zero()) continue;
    BivariatePoly cofactor = pivot * det3(m, c);
    if (c % 2 == 0) {
      det += cofactor;
    } else {
      det -= cofactor;
    }
  }
  return det;
}

}  // namespace indicial
