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

#include "indicial/rational.hpp"

#include <stdexcept>

namespace indicial {

Rational make_rational(long numerator, long denominator) {
  return make_rational(mpz_class(numerator), mpz_class(denominator));
}

Rational make_rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(i)");
  Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
  Rational re = (a.re_ * b.re_ + a.im_ * b.im_) / norm;
  Rational im = (a.im_ * b.re_ - a.re_ * b.im_) / norm;
  return {std::move(re), std::move(im)};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + "i";
  std::string im = to_string(z.im());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return "(" + to_string(z.re()) + im + "i)";
}

}  // namespace indicial
