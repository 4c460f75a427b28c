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

#include <random>

#include "doctest.h"
#include "indicial/polynomial.hpp"
#include "indicial/sectors.hpp"
#include "oracles.hpp"

using namespace indicial;
using B = BivariatePoly;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 17);
  return make_rational(num(rng), den(rng));
}

B random_bivariate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2), pick(0, 3);
  B p;
  for (int i = 0; i <= deg(rng); ++i)
    for (int j = 0; j <= deg(rng); ++j)
      if (pick(rng) != 0) p += B::term(random_rational(rng), i, j);
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  const GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
  CHECK(to_string(z) == "(1/2-3/4i)");
  CHECK(z * z.conj() == GaussianRational(make_rational(13, 16)));
  CHECK((z / z) == GaussianRational(1));
}

TEST_CASE("univariate arithmetic") {
  const UniPoly s = UniPoly::variable();
  const UniPoly one = UniPoly::constant(1);
  const UniPoly prod = (s * s + one) * (s - one);
  CHECK(prod == UniPoly({-1, 1, -1, 1}));
  CHECK(prod.degree() == 3);
  CHECK(prod.to_string() == "s^3 + -1*s^2 + s + -1");

  const UniPoly p = s * s - GaussianRational(6) * s;
  CHECK(p.eval(GaussianRational(0)).is_zero());
  CHECK(p.eval(GaussianRational(6)).is_zero());
  CHECK(p.eval(std::complex<double>(0.0, 0.0)) == std::complex<double>(0.0, 0.0));

  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(UniPoly({0, 0, 0}).is_zero());
}

TEST_CASE("bivariate product matches pointwise evaluation") {
  // (12 + lambda + D)(72 + lambda + D) with D = s(6 - s)
  const B s = B::s(), lam = B::lambda();
  const B d = s * (B(6) - s);
  const B prod = (B(12) + lam + d) * (B(72) + lam + d);
  CHECK(prod.degree_s() == 4);
  CHECK(prod.degree_lambda() == 2);
  CHECK(prod.coefficient(4, 0) == 1);
  CHECK(prod.coefficient(0, 0) == 864);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational sv = random_rational(rng), lv = random_rational(rng);
    const Rational dv = sv * (6 - sv);
    const Rational expected = (12 + lv + dv) * (72 + lv + dv);
    CHECK(prod.eval(sv, lv) == expected);
  }
}

TEST_CASE("bivariate terms are canonical and ordered") {
  const B p = B::s() - B::s() + B::term(make_rational(2, 4), 0, 1);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.coefficient(0, 1) == make_rational(1, 2));
  const B q = B::term(3, 2, 0) + B::term(1, 0, 1) + B::term(-1, 1, 1);
  std::vector<B::Exponent> keys;
  for (const auto& [e, c] : q.terms()) keys.push_back(e);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(q.to_string() == "3*s^2 - s*lambda + lambda");
  CHECK(q.specialize_lambda(2) == UniPoly({2, -2, 3}));
}

TEST_CASE("determinant4 of identity and diagonal") {
  Matrix4<B> id{};
  for (int i = 0; i < 4; ++i) id[i][i] = B(1);
  CHECK(determinant4(id) == B(1));

  Matrix4<B> diag{};
  const std::array<B, 4> entries = {B::s(), B::lambda(), B(3), B::s() + B(1)};
  for (int i = 0; i < 4; ++i) diag[i][i] = entries[i];
  CHECK(determinant4(diag) == entries[0] * entries[1] * entries[2] * entries[3]);
}

TEST_CASE("determinant4 agrees with numeric LU on 1000 random matrices") {
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> point(-2.0, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix4<B> m;
    for (auto& row : m)
      for (auto& e : row) e = random_bivariate(rng);
    const B det = determinant4(m);
    const double sv = point(rng), lv = point(rng);
    Eigen::Matrix4d num;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) num(r, c) = m[r][c].eval(std::complex<double>(sv), lv).real();
    const double expected = num.partialPivLu().determinant();
    const double got = det.eval(std::complex<double>(sv), lv).real();
    const double scale = std::max(1.0, std::abs(expected));
    CHECK(std::abs(got - expected) <= 1e-10 * scale);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("scalar-system determinant reproduces the printed degree-8 polynomial") {
  const B& p = scalar_system_polynomial();
  CHECK(p.degree_s() == 8);
  CHECK(p.degree_lambda() == 4);
  CHECK(p.coefficient(8, 0) == 1);
  CHECK(p.coefficient(7, 0) == -24);
  CHECK(p.coefficient(6, 0) == 162);
  CHECK(p.coefficient(1, 3) == 24);  // the "24 S*lambda^3" term
  CHECK(p.coefficient(0, 0) == 0);
  CHECK(compare_with_printed().empty());
}

TEST_CASE("uniform Laplacian substitution does not reproduce the printed polynomial") {
  auto m = scalar_system_matrix();
  m[3][3] += B(6);  // undo the 1-form shift
  const B uniform = -determinant4(m);
  CHECK_FALSE(uniform == printed_scalar_polynomial());
  // With the uniform substitution the lambda = 0 block contributes D(D - 24)
  // instead of D(D - 30); the s^6 coefficient is where it first shows.
  CHECK(uniform.coefficient(6, 0) == 156);
}
