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
#include <vector>

#include "doctest.h"
#include "indicial/error.hpp"
#include "indicial/root_finder.hpp"
#include "indicial/sectors.hpp"
#include "oracles.hpp"

using namespace indicial;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> values(const std::vector<ComplexRoot>& roots) {
  std::vector<cplx> out;
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

std::vector<cplx> from_roots(const std::vector<cplx>& zs) {
  std::vector<cplx> c{1.0};
  for (cplx z : zs) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= z * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("small worked examples") {
  // s^2 - 6s
  const std::vector<cplx> a{0.0, -6.0, 1.0};
  auto r = solve_roots(a);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == cplx(0.0));
  CHECK(std::abs(r[1].value - 6.0) < 1e-14);

  // (s - 3)^2 + 36
  const std::vector<cplx> b{45.0, -6.0, 1.0};
  r = solve_roots(b);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].value - cplx(3, -6)) < 1e-12);
  CHECK(std::abs(r[1].value - cplx(3, 6)) < 1e-12);

  // complex coefficients: i(s - 3) - 6
  const std::vector<cplx> c{cplx(-6, -3), cplx(0, 1)};
  r = solve_roots(c);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0].value - cplx(3, -6)) < 1e-14);
}

TEST_CASE("scalar system at lambda = 16 carries the off-line pair near 3 +- 2.7766i") {
  const auto p = indicial_poly({SectorKind::ScalarSystem4x4}, 16).poly.to_complex();
  const auto r = solve_roots(p);
  REQUIRE(r.size() == 8);
  int hits = 0;
  for (const auto& root : r) {
    if (std::abs(root.value.real() - 3.0) < 1e-9 && std::abs(std::abs(root.value.imag()) - oracle::kTheta2Im) < 1e-9)
      ++hits;
    CHECK(root.residual <= 1e-10);
  }
  CHECK(hits == 2);
  CHECK(oracle::same_multiset(values(r), oracle::eigen_roots(p), 1e-8));
}

TEST_CASE("random polynomials: count, residual and conjugate closure") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = deg(rng);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = coef(rng);
    if (std::abs(c.back()) < 0.1) c.back() = 1.0;
    const auto r = solve_roots(c);
    REQUIRE(r.size() == static_cast<std::size_t>(n));
    std::vector<cplx> conj;
    for (const auto& root : r) {
      CHECK(root.residual <= 1e-10);
      CHECK(scaled_residual(c, root.value) <= 1e-10);
      conj.push_back(std::conj(root.value));
    }
    CHECK(oracle::same_multiset(values(r), conj, 1e-6));
    CHECK(oracle::same_multiset(values(r), oracle::eigen_roots(c), 1e-6));
  }
}

TEST_CASE("roots come back sorted by real then imaginary part") {
  const auto r = solve_roots(from_roots({cplx(2, 1), cplx(-1, 0), cplx(2, -1), cplx(0.5, 3)}));
  for (std::size_t i = 1; i < r.size(); ++i) {
    const bool ordered = r[i - 1].value.real() < r[i].value.real() ||
                         (r[i - 1].value.real() == r[i].value.real() && r[i - 1].value.imag() <= r[i].value.imag());
    CHECK(ordered);
  }
}

TEST_CASE("double roots are found and flagged") {
  const auto r = solve_roots(from_roots({3.0, 3.0, -1.0}));
  REQUIRE(r.size() == 3);
  CHECK(std::abs(r[0].value + 1.0) < 1e-12);
  CHECK(r[0].multiplicity_hint == 1);
  CHECK(std::abs(r[1].value - 3.0) < 1e-7);
  CHECK(std::abs(r[2].value - 3.0) < 1e-7);
  CHECK(r[1].multiplicity_hint == 2);
  CHECK(r[2].multiplicity_hint == 2);
}

TEST_CASE("exact zero roots are stripped before the eigenvalue step") {
  const std::vector<cplx> c{0.0, 0.0, -4.0, 1.0};  // s^3 - 4 s^2
  const auto r = solve_roots(c);
  REQUIRE(r.size() == 3);
  CHECK(r[0].value == cplx(0.0));
  CHECK(r[1].value == cplx(0.0));
  CHECK(r[0].multiplicity_hint == 2);
  CHECK(std::abs(r[2].value - 4.0) < 1e-14);
}

TEST_CASE("unreachable residual tolerance raises NonConvergence") {
  const std::vector<cplx> c = from_roots({cplx(1.0 / 3.0), cplx(0.1, 0.7), cplx(0.1, -0.7), cplx(-2.0 / 7.0)});
  RootFinderOptions opts;
  opts.residual_tol = 1e-300;
  CHECK_THROWS_AS(solve_roots(c, opts), NonConvergence);
}

TEST_CASE("invalid input") {
  const std::vector<cplx> constant{5.0};
  CHECK_THROWS_AS(solve_roots(constant), std::invalid_argument);
  const std::vector<cplx> empty;
  CHECK_THROWS_AS(solve_roots(empty), std::invalid_argument);
  const std::vector<cplx> tiny_lead{1.0, 1e-320};
  CHECK_THROWS_AS(solve_roots(tiny_lead), std::invalid_argument);
}
