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

#include <cmath>

#include "doctest.h"
#include "indicial/error.hpp"
#include "indicial/root_finder.hpp"
#include "indicial/roots.hpp"
#include "oracles.hpp"

using namespace indicial;
using cplx = std::complex<double>;

namespace {

const RootTable& table40() {
  static const RootTable t = build_table(40);
  return t;
}

const RootTable& table400() {
  static const RootTable t = build_table(400, {}, 4);
  return t;
}

std::vector<cplx> roots_of(const RootTable& t, SectorId id, std::int64_t lambda) {
  std::vector<cplx> out;
  for (const auto& r : t.records)
    if (r.sector == id && r.lambda == lambda) out.push_back(r.s);
  return out;
}

}  // namespace

TEST_CASE("exactly six special roots, matching the closed forms") {
  const auto specials = special_records(table40());
  REQUIRE(specials.size() == 6);
  for (const auto& r : specials) CHECK(std::abs(r.s.real() - 3.0) < 1e-12);

  const SpecialExponents th = special_exponents(table40());
  CHECK(th.theta1 == cplx(3.0, 6.0));
  CHECK(std::abs(th.theta2.imag() - oracle::kTheta2Im) < 1e-12);
  CHECK(std::abs(th.theta3.imag() - oracle::kTheta3Im) < 1e-12);
  CHECK(th.minus(2) == cplx(3.0, -th.theta2.imag()));

  // The printed radicals are rational approximations: close, but not to 1e-9.
  const SpecialExponents printed = printed_special_roots();
  CHECK(std::abs(printed.theta2.imag() - th.theta2.imag()) < 1e-8);
  CHECK(std::abs(printed.theta3.imag() - th.theta3.imag()) < 1e-8);
  CHECK(std::abs(printed.theta2.imag() - th.theta2.imag()) > 1e-9);
}

TEST_CASE("special count is stable as the sweep grows") {
  CHECK(special_records(table400()).size() == 6);
  CHECK(special_records(build_table(100)).size() == 6);
}

TEST_CASE("named non-special roots") {
  const auto tth7 = roots_of(table40(), {SectorKind::TTH7}, 0);
  REQUIRE(tth7.size() == 2);
  CHECK(tth7[0] == cplx(0.0));
  CHECK(tth7[1] == cplx(6.0));

  const double r17 = std::sqrt(17.0);
  CHECK(oracle::same_multiset(roots_of(table40(), {SectorKind::TTS4}, 0), {3.0 - r17, 3.0 + r17}, 1e-10));
  CHECK(oracle::same_multiset(roots_of(table40(), {SectorKind::H22H31}, 16), {3.0 - r17, 3.0 + r17}, 1e-10));

  const double r7 = std::sqrt(7.0);
  CHECK(oracle::same_multiset(roots_of(table40(), {SectorKind::H31H40Closed, Star6::PlusI}, 16),
                              {cplx(3 - r7, -3), cplx(3 + r7, -3)}, 1e-10));
  CHECK(oracle::same_multiset(roots_of(table40(), {SectorKind::H31H40Closed, Star6::MinusI}, 16),
                              {cplx(3 - r7, 3), cplx(3 + r7, 3)}, 1e-10));

  const double big = std::sqrt(31.0 + 3.0 * std::sqrt(97.0)), small = std::sqrt(31.0 - 3.0 * std::sqrt(97.0));
  CHECK(oracle::same_multiset(roots_of(table40(), {SectorKind::CoclosedSystem}, 24),
                              {3.0 - big, 3.0 - small, 3.0 + small, 3.0 + big}, 1e-10));
}

TEST_CASE("coupled sectors agree with independent oracles over the full sweep") {
  for (std::int64_t lambda : {16, 40, 72, 112, 160, 216, 280, 352}) {
    CHECK(oracle::same_multiset(roots_of(table400(), {SectorKind::ScalarSystem4x4}, lambda),
                                oracle::scalar_system_roots(static_cast<double>(lambda)), 1e-8));
  }
  for (std::int64_t lambda : {24, 48, 80, 120, 168, 224, 288, 360}) {
    CHECK(oracle::same_multiset(roots_of(table400(), {SectorKind::CoclosedSystem}, lambda),
                                oracle::coclosed_roots(static_cast<double>(lambda)), 1e-9));
  }
}

TEST_CASE("table invariants") {
  const RootTable& t = table400();
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const auto& r = t.records[i];
    CHECK(r.residual <= 1e-10);
    CHECK(r.special == (r.dist_to_line < 1e-6));
    const auto poly = indicial_poly(r.sector, r.lambda).poly.to_complex();
    CHECK(scaled_residual(poly, r.s) <= 1e-10);
    if (i > 0) {
      const auto& p = t.records[i - 1];
      const bool ordered = std::tie(p.sector, p.lambda) < std::tie(r.sector, r.lambda) ||
                           (p.sector == r.sector && p.lambda == r.lambda &&
                            (p.s.real() < r.s.real() || (p.s.real() == r.s.real() && p.s.imag() <= r.s.imag())));
      CHECK(ordered);
    }
  }
}

TEST_CASE("gap scan") {
  const GapReport g40 = gap_scan(table40());
  CHECK(g40.min_distance >= 1.0 - 1e-9);

  const GapReport g = gap_scan(table400());
  const double expected = std::sqrt(31.0 - 3.0 * std::sqrt(97.0));
  CHECK(std::abs(g.min_distance - expected) < 1e-10);
  REQUIRE(g.attained_by.has_value());
  CHECK(g.attained_by->sector.kind == SectorKind::CoclosedSystem);
  CHECK(g.attained_by->lambda == 24);

  const std::vector<SectorPolynomial> only = {indicial_poly({SectorKind::TTH7}, 0)};
  const GapReport trivial = gap_scan(build_table_from(only, 0));
  CHECK(trivial.min_distance == 3.0);

  const std::vector<SectorPolynomial> none = {indicial_poly({SectorKind::H40Harmonic, Star6::PlusI}, 0)};
  CHECK(std::isinf(gap_scan(build_table_from(none, 0)).min_distance));
}

TEST_CASE("symmetry check") {
  CHECK(symmetry_check(table400()).empty());

  const std::vector<SectorPolynomial> pair = {indicial_poly({SectorKind::H40Harmonic, Star6::PlusI}, 0),
                                              indicial_poly({SectorKind::H40Harmonic, Star6::MinusI}, 0)};
  CHECK(symmetry_check(build_table_from(pair, 0)).empty());
  // one branch alone is not closed under conjugation
  CHECK_FALSE(symmetry_check(build_table_from(std::span(pair).first(1), 0)).empty());

  RootTable perturbed = table40();
  for (auto& r : perturbed.records)
    if (r.sector.kind == SectorKind::TTS4 && r.lambda == 16) {
      r.s += 1e-6;
      break;
    }
  const auto v = symmetry_check(perturbed);
  REQUIRE_FALSE(v.empty());
  for (const auto& x : v) {
    CHECK(x.sector == SectorKind::TTS4);
    CHECK(x.lambda == 16);
  }
}

TEST_CASE("thread count does not change the table") {
  const RootTable one = build_table(160, {}, 1);
  const RootTable many = build_table(160, {}, 8);
  REQUIRE(one.records.size() == many.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].sector == many.records[i].sector);
    CHECK(one.records[i].lambda == many.records[i].lambda);
    CHECK(one.records[i].s == many.records[i].s);
    CHECK(one.records[i].residual == many.records[i].residual);
  }
}

TEST_CASE("lambda_max below 40 is rejected") {
  CHECK_THROWS_AS(build_table(39), std::invalid_argument);
}

TEST_CASE("kernel vectors at the special roots") {
  const SpecialExponents th = special_exponents(table40());
  const KernelVector k16 = kernel_vector(16, th.theta2);
  CHECK(k16.smallest_singular_value <= 1e-6);
  double norm = 0.0;
  for (cplx x : k16.v) norm += std::norm(x);
  CHECK(std::abs(norm - 1.0) < 1e-12);
  const Eigen::Vector4cd v(k16.v[0], k16.v[1], k16.v[2], k16.v[3]);
  const double lambda = 16.0;
  const cplx d = th.theta2 * (6.0 - th.theta2);
  CHECK((oracle::scalar_matrix(d, lambda) * v).norm() < 1e-6);
  CHECK(std::isfinite(std::abs(k16.sigma_over_tau)));
  MESSAGE("sigma/tau at (16, theta2+) = " << k16.sigma_over_tau << " (stated ratio 7/4)");

  const KernelVector k40 = kernel_vector(40, th.theta3);
  CHECK(k40.smallest_singular_value <= 1e-6);

  CHECK_THROWS_AS(kernel_vector(16, cplx(10.0)), NotSingular);
}
