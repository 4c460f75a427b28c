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

#include "indicial/sectors.hpp"

#include <algorithm>

#include "indicial/error.hpp"

namespace indicial {

namespace {

using B = BivariatePoly;

B hyperbolic_laplacian() {
  const B s = B::s();
  return s * (B(6) - s);
}

UniPoly from_bivariate(const B& p, std::int64_t lambda) { return p.specialize_lambda(Rational(static_cast<long>(lambda))); }

UniPoly linear_star6(Star6 sign) {
  // (+-i)(s - 3) - 6
  const GaussianRational unit = sign == Star6::PlusI ? GaussianRational::i() : -GaussianRational::i();
  return UniPoly({unit * GaussianRational(-3) - GaussianRational(6), unit});
}

UniPoly closed_star6(Star6 sign, std::int64_t lambda) {
  // (s - 3)^2 +- 6i (s - 3) - lambda
  const GaussianRational unit = sign == Star6::PlusI ? GaussianRational::i() : -GaussianRational::i();
  const UniPoly u({GaussianRational(-3), GaussianRational(1)});
  return u * u + (GaussianRational(6) * unit) * u - UniPoly::constant(GaussianRational(Rational(static_cast<long>(lambda))));
}

bool admissible(SectorKind kind, std::int64_t lambda) {
  if (kind == SectorKind::H40Harmonic) return lambda == 0;
  const auto kinds = lambda_kinds(kind);
  return std::any_of(kinds.begin(), kinds.end(), [lambda](FormKind k) { return mode_index(k, lambda).has_value(); });
}

bool has_star6(SectorKind kind) { return kind == SectorKind::H40Harmonic || kind == SectorKind::H31H40Closed; }

}  // namespace

std::string to_string(SectorKind kind) {
  switch (kind) {
    case SectorKind::TTH7: return "TTH7";
    case SectorKind::TTS4: return "TTS4";
    case SectorKind::H40Harmonic: return "H40Harmonic";
    case SectorKind::ScalarSystem4x4: return "ScalarSystem4x4";
    case SectorKind::H31H40Closed: return "H31H40Closed";
    case SectorKind::CoclosedSystem: return "CoclosedSystem";
    case SectorKind::H22H31: return "H22H31";
  }
  return "?";
}

std::string to_string(Star6 sign) {
  switch (sign) {
    case Star6::None: return "";
    case Star6::PlusI: return "+i";
    case Star6::MinusI: return "-i";
  }
  return "?";
}

std::string to_string(const SectorId& id) {
  if (id.star6 == Star6::None) return to_string(id.kind);
  return to_string(id.kind) + "(" + to_string(id.star6) + ")";
}

std::vector<SectorId> all_sectors() {
  return {
      {SectorKind::TTH7},
      {SectorKind::TTS4},
      {SectorKind::H40Harmonic, Star6::PlusI},
      {SectorKind::H40Harmonic, Star6::MinusI},
      {SectorKind::ScalarSystem4x4},
      {SectorKind::H31H40Closed, Star6::PlusI},
      {SectorKind::H31H40Closed, Star6::MinusI},
      {SectorKind::CoclosedSystem},
      {SectorKind::H22H31},
  };
}

std::vector<FormKind> lambda_kinds(SectorKind kind) {
  switch (kind) {
    case SectorKind::TTH7:
    case SectorKind::TTS4:
    case SectorKind::H40Harmonic: return {FormKind::Function4};
    case SectorKind::ScalarSystem4x4:
    case SectorKind::H31H40Closed:
    case SectorKind::H22H31: return {FormKind::Closed1Form4};
    case SectorKind::CoclosedSystem: return {FormKind::Coclosed1Form4};
  }
  return {};
}

Matrix4<BivariatePoly> scalar_system_matrix() {
  const B lam = B::lambda();
  const B d = hyperbolic_laplacian();
  const B d_one_form = d - B(6);
  return {{
      {B(12) + lam + d, B(-48), B(-4) * lam, B(0)},
      {B(0), B(72) + lam + d, B(8) * lam, B(0)},
      {B(21), B(-12), -lam - d, B(-6)},
      {B(0), B(0), B(6) * d, B(12) + lam + d_one_form},
  }};
}

const BivariatePoly& scalar_system_polynomial() {
  static const BivariatePoly poly = -determinant4(scalar_system_matrix());
  return poly;
}

BivariatePoly printed_scalar_polynomial() {
  struct Term {
    long c;
    int s;
    int l;
  };
  static constexpr Term kTerms[] = {
      {1, 0, 4},      {-4, 2, 3},     {24, 1, 3},     {-90, 0, 3},    {6, 4, 2},       {-72, 3, 2},
      {342, 2, 2},    {-756, 1, 2},   {1152, 0, 2},   {-4, 6, 1},     {72, 5, 1},      {-414, 4, 1},
      {648, 3, 1},    {1152, 2, 1},   {-3024, 1, 1},  {10368, 0, 1},  {1, 8, 0},       {-24, 7, 0},
      {162, 6, 0},    {108, 5, 0},    {-6192, 4, 0},  {31536, 3, 0},  {-33696, 2, 0},  {-155520, 1, 0},
  };
  BivariatePoly p;
  for (const auto& t : kTerms) p += B::term(Rational(t.c), t.s, t.l);
  return p;
}

std::vector<CoefficientDiff> compare_with_printed() {
  const BivariatePoly& computed = scalar_system_polynomial();
  const BivariatePoly printed = printed_scalar_polynomial();
  std::vector<BivariatePoly::Exponent> keys;
  for (const auto& [e, c] : computed.terms()) keys.push_back(e);
  for (const auto& [e, c] : printed.terms()) keys.push_back(e);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<CoefficientDiff> diffs;
  for (const auto& [i, j] : keys) {
    Rational a = computed.coefficient(i, j), b = printed.coefficient(i, j);
    if (a != b) diffs.push_back({i, j, a, b});
  }
  return diffs;
}

const BivariatePoly& coclosed_system_polynomial() {
  static const BivariatePoly poly = [] {
    const B s = B::s(), lam = B::lambda();
    const B a = (s - B(1)) * (s - B(5));
    return lam * lam - (B(36) + a + s * s - B(6) * s - B(1)) * lam - a * (-(s * s) + B(6) * s + B(1));
  }();
  return poly;
}

SectorPolynomial indicial_poly(const SectorId& sector, std::int64_t lambda) {
  const bool wants_sign = has_star6(sector.kind);
  if (wants_sign != (sector.star6 != Star6::None))
    throw InadmissibleLambda(to_string(sector) + ": star-6 sign " + (wants_sign ? "required" : "not applicable"));
  if (!admissible(sector.kind, lambda))
    throw InadmissibleLambda(to_string(sector) + ": lambda = " + std::to_string(lambda) + " is not admissible");

  const B s = B::s(), lam = B::lambda();
  UniPoly poly;
  switch (sector.kind) {
    case SectorKind::TTH7: poly = from_bivariate(lam - s * s + B(6) * s, lambda); break;
    case SectorKind::TTS4: poly = from_bivariate(lam - s * s + B(6) * s + B(8), lambda); break;
    case SectorKind::H40Harmonic: poly = linear_star6(sector.star6); break;
    case SectorKind::ScalarSystem4x4: poly = from_bivariate(scalar_system_polynomial(), lambda); break;
    case SectorKind::H31H40Closed: poly = closed_star6(sector.star6, lambda); break;
    case SectorKind::CoclosedSystem: poly = from_bivariate(coclosed_system_polynomial(), lambda); break;
    case SectorKind::H22H31: poly = from_bivariate(lam - (B(2) - s) * (B(4) - s), lambda); break;
  }
  return {sector, lambda, std::move(poly), lambda_kinds(sector.kind)};
}

std::vector<SectorPolynomial> sector_sweep(std::int64_t lambda_max) {
  std::vector<SectorPolynomial> out;
  for (const SectorId& id : all_sectors()) {
    std::vector<std::int64_t> lambdas;
    if (id.kind == SectorKind::H40Harmonic) {
      if (lambda_max >= 0) lambdas.push_back(0);
    } else {
      for (FormKind kind : lambda_kinds(id.kind))
        for (const EigenEntry& e : spectrum_table(kind, lambda_max)) lambdas.push_back(e.lambda);
      std::sort(lambdas.begin(), lambdas.end());
      lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    }
    for (std::int64_t l : lambdas) out.push_back(indicial_poly(id, l));
  }
  return out;
}

}  // namespace indicial
