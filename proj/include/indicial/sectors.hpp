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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "indicial/polynomial.hpp"
#include "indicial/spectrum.hpp"

namespace indicial {

/// Blocks of the linearized system after Hodge decomposition on S^4.
enum class SectorKind {
  TTH7,             // trace-free 2-tensor on H^7
  TTS4,             // trace-free 2-tensor on S^4
  H40Harmonic,      // H_(4,0) on harmonic functions
  ScalarSystem4x4,  // (sigma, tau, xi, delta_H w) on closed 1-form eigenvalues
  H31H40Closed,     // H_(3,1), H_(4,0) on closed 1-forms
  CoclosedSystem,   // k_(1,1), H_(1,3), H_(2,2) on coclosed 1-forms
  H22H31,           // H_(2,2), H_(3,1)
};

/// Eigenvalue of the S^6 Hodge star on the normal component; only the
/// H40Harmonic and H31H40Closed sectors carry one.
enum class Star6 { None, PlusI, MinusI };

struct SectorId {
  SectorKind kind;
  Star6 star6 = Star6::None;

  friend auto operator<=>(const SectorId&, const SectorId&) = default;
};

std::string to_string(SectorKind kind);
std::string to_string(Star6 sign);
/// e.g. "TTH7", "H40Harmonic(+i)".
std::string to_string(const SectorId& id);

/// Every sector in sweep order, star-6 branches expanded.
std::vector<SectorId> all_sectors();

/// Spectra that supply lambda for a sector.
std::vector<FormKind> lambda_kinds(SectorKind kind);

struct SectorPolynomial {
  SectorId sector;
  std::int64_t lambda = 0;
  UniPoly poly;
  std::vector<FormKind> lambda_kinds;
};

/// Indicial polynomial p(s) of a sector at eigenvalue lambda. Throws
/// InadmissibleLambda if lambda is not in the sector's spectrum (H40Harmonic
/// accepts only lambda = 0) or the star-6 sign is missing or misplaced.
SectorPolynomial indicial_poly(const SectorId& sector, std::int64_t lambda);

/// Every admissible (sector, lambda) with lambda <= lambda_max, ordered by
/// sector then lambda.
std::vector<SectorPolynomial> sector_sweep(std::int64_t lambda_max);

/// The 4x4 indicial matrix acting on (sigma, tau, xi, delta_H w). Function
/// entries use the hyperbolic Laplacian indicial polynomial s(6 - s); the
/// (4,4) entry, which comes from the H^7 1-form equation, uses s(6 - s) - 6.
Matrix4<BivariatePoly> scalar_system_matrix();

/// Negated determinant of scalar_system_matrix(), so the s^8 coefficient is +1.
const BivariatePoly& scalar_system_polynomial();

/// The degree-8 determinant exactly as printed in the source derivation.
BivariatePoly printed_scalar_polynomial();

struct CoefficientDiff {
  int s_power;
  int lambda_power;
  Rational computed;
  Rational printed;
};

/// Coefficients where scalar_system_polynomial() and the printed polynomial
/// differ; empty when they agree.
std::vector<CoefficientDiff> compare_with_printed();

/// lambda^2 - (36 + (s-1)(s-5) + s^2 - 6s - 1) lambda - (s-1)(s-5)(-s^2 + 6s + 1).
const BivariatePoly& coclosed_system_polynomial();

}  // namespace indicial
