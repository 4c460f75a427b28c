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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indicial/sectors.hpp"

namespace indicial {

struct Tolerances {
  /// A root with |Re s - 3| below this is on the L^2 line.
  double line = 1e-6;
  /// Scaled residual |p(s)| / sum|c_i||s|^i every root must reach.
  double residual = 1e-10;
  /// Distance under which two roots count as the same point.
  double pairing = 1e-9;
};

struct RootRecord {
  SectorId sector;
  std::int64_t lambda = 0;
  std::complex<double> s;
  double dist_to_line = 0.0;
  bool special = false;
  double residual = 0.0;
};

/// Roots of every swept sector polynomial, sorted by (sector, lambda, Re, Im)
/// with coincident roots of one polynomial collapsed.
struct RootTable {
  std::vector<RootRecord> records;
  std::int64_t lambda_max = 0;
  Tolerances tolerances;
};

/// Solves every polynomial of sector_sweep(lambda_max). Requires
/// lambda_max >= 40 so that both special closed 1-form eigenvalues are
/// present; `threads` > 1 fans the solves out, the result is identical.
RootTable build_table(std::int64_t lambda_max, const Tolerances& tol = {}, unsigned threads = 1);

/// Same as build_table over an arbitrary list of sector polynomials.
RootTable build_table_from(std::span<const SectorPolynomial> polys, std::int64_t lambda_max,
                           const Tolerances& tol = {}, unsigned threads = 1);

struct GapReport {
  /// +inf when the table has no off-line records.
  double min_distance;
  std::optional<RootRecord> attained_by;
};

/// Smallest |Re s - 3| over the non-special records.
GapReport gap_scan(const RootTable& table);

struct SymmetryViolation {
  SectorKind sector;
  std::int64_t lambda;
  std::complex<double> root;
  std::string reason;
};

/// Checks, per (sector kind, lambda) with star-6 branches merged, that the
/// root multiset is closed under conjugation and under s -> 6 - s.
std::vector<SymmetryViolation> symmetry_check(const RootTable& table);

std::vector<RootRecord> special_records(const RootTable& table);

/// Upper members (Im > 0) of the three on-line pairs; the lower member of
/// each pair is 6 - conj(plus).
struct SpecialExponents {
  std::complex<double> theta1;
  std::complex<double> theta2;
  std::complex<double> theta3;

  std::complex<double> plus(int family) const;
  std::complex<double> minus(int family) const { return std::conj(plus(family)); }
};

/// Reads the three pairs off a table: theta1 from H40Harmonic, theta2 and
/// theta3 from ScalarSystem4x4 at lambda 16 and 40. Throws Error if one is
/// missing.
SpecialExponents special_exponents(const RootTable& table);

/// The closed forms 3 + 6i, 3 + i sqrt(21116145)/1655, 3 + 3i sqrt(582842)/20098
/// as printed alongside the derivation.
SpecialExponents printed_special_roots();

struct KernelVector {
  /// Unit-norm (sigma, tau, xi, delta_H w), phase-fixed so the largest entry is real positive.
  std::array<std::complex<double>, 4> v;
  double smallest_singular_value = 0.0;
  /// sigma / tau, compared against the stated 4 sigma = 7 tau (ratio 7/4).
  std::complex<double> sigma_over_tau;
};

/// Null vector of the 4x4 scalar-system matrix at (lambda, s); throws
/// NotSingular when the smallest singular value exceeds 1e-6.
KernelVector kernel_vector(std::int64_t lambda, std::complex<double> s);

}  // namespace indicial
