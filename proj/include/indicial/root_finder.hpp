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

#include <complex>
#include <span>
#include <vector>

namespace indicial {

struct ComplexRoot {
  std::complex<double> value;
  /// |p(value)| / sum_i |c_i| |value|^i after polishing.
  double residual = 0.0;
  /// Number of computed roots (this one included) clustered within 1e-6 of it.
  int multiplicity_hint = 1;
};

struct RootFinderOptions {
  double residual_tol = 1e-10;
  int max_iter = 100;
};

/// All roots of sum_i coeffs[i] s^i, with multiplicity, sorted by (Re, Im).
///
/// Exact zero roots are split off first; the remaining polynomial is made
/// monic and its companion matrix is balanced, reduced to Schur form by
/// shifted complex QR, and every eigenvalue is polished by Newton iteration
/// on the original coefficients.
///
/// Throws std::invalid_argument if the degree is below one or the leading
/// coefficient is numerically zero, and NonConvergence when a root cannot be
/// brought under residual_tol within max_iter steps.
std::vector<ComplexRoot> solve_roots(std::span<const std::complex<double>> coeffs,
                                     const RootFinderOptions& options = {});

/// Eigenvalues of the balanced companion matrix of a polynomial with nonzero
/// constant term, unpolished and unsorted.
std::vector<std::complex<double>> companion_eigenvalues(std::span<const std::complex<double>> coeffs);

/// |p(z)| / sum_i |c_i| |z|^i, the relative backward error of z as a root.
double scaled_residual(std::span<const std::complex<double>> coeffs, std::complex<double> z);

}  // namespace indicial
