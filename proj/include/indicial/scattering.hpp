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
#include <cstdint>
#include <span>
#include <vector>

namespace indicial {

/// Principal log Gamma. Lanczos (g = 7, nine terms) for Re z >= 1/2, the
/// reflection formula elsewhere. Throws PoleAtNonpositiveInteger on poles.
std::complex<double> log_gamma(std::complex<double> z);

/// One S^6 mode of the hyperbolic scattering matrix at s = 3 + i alpha.
struct ScatteringSample {
  int k = 0;
  std::int64_t lambda6 = 0;  // k(k+5)
  double alpha = 0.0;
  std::complex<double> phase2;   // e^{2 i theta(lambda)}
  std::complex<double> s_value;  // 2^{-2 i alpha} e^{2 i theta(lambda)}
};

/// Gamma(-ia)/Gamma(ia) * Gamma(k+3+ia)/Gamma(k+3-ia), where k + 3 is
/// sqrt(lambda + 25/4) + 1/2 for lambda = k(k+5). Defined for any alpha != 0.
std::complex<double> gamma_ratio_phase(int k, double alpha);

/// -prod_{j=1}^{k+2} (j + i alpha)/(j - i alpha): the same phase with the Gamma
/// recurrence applied, used as a cross-check in reports.
std::complex<double> finite_product_phase(int k, double alpha);

/// Requires k >= 0 and alpha > 0 (std::invalid_argument otherwise).
ScatteringSample phase(int k, double alpha);

/// Leading radial profile h(x) = x^{i alpha} + 2^{-2 i alpha} phase2 x^{-i alpha}.
std::complex<double> radial_profile(double alpha, std::complex<double> phase2, double x);

/// Rotates h by its phase at xs[0] and returns max |Im(e^{-i phi} h(x))| / |h(x)|
/// over xs. Zero means h is a unimodular constant times a real function.
/// Throws DegenerateProfile if |h| < 1e-12 at a sample.
double real_profile_check(double alpha, std::complex<double> phase2, std::span<const double> xs);

/// n points geometrically spaced from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

}  // namespace indicial
