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
#include <string>
#include <string_view>
#include <vector>

#include "indicial/roots.hpp"
#include "indicial/sectors.hpp"

namespace indicial {

/// Field components that carry a leading term.
enum class Component { H40, TrH_k, TrS_k, k11, H13, H04 };

std::string_view to_string(Component c);
Component parse_component(std::string_view name);

/// Outgoing boundary data. v1 is an S^6 3-form in the star-6 eigenspace given
/// by v1_star6; v2 and v3 are S^6 functions tensored with the closed 1-form
/// eigenforms at lambda = 16 and 40. A zero amplitude means "absent".
struct BoundaryData {
  std::string v1_label = "v1";
  Star6 v1_star6 = Star6::PlusI;
  std::complex<double> v1 = 0.0;
  std::string v2_label = "v2";
  std::complex<double> v2 = 0.0;
  std::string v3_label = "v3";
  std::complex<double> v3 = 0.0;
};

struct ExpansionTerm {
  Component component;
  /// Opaque operator prefix: "dx/x∧", "7 δ_S", "4 δ_S", "d_H δ_S", "d_H ∗_S" or "d_S ∗_S".
  std::string operator_tag;
  /// Which special pair (1, 2 or 3) the exponent belongs to.
  int family = 0;
  std::complex<double> exponent;
  std::complex<double> coefficient;
  /// Symbolic coefficient, e.g. "v2" or "S2(v2)".
  std::string label;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

struct ExpansionSpec {
  std::vector<ExpansionTerm> terms;
  double delta = 0.5;

  double remainder_order() const { return 3.0 + delta; }
  friend bool operator==(const ExpansionSpec&, const ExpansionSpec&) = default;
};

/// Leading-order terms of (k, H) for the given data. Each populated datum
/// contributes an outgoing term x^{theta+} with coefficient v and an incoming
/// term x^{theta-} with coefficient S(v); the trace components carry weights
/// 7 and 4. s1..s3 are the scattering values and must be unimodular within
/// 1e-8 (std::invalid_argument); delta outside (0, 1) raises BadDelta.
ExpansionSpec build_expansion(const BoundaryData& data, const SpecialExponents& thetas, std::complex<double> s1,
                              std::complex<double> s2, std::complex<double> s3, double delta);

struct TermResidual {
  std::size_t term_index;
  /// min |p(theta)| over the sector polynomials of the term's family.
  double residual;
  bool certified;
  /// remainder order 3 + delta when certified, otherwise Re(theta).
  double leading_residual_exponent;
};

/// The sector polynomials that certify each family: H40Harmonic (both signs),
/// ScalarSystem4x4 at 16 and at 40.
std::vector<SectorPolynomial> certification_polys();

/// Evaluates each term's exponent in its family's indicial polynomials; a
/// residual <= 1e-8 certifies that the leading term cancels.
std::vector<TermResidual> residual_order(const ExpansionSpec& spec, std::span<const SectorPolynomial> polys);

enum class RenderFormat { Text, Json };

std::string render(const ExpansionSpec& spec, RenderFormat format);

/// Inverse of render(spec, RenderFormat::Json); throws Error on malformed input.
ExpansionSpec parse_expansion_json(std::string_view text);

/// Reads boundary data from JSON such as
///   {"v1": {"amplitude": {"re": 1, "im": 0}, "star6": "+i", "label": "v1"},
///    "v2": {"amplitude": {"re": 1, "im": 0}}, "s1": {"re": 1, "im": 0}, "k": 0}
/// Empty or whitespace-only text yields all-zero data.
struct BoundaryInput {
  BoundaryData data;
  /// Scattering value for v1; no closed form is used for forms.
  std::complex<double> s1 = 1.0;
  /// S^6 mode index used to evaluate S2 and S3.
  int k = 0;
};
BoundaryInput parse_boundary_input(std::string_view text);

}  // namespace indicial
