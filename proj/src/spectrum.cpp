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

#include "indicial/spectrum.hpp"

#include <string>

#include "indicial/error.hpp"

namespace indicial {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void require_mode(FormKind kind, int k) {
  if (k < k_min(kind))
    throw IndexBelowMinimum("mode index " + std::to_string(k) + " below minimum " + std::to_string(k_min(kind)) +
                            " for " + std::string(to_string(kind)));
}

}  // namespace

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::Function4: return "function4";
    case FormKind::Closed1Form4: return "closed1";
    case FormKind::Coclosed1Form4: return "coclosed1";
    case FormKind::Function6: return "function6";
  }
  return "?";
}

std::optional<FormKind> parse_form_kind(std::string_view name) {
  for (FormKind k : {FormKind::Function4, FormKind::Closed1Form4, FormKind::Coclosed1Form4, FormKind::Function6})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

int k_min(FormKind kind) {
  switch (kind) {
    case FormKind::Closed1Form4:
    case FormKind::Coclosed1Form4: return 1;
    case FormKind::Function4:
    case FormKind::Function6: return 0;
  }
  return 0;
}

std::int64_t eigenvalue(FormKind kind, int k) {
  require_mode(kind, k);
  const std::int64_t m = k;
  switch (kind) {
    case FormKind::Function4:
    case FormKind::Closed1Form4: return 4 * m * (m + 3);
    case FormKind::Coclosed1Form4: return 4 * (m + 1) * (m + 2);
    case FormKind::Function6: return m * (m + 5);
  }
  return 0;
}

std::int64_t multiplicity(FormKind kind, int k) {
  require_mode(kind, k);
  const std::int64_t m = k;
  switch (kind) {
    // Degree-k harmonics in five variables; closed 1-forms are their differentials.
    case FormKind::Function4:
    case FormKind::Closed1Form4: return (2 * m + 3) * (m + 1) * (m + 2) / 6;
    // Coexact 1-forms of degree k on S^n: k(k+n-1)(2k+n-1)(k+n-3)! / ((n-2)! (k+1)!) at n = 4.
    case FormKind::Coclosed1Form4: return m * (m + 3) * (2 * m + 3) / 2;
    case FormKind::Function6: return binomial(m + 6, 6) - binomial(m + 4, 6);
  }
  return 0;
}

std::vector<EigenEntry> spectrum_table(FormKind kind, std::int64_t lambda_max) {
  std::vector<EigenEntry> out;
  for (int k = k_min(kind);; ++k) {
    const std::int64_t lambda = eigenvalue(kind, k);
    if (lambda > lambda_max) break;
    out.push_back({kind, k, lambda, multiplicity(kind, k)});
  }
  return out;
}

std::optional<int> mode_index(FormKind kind, std::int64_t lambda) {
  for (int k = k_min(kind);; ++k) {
    const std::int64_t v = eigenvalue(kind, k);
    if (v == lambda) return k;
    if (v > lambda) return std::nullopt;
  }
}

}  // namespace indicial
