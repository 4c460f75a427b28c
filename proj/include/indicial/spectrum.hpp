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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace indicial {

/// Eigenform families. The *4 kinds live on S^4 with metric g/4, so their
/// eigenvalues are four times the unit-sphere ones; Function6 is on the unit S^6.
enum class FormKind { Function4, Closed1Form4, Coclosed1Form4, Function6 };

struct EigenEntry {
  FormKind kind;
  int k;
  std::int64_t lambda;
  std::int64_t multiplicity;

  friend bool operator==(const EigenEntry&, const EigenEntry&) = default;
};

std::string_view to_string(FormKind kind);
/// Accepts the CLI spellings: function4, closed1, coclosed1, function6.
std::optional<FormKind> parse_form_kind(std::string_view name);

int k_min(FormKind kind);

/// Closed-form eigenvalue of mode k; throws IndexBelowMinimum for k < k_min.
std::int64_t eigenvalue(FormKind kind, int k);

/// Dimension of the mode-k eigenspace; throws IndexBelowMinimum for k < k_min.
/// The coclosed 1-form value is informational (no root computation uses it).
std::int64_t multiplicity(FormKind kind, int k);

/// All modes with eigenvalue <= lambda_max, ascending.
std::vector<EigenEntry> spectrum_table(FormKind kind, std::int64_t lambda_max);

/// Mode index with the given eigenvalue, if lambda is in the spectrum.
std::optional<int> mode_index(FormKind kind, std::int64_t lambda);

}  // namespace indicial
