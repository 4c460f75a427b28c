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
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "indicial/expansion.hpp"
#include "indicial/roots.hpp"
#include "indicial/scattering.hpp"
#include "indicial/spectrum.hpp"

namespace indicial {

/// Run configuration shared by every report. Fully deterministic: no seeds,
/// no timestamps.
struct Config {
  std::int64_t lambda_max = 400;
  Tolerances tol;
  /// Allowed distance between a computed special root and its printed closed form.
  double radical_tol = 1e-9;
  double delta = 0.5;
  int scattering_kmax = 50;
  std::filesystem::path output_dir = "indicial_out";
  unsigned threads = 1;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

/// Outcome of checking the structural claims against a root table.
struct ClaimReport {
  std::vector<RootRecord> specials;
  /// Per family, the largest distance from a printed closed form to the
  /// nearest special root (+inf if there are no special roots).
  std::array<double, 3> radical_deviation{};
  GapReport gap;
  std::vector<SymmetryViolation> violations;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

ClaimReport verify_claims(const RootTable& table, double radical_tol);

std::string spectrum_csv(FormKind kind, std::int64_t lambda_max);
std::string root_table_json(const RootTable& table, const ClaimReport& claims);
std::string gap_report_json(const ClaimReport& claims);
std::string symmetry_report_json(const ClaimReport& claims);
std::string claims_summary_text(const ClaimReport& claims);

/// Scatter of the roots in the complex plane on a fixed 800x600 viewBox, with
/// the line Re s = 3 drawn. Ordinary roots are circles of class "root",
/// on-line roots circles of class "special".
std::string figure_svg(const RootTable& table);

struct AlphaSource {
  std::string name;
  double alpha;
};

/// Im(theta_i+) of the three special pairs of a table.
std::vector<AlphaSource> special_alphas(const SpecialExponents& thetas);

struct ScatteringRow {
  std::string source;
  ScatteringSample sample;
  double unimodularity_dev;
  double oracle_dev;
};

std::vector<ScatteringRow> scattering_rows(const std::vector<AlphaSource>& alphas, int k_max);
std::string scattering_csv(const std::vector<ScatteringRow>& rows);
/// Largest of both deviation columns.
double worst_scattering_dev(const std::vector<ScatteringRow>& rows);

/// Expansion for the given input with S2, S3 taken from the scattering
/// matrix at mode `input.k`.
ExpansionSpec expansion_for(const BoundaryInput& input, const SpecialExponents& thetas, double delta);

/// Every report file of a full run, keyed by file name.
struct Bundle {
  std::map<std::string, std::string> files;
  std::string summary;
  bool claims_ok = false;
};

/// Computes the full report set; throws NonConvergence on solver failure.
Bundle run_all(const Config& config);

/// Writes each file to a temporary sibling first and renames it into place
/// only after every file has been written.
void write_files(const std::filesystem::path& dir, const std::map<std::string, std::string>& files);

/// INDICIAL_LAB_THREADS caps the hardware concurrency; always at least 1.
unsigned default_thread_count();

}  // namespace indicial
