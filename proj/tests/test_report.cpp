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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "indicial/report.hpp"
#include "json.hpp"

using namespace indicial;
using nlohmann::json;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("config validation") {
  Config c;
  CHECK_NOTHROW(c.validate());
  c.lambda_max = 39;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Config{};
  c.delta = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Config{};
  c.tol.line = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("claims at the default radical tolerance report the printed-radical deviation") {
  const RootTable table = build_table(40);
  const ClaimReport strict = verify_claims(table, 1e-9);
  CHECK(strict.specials.size() == 6);
  CHECK(strict.radical_deviation[0] == 0.0);
  CHECK(strict.radical_deviation[1] > 1e-9);
  CHECK(strict.radical_deviation[1] < 1e-8);
  CHECK(strict.radical_deviation[2] > 1e-9);
  CHECK(strict.radical_deviation[2] < 1e-8);
  CHECK(strict.failures.size() == 2);
  CHECK(verify_claims(table, 1e-8).ok());
}

TEST_CASE("tampered line tolerance breaks the special count") {
  Tolerances tol;
  tol.line = 10.0;
  const ClaimReport claims = verify_claims(build_table(40, tol), 1e-8);
  CHECK_FALSE(claims.ok());
  CHECK(claims.specials.size() > 6);
}

TEST_CASE("spectrum csv") {
  CHECK(spectrum_csv(FormKind::Function4, 40) ==
        "kind,k,lambda,multiplicity\nfunction4,0,0,1\nfunction4,1,16,5\nfunction4,2,40,14\n");
  CHECK(spectrum_csv(FormKind::Closed1Form4, 0) == "kind,k,lambda,multiplicity\n");
}

TEST_CASE("root table json mirrors the records") {
  const RootTable table = build_table(40);
  const ClaimReport claims = verify_claims(table, 1e-9);
  const json doc = json::parse(root_table_json(table, claims));
  REQUIRE(doc.at("records").size() == table.records.size());
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    const auto& r = doc.at("records")[i];
    CHECK(r.at("s").at("re").get<double>() == table.records[i].s.real());
    CHECK(r.at("s").at("im").get<double>() == table.records[i].s.imag());
    CHECK(r.at("special").get<bool>() == table.records[i].special);
  }
  CHECK(doc.at("summary").at("special_roots").size() == 6);
  CHECK(doc.at("summary").at("claims_verified").get<bool>() == false);
  CHECK(doc.at("metadata").at("lambda_max").get<int>() == 40);
}

TEST_CASE("figure markers") {
  const RootTable table = build_table(400);
  const std::string svg = figure_svg(table);
  CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
  CHECK(occurrences(svg, "class=\"special\"") == 6);
  CHECK(occurrences(svg, "<circle") == table.records.size());
  CHECK(occurrences(svg, "class=\"l2-line\"") == 1);

  const RootTable empty = build_table_from({}, 0);
  const std::string axes = figure_svg(empty);
  CHECK(occurrences(axes, "<circle") == 0);
  CHECK(occurrences(axes, "class=\"axis\"") == 2);
}

TEST_CASE("scattering rows") {
  const auto rows = scattering_rows({{"a", 0.5}, {"b", 2.0}}, 50);
  CHECK(rows.size() == 102);
  CHECK(worst_scattering_dev(rows) <= 1e-10);
  const std::string csv = scattering_csv(rows);
  CHECK(csv.rfind("source,k,lambda6,alpha,phase_re,phase_im,s_re,s_im,unimodularity_dev,oracle_dev\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 103);
}

TEST_CASE("run_all bundle is complete and deterministic") {
  Config c;
  c.threads = 4;
  const Bundle a = run_all(c);
  c.threads = 1;
  const Bundle b = run_all(c);
  CHECK(a.files == b.files);
  CHECK(a.summary == b.summary);
  for (const char* name : {"roots.json", "gap_report.json", "symmetry_report.json", "roots.svg", "scattering.csv",
                           "expansion.txt", "expansion.json"})
    CHECK(a.files.count(name) == 1);
  CHECK_FALSE(a.claims_ok);  // printed radicals miss 1e-9

  c.radical_tol = 1e-8;
  CHECK(run_all(c).claims_ok);
}

TEST_CASE("write_files replaces the bundle in place") {
  const auto dir = std::filesystem::temp_directory_path() / "indicial_report_test";
  std::filesystem::remove_all(dir);
  write_files(dir, {{"a.txt", "one"}, {"b.txt", "two"}});
  write_files(dir, {{"a.txt", "three"}});
  std::ifstream in(dir / "a.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "three");
  CHECK_FALSE(std::filesystem::exists(dir / "a.txt.tmp"));
  std::filesystem::remove_all(dir);
}
