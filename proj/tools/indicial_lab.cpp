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

#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "indicial/error.hpp"
#include "indicial/report.hpp"

namespace {

using namespace indicial;

enum Exit { kOk = 0, kUsage = 2, kClaim = 3, kNonConvergence = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SectorId parse_sector(const std::string& name) {
  for (const SectorId& id : all_sectors())
    if (to_string(id) == name) return id;
  throw UsageError("unknown sector '" + name + "'");
}

RootTable figure_table(const Config& cfg, const std::vector<std::string>& sectors) {
  if (sectors.empty()) return build_table(cfg.lambda_max, cfg.tol, cfg.threads);
  std::vector<SectorId> wanted;
  for (const auto& s : sectors) wanted.push_back(parse_sector(s));
  std::vector<SectorPolynomial> polys;
  for (auto& p : sector_sweep(cfg.lambda_max))
    if (std::find(wanted.begin(), wanted.end(), p.sector) != wanted.end()) polys.push_back(std::move(p));
  return build_table_from(polys, cfg.lambda_max, cfg.tol, cfg.threads);
}

void report_written(const std::filesystem::path& dir, const std::map<std::string, std::string>& files) {
  for (const auto& [name, content] : files) std::cerr << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indicial roots, scattering phases and boundary expansions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value configuration file; flags win");

  Config cfg;
  cfg.threads = default_thread_count();
  std::string output_dir = cfg.output_dir.string();
  app.add_option("--lambda-max,--lambda_max", cfg.lambda_max, "Largest eigenvalue in the sweep")->capture_default_str();
  app.add_option("--line-tol,--line_tol", cfg.tol.line, "Distance to Re s = 3 counted as on the line")
      ->capture_default_str();
  app.add_option("--residual-tol,--root_residual_tol", cfg.tol.residual, "Scaled residual every root must reach")
      ->capture_default_str();
  app.add_option("--pairing-tol,--pairing_tol", cfg.tol.pairing, "Distance under which roots coincide")
      ->capture_default_str();
  app.add_option("--radical-tol,--radical_tol", cfg.radical_tol,
                 "Allowed distance between special roots and their printed closed forms")
      ->capture_default_str();
  app.add_option("--delta", cfg.delta, "Remainder exponent offset in (0, 1)")->capture_default_str();
  app.add_option("--output-dir,--output_dir", output_dir, "Directory for generated files")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (capped by INDICIAL_LAB_THREADS)")
      ->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue table of one Laplace-type operator as CSV");
  std::string kind_name;
  std::int64_t spectrum_max = 400;
  std::string spectrum_out;
  spectrum->add_option("--kind", kind_name, "function4 | closed1 | coclosed1 | function6")->required();
  spectrum->add_option("--max", spectrum_max, "Largest eigenvalue")->capture_default_str();
  spectrum->add_option("--out", spectrum_out, "Write to this file instead of stdout");

  auto* roots = app.add_subcommand("roots", "Root table with gap and symmetry reports");

  auto* figure = app.add_subcommand("figure", "SVG scatter of the roots");
  std::vector<std::string> figure_sectors;
  figure->add_option("--sector", figure_sectors, "Restrict to these sectors, e.g. TTS4 or H40Harmonic(+i)");

  auto* scattering = app.add_subcommand("scattering", "Scattering phases on S^6 modes as CSV");
  bool scattering_auto = false;
  std::vector<double> alphas;
  scattering->add_flag("--auto", scattering_auto, "Use Im of the computed special roots");
  scattering->add_option("--alpha", alphas, "Explicit alpha values")->check(CLI::PositiveNumber);
  scattering->add_option("--kmax", cfg.scattering_kmax, "Largest mode index")->capture_default_str();

  auto* expansion = app.add_subcommand("expansion", "Leading boundary expansion as text and JSON");
  std::string data_path;
  std::optional<double> v1, v2, v3;
  expansion->add_option("--data", data_path, "JSON boundary data file");
  expansion->add_option("--v1", v1, "Real amplitude of v1");
  expansion->add_option("--v2", v2, "Real amplitude of v2");
  expansion->add_option("--v3", v3, "Real amplitude of v3");

  auto* all = app.add_subcommand("all", "Every report, written together");

  for (auto* sub : {spectrum, roots, figure, scattering, expansion, all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.output_dir = output_dir;
    cfg.threads = std::min(cfg.threads, default_thread_count());

    if (*spectrum) {
      const auto kind = parse_form_kind(kind_name);
      if (!kind) throw UsageError("unknown kind '" + kind_name + "'");
      const std::string csv = spectrum_csv(*kind, spectrum_max);
      if (spectrum_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream(spectrum_out, std::ios::binary) << csv;
      }
      return kOk;
    }

    if (*figure) {
      if (!(cfg.lambda_max >= 0)) throw UsageError("lambda_max must be nonnegative");
      const std::map<std::string, std::string> files = {{"roots.svg", figure_svg(figure_table(cfg, figure_sectors))}};
      write_files(cfg.output_dir, files);
      report_written(cfg.output_dir, files);
      return kOk;
    }

    if (*expansion) {
      if (!(cfg.delta > 0 && cfg.delta < 1)) throw BadDelta(fmt::format("delta = {} is not in (0, 1)", cfg.delta));
      BoundaryInput input = data_path.empty() ? BoundaryInput{} : parse_boundary_input(read_file(data_path));
      if (v1) input.data.v1 = *v1;
      if (v2) input.data.v2 = *v2;
      if (v3) input.data.v3 = *v3;
      const SpecialExponents thetas = special_exponents(build_table(40, cfg.tol, cfg.threads));
      const ExpansionSpec spec = expansion_for(input, thetas, cfg.delta);
      const std::string text = render(spec, RenderFormat::Text);
      const std::map<std::string, std::string> files = {{"expansion.txt", text},
                                                        {"expansion.json", render(spec, RenderFormat::Json)}};
      write_files(cfg.output_dir, files);
      std::cout << text;
      const auto residuals = residual_order(spec, certification_polys());
      for (const auto& r : residuals)
        if (!r.certified) {
          std::cerr << fmt::format("term {} is not an indicial root (|p| = {:.3e})\n", r.term_index, r.residual);
          return kClaim;
        }
      return kOk;
    }

    if (*scattering) {
      if (scattering_auto == !alphas.empty()) throw UsageError("give exactly one of --auto or --alpha");
      if (cfg.scattering_kmax < 0) throw UsageError("kmax must be nonnegative");
      std::vector<AlphaSource> sources;
      if (scattering_auto) {
        sources = special_alphas(special_exponents(build_table(40, cfg.tol, cfg.threads)));
      } else {
        for (double a : alphas) sources.push_back({fmt::format("{}", a), a});
      }
      const auto rows = scattering_rows(sources, cfg.scattering_kmax);
      const std::map<std::string, std::string> files = {{"scattering.csv", scattering_csv(rows)}};
      write_files(cfg.output_dir, files);
      report_written(cfg.output_dir, files);
      const double worst = worst_scattering_dev(rows);
      std::cout << fmt::format("worst unimodularity/oracle deviation: {:.3e}\n", worst);
      return worst <= 1e-10 ? kOk : kClaim;
    }

    cfg.validate();

    if (*roots) {
      const RootTable table = build_table(cfg.lambda_max, cfg.tol, cfg.threads);
      const ClaimReport claims = verify_claims(table, cfg.radical_tol);
      const std::map<std::string, std::string> files = {{"roots.json", root_table_json(table, claims)},
                                                        {"gap_report.json", gap_report_json(claims)},
                                                        {"symmetry_report.json", symmetry_report_json(claims)}};
      write_files(cfg.output_dir, files);
      report_written(cfg.output_dir, files);
      std::cout << claims_summary_text(claims);
      return claims.ok() ? kOk : kClaim;
    }

    if (*all) {
      const Bundle bundle = run_all(cfg);
      write_files(cfg.output_dir, bundle.files);
      report_written(cfg.output_dir, bundle.files);
      std::cout << bundle.summary;
      return bundle.claims_ok ? kOk : kClaim;
    }
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
