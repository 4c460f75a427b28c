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

#include "indicial/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "indicial/error.hpp"
#include "indicial/scattering.hpp"
#include "json.hpp"

namespace indicial {

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

constexpr double kGapFloor = 1.0 - 1e-9;

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json record_json(const RootRecord& r) {
  return json{{"sector", to_string(r.sector)}, {"lambda", r.lambda},       {"s", complex_json(r.s)},
              {"dist_to_line", r.dist_to_line}, {"special", r.special}, {"residual", r.residual}};
}

json violations_json(const std::vector<SymmetryViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs)
    out.push_back({{"sector", to_string(v.sector)}, {"lambda", v.lambda}, {"root", complex_json(v.root)},
                   {"reason", v.reason}});
  return out;
}

json gap_json(const GapReport& gap) {
  json out;
  if (std::isfinite(gap.min_distance)) {
    out["min_distance"] = gap.min_distance;
  } else {
    out["min_distance"] = nullptr;
  }
  out["attained_by"] = gap.attained_by ? record_json(*gap.attained_by) : json(nullptr);
  return out;
}

}  // namespace

void Config::validate() const {
  if (lambda_max < 40) throw std::invalid_argument(fmt::format("lambda_max = {} is below 40", lambda_max));
  if (!(tol.line > 0)) throw std::invalid_argument("line_tol must be positive");
  if (!(tol.residual > 0)) throw std::invalid_argument("root_residual_tol must be positive");
  if (!(tol.pairing > 0)) throw std::invalid_argument("pairing_tol must be positive");
  if (!(radical_tol > 0)) throw std::invalid_argument("radical_tol must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (scattering_kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
}

ClaimReport verify_claims(const RootTable& table, double radical_tol) {
  ClaimReport out;
  out.specials = special_records(table);
  out.gap = gap_scan(table);
  out.violations = symmetry_check(table);

  if (out.specials.size() != 6)
    out.failures.push_back(fmt::format("expected 6 roots on Re s = 3, found {}", out.specials.size()));

  const SpecialExponents printed = printed_special_roots();
  for (int family = 1; family <= 3; ++family) {
    double worst = 0.0;
    for (cplx target : {printed.plus(family), printed.minus(family)}) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& r : out.specials) nearest = std::min(nearest, std::abs(r.s - target));
      worst = std::max(worst, nearest);
    }
    out.radical_deviation[static_cast<std::size_t>(family - 1)] = worst;
    if (!(worst <= radical_tol))
      out.failures.push_back(
          fmt::format("theta{} differs from its printed closed form by {:.3e} (tolerance {:.1e})", family, worst,
                      radical_tol));
  }

  if (!(out.gap.min_distance >= kGapFloor))
    out.failures.push_back(fmt::format("off-line root at distance {:.17g} from Re s = 3", out.gap.min_distance));
  if (!out.violations.empty())
    out.failures.push_back(fmt::format("{} symmetry violation(s)", out.violations.size()));
  return out;
}

std::string spectrum_csv(FormKind kind, std::int64_t lambda_max) {
  std::string out = "kind,k,lambda,multiplicity\n";
  for (const auto& e : spectrum_table(kind, lambda_max))
    out += fmt::format("{},{},{},{}\n", to_string(kind), e.k, e.lambda, e.multiplicity);
  return out;
}

std::string root_table_json(const RootTable& table, const ClaimReport& claims) {
  json records = json::array();
  for (const auto& r : table.records) records.push_back(record_json(r));
  json specials = json::array();
  for (const auto& r : claims.specials) specials.push_back(record_json(r));
  json failures = claims.failures;
  const json doc = {
      {"metadata",
       {{"lambda_max", table.lambda_max},
        {"line_tol", table.tolerances.line},
        {"root_residual_tol", table.tolerances.residual},
        {"pairing_tol", table.tolerances.pairing}}},
      {"records", records},
      {"summary",
       {{"special_roots", specials},
        {"radical_deviation",
         {{"theta1", claims.radical_deviation[0]},
          {"theta2", claims.radical_deviation[1]},
          {"theta3", claims.radical_deviation[2]}}},
        {"gap", gap_json(claims.gap)},
        {"symmetry_violations", violations_json(claims.violations)},
        {"claims_verified", claims.ok()},
        {"failures", failures}}},
  };
  return doc.dump(2) + "\n";
}

std::string gap_report_json(const ClaimReport& claims) { return gap_json(claims.gap).dump(2) + "\n"; }

std::string symmetry_report_json(const ClaimReport& claims) {
  return json{{"violations", violations_json(claims.violations)}}.dump(2) + "\n";
}

std::string claims_summary_text(const ClaimReport& claims) {
  std::ostringstream os;
  os << "special roots on Re s = 3:\n";
  for (const auto& r : claims.specials)
    os << fmt::format("  {:<18} lambda={:<4} s = {:.15g} {} {:.15g}i\n", to_string(r.sector), r.lambda, r.s.real(),
                      r.s.imag() < 0 ? '-' : '+', std::abs(r.s.imag()));
  os << fmt::format("printed closed-form deviation: theta1 {:.3e}, theta2 {:.3e}, theta3 {:.3e}\n",
                    claims.radical_deviation[0], claims.radical_deviation[1], claims.radical_deviation[2]);
  if (claims.gap.attained_by) {
    const auto& r = *claims.gap.attained_by;
    os << fmt::format("min |Re s - 3| off the line: {:.15g} ({} lambda={})\n", claims.gap.min_distance,
                      to_string(r.sector), r.lambda);
  }
  os << fmt::format("symmetry violations: {}\n", claims.violations.size());
  if (claims.ok()) {
    os << "all claims verified\n";
  } else {
    for (const auto& f : claims.failures) os << "FAILED: " << f << "\n";
  }
  return os.str();
}

std::string figure_svg(const RootTable& table) {
  constexpr double width = 800, height = 600, margin = 60;
  double xmin = 3, xmax = 3, ymin = 0, ymax = 0;
  for (const auto& r : table.records) {
    xmin = std::min(xmin, r.s.real());
    xmax = std::max(xmax, r.s.real());
    ymin = std::min(ymin, r.s.imag());
    ymax = std::max(ymax, r.s.imag());
  }
  xmin = std::floor(xmin) - 1;
  xmax = std::ceil(xmax) + 1;
  ymin = std::floor(ymin) - 1;
  ymax = std::ceil(ymax) + 1;
  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  out += "<title>Indicial roots in the complex plane</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += fmt::format("<line class=\"axis\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\"/>\n",
                     margin, py(0), width - margin, py(0));
  out += fmt::format("<line class=\"axis\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\"/>\n",
                     px(0), margin, px(0), height - margin);
  const double step = xmax - xmin > 30 ? 5 : (xmax - xmin > 12 ? 2 : 1);
  for (double x = std::ceil(xmin / step) * step; x <= xmax; x += step)
    out += fmt::format("<text class=\"tick\" x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
                       px(x), py(0) + 15, x);
  const double ystep = ymax - ymin > 12 ? 2 : 1;
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax; y += ystep)
    if (y != 0)
      out += fmt::format("<text class=\"tick\" x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\" text-anchor=\"end\">{}i</text>\n",
                         px(0) - 4, py(y) + 4, y);
  out += fmt::format(
      "<line class=\"l2-line\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"gray\" "
      "stroke-dasharray=\"6,4\"/>\n",
      px(3), margin, px(3), height - margin);
  out += "<text x=\"400\" y=\"30\" font-size=\"16\" text-anchor=\"middle\">Indicial roots, Re s = 3 dashed</text>\n";
  for (const auto& r : table.records) {
    if (r.special) {
      out += fmt::format("<circle class=\"special\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"crimson\"/>\n",
                         px(r.s.real()), py(r.s.imag()));
    } else {
      out += fmt::format(
          "<circle class=\"root\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"none\" stroke=\"steelblue\"/>\n",
          px(r.s.real()), py(r.s.imag()));
    }
  }
  out += "</svg>\n";
  return out;
}

std::vector<AlphaSource> special_alphas(const SpecialExponents& thetas) {
  return {{"theta1", thetas.theta1.imag()}, {"theta2", thetas.theta2.imag()}, {"theta3", thetas.theta3.imag()}};
}

std::vector<ScatteringRow> scattering_rows(const std::vector<AlphaSource>& alphas, int k_max) {
  std::vector<ScatteringRow> rows;
  for (const auto& a : alphas)
    for (int k = 0; k <= k_max; ++k) {
      const ScatteringSample s = phase(k, a.alpha);
      rows.push_back({a.name, s, std::abs(std::abs(s.phase2) - 1.0),
                      std::abs(s.phase2 - finite_product_phase(k, a.alpha))});
    }
  return rows;
}

std::string scattering_csv(const std::vector<ScatteringRow>& rows) {
  std::string out = "source,k,lambda6,alpha,phase_re,phase_im,s_re,s_im,unimodularity_dev,oracle_dev\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.3e},{:.3e}\n", r.source, r.sample.k,
                       r.sample.lambda6, r.sample.alpha, r.sample.phase2.real(), r.sample.phase2.imag(),
                       r.sample.s_value.real(), r.sample.s_value.imag(), r.unimodularity_dev, r.oracle_dev);
  return out;
}

double worst_scattering_dev(const std::vector<ScatteringRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max({worst, r.unimodularity_dev, r.oracle_dev});
  return worst;
}

ExpansionSpec expansion_for(const BoundaryInput& input, const SpecialExponents& thetas, double delta) {
  const cplx s2 = phase(input.k, thetas.theta2.imag()).s_value;
  const cplx s3 = phase(input.k, thetas.theta3.imag()).s_value;
  return build_expansion(input.data, thetas, input.s1, s2, s3, delta);
}

Bundle run_all(const Config& config) {
  config.validate();
  const RootTable table = build_table(config.lambda_max, config.tol, config.threads);
  const ClaimReport claims = verify_claims(table, config.radical_tol);

  Bundle bundle;
  bundle.files["roots.json"] = root_table_json(table, claims);
  bundle.files["gap_report.json"] = gap_report_json(claims);
  bundle.files["symmetry_report.json"] = symmetry_report_json(claims);
  bundle.files["roots.svg"] = figure_svg(table);

  bool ok = claims.ok();
  std::string summary = claims_summary_text(claims);
  try {
    const SpecialExponents thetas = special_exponents(table);
    const auto rows = scattering_rows(special_alphas(thetas), config.scattering_kmax);
    bundle.files["scattering.csv"] = scattering_csv(rows);
    const double dev = worst_scattering_dev(rows);
    summary += fmt::format("scattering: worst unimodularity/oracle deviation {:.3e}\n", dev);
    if (!(dev <= 1e-10)) ok = false;

    BoundaryInput unit;
    unit.data.v1 = unit.data.v2 = unit.data.v3 = 1.0;
    const ExpansionSpec spec = expansion_for(unit, thetas, config.delta);
    bundle.files["expansion.txt"] = render(spec, RenderFormat::Text);
    bundle.files["expansion.json"] = render(spec, RenderFormat::Json);
    const auto residuals = residual_order(spec, certification_polys());
    const bool certified =
        std::all_of(residuals.begin(), residuals.end(), [](const TermResidual& r) { return r.certified; });
    summary += certified ? "expansion: every exponent certified\n" : "expansion: uncertified exponent\n";
    ok = ok && certified;
  } catch (const Error& e) {
    summary += std::string("FAILED: ") + e.what() + "\n";
    ok = false;
  }
  bundle.summary = summary;
  bundle.claims_ok = ok;
  return bundle;
}

void write_files(const std::filesystem::path& dir, const std::map<std::string, std::string>& files) {
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged;
  for (const auto& [name, content] : files) {
    const auto target = dir / name;
    const auto tmp = dir / (name + ".tmp");
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    os << content;
    os.close();
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    staged.emplace_back(tmp, target);
  }
  for (const auto& [tmp, target] : staged) std::filesystem::rename(tmp, target);
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("INDICIAL_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

}  // namespace indicial
