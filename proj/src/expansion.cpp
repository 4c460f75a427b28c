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

#include "indicial/expansion.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "indicial/error.hpp"
#include "json.hpp"

namespace indicial {

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

constexpr double kUnimodularTol = 1e-8;
constexpr double kCertifyTol = 1e-8;

struct ComponentInfo {
  Component component;
  const char* name;
  const char* lhs;
  const char* tag;
  double weight;
};

constexpr std::array<ComponentInfo, 6> kComponents = {{
    {Component::H40, "H40", "H_(4,0)", "dx/x∧", 1.0},
    {Component::TrH_k, "TrH_k", "Tr_H k", "7 δ_S", 7.0},
    {Component::TrS_k, "TrS_k", "Tr_S k", "4 δ_S", 4.0},
    {Component::k11, "k11", "k_(1,1)", "d_H δ_S", 1.0},
    {Component::H13, "H13", "H_(1,3)", "d_H ∗_S", 1.0},
    {Component::H04, "H04", "H_(0,4)", "d_S ∗_S", 1.0},
}};

const ComponentInfo& info(Component c) {
  return *std::find_if(kComponents.begin(), kComponents.end(),
                       [c](const ComponentInfo& i) { return i.component == c; });
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string format_exponent(cplx z) {
  const std::string re = fmt::format("{:.10g}", z.real());
  if (z.imag() == 0.0) return re;
  const std::string im = fmt::format("{:.10g}", std::abs(z.imag()));
  return re + (z.imag() < 0 ? "−" : "+") + (im == "1" ? "" : im) + "i";
}

void check_unimodular(cplx s, const char* name) {
  if (std::abs(std::abs(s) - 1.0) > kUnimodularTol)
    throw std::invalid_argument(fmt::format("build_expansion: |{}| = {:.17g} is not 1", name, std::abs(s)));
}

}  // namespace

std::string_view to_string(Component c) { return info(c).name; }

Component parse_component(std::string_view name) {
  for (const auto& i : kComponents)
    if (name == i.name) return i.component;
  throw Error("unknown expansion component '" + std::string(name) + "'");
}

ExpansionSpec build_expansion(const BoundaryData& data, const SpecialExponents& thetas, cplx s1, cplx s2, cplx s3,
                              double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw BadDelta(fmt::format("delta = {} is not in (0, 1)", delta));
  check_unimodular(s1, "S1");
  check_unimodular(s2, "S2");
  check_unimodular(s3, "S3");

  ExpansionSpec spec;
  spec.delta = delta;
  auto emit = [&](const ComponentInfo& c, int family, cplx amplitude, cplx scatter, const std::string& label) {
    if (amplitude == 0.0) return;
    const std::string s_name = "S" + std::to_string(family);
    spec.terms.push_back({c.component, c.tag, family, thetas.plus(family), amplitude * c.weight, label});
    spec.terms.push_back(
        {c.component, c.tag, family, thetas.minus(family), (scatter * amplitude) * c.weight, s_name + "(" + label + ")"});
  };
  emit(kComponents[0], 1, data.v1, s1, data.v1_label);
  for (std::size_t i = 1; i < kComponents.size(); ++i) {
    emit(kComponents[i], 2, data.v2, s2, data.v2_label);
    emit(kComponents[i], 3, data.v3, s3, data.v3_label);
  }
  return spec;
}

std::vector<SectorPolynomial> certification_polys() {
  return {
      indicial_poly({SectorKind::H40Harmonic, Star6::PlusI}, 0),
      indicial_poly({SectorKind::H40Harmonic, Star6::MinusI}, 0),
      indicial_poly({SectorKind::ScalarSystem4x4}, 16),
      indicial_poly({SectorKind::ScalarSystem4x4}, 40),
  };
}

std::vector<TermResidual> residual_order(const ExpansionSpec& spec, std::span<const SectorPolynomial> polys) {
  auto belongs = [](const SectorPolynomial& p, int family) {
    switch (family) {
      case 1: return p.sector.kind == SectorKind::H40Harmonic;
      case 2: return p.sector.kind == SectorKind::ScalarSystem4x4 && p.lambda == 16;
      case 3: return p.sector.kind == SectorKind::ScalarSystem4x4 && p.lambda == 40;
      default: return false;
    }
  };
  std::vector<TermResidual> out;
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const ExpansionTerm& t = spec.terms[i];
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : polys)
      if (belongs(p, t.family)) best = std::min(best, std::abs(p.poly.eval(t.exponent)));
    const bool ok = best <= kCertifyTol;
    out.push_back({i, best, ok, ok ? spec.remainder_order() : t.exponent.real()});
  }
  return out;
}

std::string render(const ExpansionSpec& spec, RenderFormat format) {
  if (format == RenderFormat::Json) {
    json terms = json::array();
    for (const auto& t : spec.terms) {
      terms.push_back({{"component", to_string(t.component)},
                       {"operator_tag", t.operator_tag},
                       {"family", t.family},
                       {"exponent", complex_json(t.exponent)},
                       {"coefficient", complex_json(t.coefficient)},
                       {"label", t.label}});
    }
    return json{{"delta", spec.delta}, {"terms", terms}}.dump(2) + "\n";
  }

  if (spec.terms.empty()) return "all components O(x^{3+δ})\n";
  std::ostringstream os;
  for (const auto& c : kComponents) {
    std::vector<std::string> parts;
    for (const auto& t : spec.terms)
      if (t.component == c.component) parts.push_back(t.label + " x^{" + format_exponent(t.exponent) + "}");
    if (parts.empty()) continue;
    std::string prefix = c.component == Component::H40 ? "dx/x ∧" : c.tag;
    os << c.lhs << " = " << prefix << " (";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
    os << ") + O(x^{3+δ})\n";
  }
  return os.str();
}

ExpansionSpec parse_expansion_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ExpansionSpec spec;
    spec.delta = j.at("delta").get<double>();
    for (const auto& t : j.at("terms")) {
      spec.terms.push_back({parse_component(t.at("component").get<std::string>()),
                            t.at("operator_tag").get<std::string>(), t.at("family").get<int>(),
                            complex_from(t.at("exponent")), complex_from(t.at("coefficient")),
                            t.at("label").get<std::string>()});
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed expansion document: ") + e.what());
  }
}

BoundaryInput parse_boundary_input(std::string_view text) {
  BoundaryInput in;
  if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); })) return in;
  try {
    const json j = json::parse(text);
    auto read = [&](const char* key, std::string& label, cplx& amp) {
      if (!j.contains(key)) return;
      const json& v = j.at(key);
      amp = complex_from(v.at("amplitude"));
      if (v.contains("label")) label = v.at("label").get<std::string>();
    };
    read("v1", in.data.v1_label, in.data.v1);
    read("v2", in.data.v2_label, in.data.v2);
    read("v3", in.data.v3_label, in.data.v3);
    if (j.contains("v1") && j.at("v1").contains("star6")) {
      const auto sign = j.at("v1").at("star6").get<std::string>();
      if (sign == "+i") {
        in.data.v1_star6 = Star6::PlusI;
      } else if (sign == "-i") {
        in.data.v1_star6 = Star6::MinusI;
      } else {
        throw Error("v1.star6 must be \"+i\" or \"-i\"");
      }
    }
    if (j.contains("s1")) in.s1 = complex_from(j.at("s1"));
    if (j.contains("k")) in.k = j.at("k").get<int>();
    return in;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed boundary data: ") + e.what());
  }
}

}  // namespace indicial
