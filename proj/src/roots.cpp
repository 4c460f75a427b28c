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

#include "indicial/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "indicial/error.hpp"
#include "indicial/root_finder.hpp"

namespace indicial {

namespace {

constexpr double kLine = 3.0;
constexpr double kSingularTol = 1e-6;

std::vector<RootRecord> solve_one(const SectorPolynomial& sp, const Tolerances& tol) {
  const std::vector<std::complex<double>> coeffs = sp.poly.to_complex();
  std::vector<ComplexRoot> roots;
  try {
    roots = solve_roots(coeffs, {tol.residual, 100});
  } catch (const NonConvergence& e) {
    throw NonConvergence(to_string(sp.sector) + " at lambda=" + std::to_string(sp.lambda) + ": " + e.what(),
                         e.root_index());
  }
  std::vector<RootRecord> out;
  for (const ComplexRoot& r : roots) {
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const RootRecord& prev) {
      return std::abs(prev.s - r.value) <= tol.pairing;
    });
    if (duplicate) continue;
    const double dist = std::abs(r.value.real() - kLine);
    out.push_back({sp.sector, sp.lambda, r.value, dist, dist < tol.line, scaled_residual(coeffs, r.value)});
  }
  return out;
}

// Greedy nearest matching of `from` onto the images `to`; returns the entries
// of `from` left without a partner within tol.
std::vector<std::complex<double>> unmatched(const std::vector<std::complex<double>>& from,
                                            const std::vector<std::complex<double>>& to, double tol) {
  std::vector<bool> used(to.size(), false);
  std::vector<std::complex<double>> lost;
  for (const auto& z : from) {
    std::size_t best = to.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(to[j] - z);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < to.size() && best_d <= tol) {
      used[best] = true;
    } else {
      lost.push_back(z);
    }
  }
  return lost;
}

}  // namespace

RootTable build_table(std::int64_t lambda_max, const Tolerances& tol, unsigned threads) {
  if (lambda_max < 40)
    throw std::invalid_argument("build_table: lambda_max must be at least 40, got " + std::to_string(lambda_max));
  const std::vector<SectorPolynomial> polys = sector_sweep(lambda_max);
  return build_table_from(polys, lambda_max, tol, threads);
}

RootTable build_table_from(std::span<const SectorPolynomial> polys, std::int64_t lambda_max, const Tolerances& tol,
                           unsigned threads) {
  std::vector<std::vector<RootRecord>> slots(polys.size());
  std::vector<std::exception_ptr> errors(polys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < polys.size(); i = next++) {
      try {
        slots[i] = solve_one(polys[i], tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(polys.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  RootTable table;
  table.lambda_max = lambda_max;
  table.tolerances = tol;
  for (auto& slot : slots) table.records.insert(table.records.end(), slot.begin(), slot.end());
  std::stable_sort(table.records.begin(), table.records.end(), [](const RootRecord& a, const RootRecord& b) {
    if (a.sector != b.sector) return a.sector < b.sector;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.s.real() != b.s.real()) return a.s.real() < b.s.real();
    return a.s.imag() < b.s.imag();
  });
  return table;
}

GapReport gap_scan(const RootTable& table) {
  GapReport report{std::numeric_limits<double>::infinity(), std::nullopt};
  for (const RootRecord& r : table.records) {
    if (r.special) continue;
    if (r.dist_to_line < report.min_distance) {
      report.min_distance = r.dist_to_line;
      report.attained_by = r;
    }
  }
  return report;
}

std::vector<SymmetryViolation> symmetry_check(const RootTable& table) {
  std::map<std::pair<SectorKind, std::int64_t>, std::vector<std::complex<double>>> groups;
  for (const RootRecord& r : table.records) groups[{r.sector.kind, r.lambda}].push_back(r.s);

  const double tol = table.tolerances.pairing;
  std::vector<SymmetryViolation> out;
  for (const auto& [key, roots] : groups) {
    std::vector<std::complex<double>> conj, reflected;
    for (const auto& z : roots) {
      conj.push_back(std::conj(z));
      reflected.push_back(6.0 - z);
    }
    for (const auto& z : unmatched(roots, conj, tol))
      out.push_back({key.first, key.second, z, "conjugate missing"});
    for (const auto& z : unmatched(roots, reflected, tol))
      out.push_back({key.first, key.second, z, "reflection 6 - s missing"});
  }
  return out;
}

std::vector<RootRecord> special_records(const RootTable& table) {
  std::vector<RootRecord> out;
  std::copy_if(table.records.begin(), table.records.end(), std::back_inserter(out),
               [](const RootRecord& r) { return r.special; });
  return out;
}

std::complex<double> SpecialExponents::plus(int family) const {
  switch (family) {
    case 1: return theta1;
    case 2: return theta2;
    case 3: return theta3;
    default: throw std::out_of_range("special exponent family must be 1, 2 or 3");
  }
}

SpecialExponents special_exponents(const RootTable& table) {
  auto find = [&](SectorKind kind, std::int64_t lambda, const char* name) {
    for (const RootRecord& r : table.records)
      if (r.special && r.sector.kind == kind && r.lambda == lambda && r.s.imag() > 0) return r.s;
    throw Error(std::string("no on-line root found for ") + name);
  };
  return {find(SectorKind::H40Harmonic, 0, "theta1"), find(SectorKind::ScalarSystem4x4, 16, "theta2"),
          find(SectorKind::ScalarSystem4x4, 40, "theta3")};
}

SpecialExponents printed_special_roots() {
  return {{3.0, 6.0}, {3.0, std::sqrt(21116145.0) / 1655.0}, {3.0, 3.0 * std::sqrt(582842.0) / 20098.0}};
}

KernelVector kernel_vector(std::int64_t lambda, std::complex<double> s) {
  static const Matrix4<BivariatePoly> symbolic = scalar_system_matrix();
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = symbolic[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].eval(s, static_cast<double>(lambda));

  const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
  const double smallest = svd.singularValues()(3);
  if (smallest > kSingularTol)
    throw NotSingular("scalar system at lambda=" + std::to_string(lambda) + " is not singular (sigma_min = " +
                      std::to_string(smallest) + ")");

  Eigen::Vector4cd v = svd.matrixV().col(3);
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::abs(v(big)) / v(big);

  KernelVector out;
  for (int i = 0; i < 4; ++i) out.v[static_cast<std::size_t>(i)] = v(i);
  out.smallest_singular_value = smallest;
  out.sigma_over_tau = v(1) == 0.0 ? std::complex<double>(std::numeric_limits<double>::infinity()) : v(0) / v(1);
  return out;
}

}  // namespace indicial
