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

#include "indicial/scattering.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "indicial/error.hpp"

namespace indicial {

namespace {

using cplx = std::complex<double>;

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleAtNonpositiveInteger("log_gamma: pole at z = " + std::to_string(z.real()));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
  return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lanczos_log_gamma(1.0 - z);
}

cplx gamma_ratio_phase(int k, double alpha) {
  const cplx ia(0.0, alpha);
  const double shift = static_cast<double>(k) + 3.0;
  return std::exp(log_gamma(-ia) - log_gamma(ia) + log_gamma(shift + ia) - log_gamma(shift - ia));
}

cplx finite_product_phase(int k, double alpha) {
  cplx acc = -1.0;
  for (int j = 1; j <= k + 2; ++j) acc *= cplx(j, alpha) / cplx(j, -alpha);
  return acc;
}

ScatteringSample phase(int k, double alpha) {
  if (k < 0) throw std::invalid_argument("phase: mode index must be nonnegative");
  if (!(alpha > 0.0)) throw std::invalid_argument("phase: alpha must be positive");
  ScatteringSample out;
  out.k = k;
  out.lambda6 = static_cast<std::int64_t>(k) * (k + 5);
  out.alpha = alpha;
  out.phase2 = gamma_ratio_phase(k, alpha);
  out.s_value = std::exp(cplx(0.0, -2.0 * alpha * std::numbers::ln2)) * out.phase2;
  return out;
}

cplx radial_profile(double alpha, cplx phase2, double x) {
  const double t = alpha * std::log(x);
  const cplx two = std::exp(cplx(0.0, -2.0 * alpha * std::numbers::ln2));
  return std::polar(1.0, t) + two * phase2 * std::polar(1.0, -t);
}

double real_profile_check(double alpha, cplx phase2, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("real_profile_check: no sample points");
  auto sample = [&](double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("real_profile_check: samples must lie in (0, 1]");
    const cplx h = radial_profile(alpha, phase2, x);
    if (std::abs(h) < 1e-12)
      throw DegenerateProfile("profile vanishes at x = " + std::to_string(x) + "; shift the reference point");
    return h;
  };
  const cplx h0 = sample(xs.front());
  const cplx rotate = std::conj(h0) / std::abs(h0);
  double worst = 0.0;
  for (double x : xs) {
    const cplx h = sample(x);
    worst = std::max(worst, std::abs((rotate * h).imag()) / std::abs(h));
  }
  return worst;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  out.back() = hi;
  out.front() = lo;
  return out;
}

}  // namespace indicial
