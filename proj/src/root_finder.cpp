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

#include "indicial/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "indicial/error.hpp"

namespace indicial {

namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double l1(cplx z) { return std::abs(z.real()) + std::abs(z.imag()); }

class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<cplx> data_;
};

// Parlett-Reinsch balancing with radix 2, so scaling is exact.
void balance(DenseMatrix& a) {
  const std::size_t n = a.size();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        col += l1(a(j, i));
        row += l1(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double g = row / radix, f = 1.0;
      const double s = col + row;
      while (col < g) {
        f *= radix;
        col *= radix * radix;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix * radix;
      }
      if ((col + row) / f < 0.95 * s) {
        done = false;
        for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx mid = 0.5 * (a + d);
  const cplx e1 = mid + disc, e2 = mid - disc;
  return std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2;
}

// Single-shift complex QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<cplx> hessenberg_qr(DenseMatrix h) {
  const std::size_t n = h.size();
  std::vector<cplx> eig(n);
  int hi = static_cast<int>(n) - 1;
  int iter = 0;
  const int max_total = 60 * static_cast<int>(n);
  int total = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    int lo = hi;
    while (lo > 0) {
      const auto k = static_cast<std::size_t>(lo);
      double scale = l1(h(k - 1, k - 1)) + l1(h(k, k));
      if (scale == 0.0) {
        for (std::size_t r = 0; r <= static_cast<std::size_t>(hi); ++r)
          for (std::size_t c = 0; c <= static_cast<std::size_t>(hi); ++c) scale += l1(h(r, c));
      }
      if (l1(h(k, k - 1)) <= kEps * scale) {
        h(k, k - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[static_cast<std::size_t>(hi)] = h(static_cast<std::size_t>(hi), static_cast<std::size_t>(hi));
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_total) throw NonConvergence("QR iteration on the companion matrix did not converge", hi);
    ++iter;

    const auto l = static_cast<std::size_t>(lo), m = static_cast<std::size_t>(hi);
    cplx mu;
    if (iter % 11 == 0) {
      // Exceptional shift to break cycles.
      mu = h(m, m) + 0.75 * l1(h(m, m - 1));
    } else {
      mu = wilkinson_shift(h(m - 1, m - 1), h(m - 1, m), h(m, m - 1), h(m, m));
    }

    for (std::size_t k = l; k <= m; ++k) h(k, k) -= mu;
    std::vector<double> cs(m - l);
    std::vector<cplx> sn(m - l);
    for (std::size_t k = l; k < m; ++k) {
      const cplx a = h(k, k), b = h(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      double c;
      cplx s;
      if (r == 0.0) {
        c = 1.0;
        s = 0.0;
      } else if (std::abs(a) == 0.0) {
        c = 0.0;
        s = std::conj(b) / r;
      } else {
        c = std::abs(a) / r;
        s = (a / std::abs(a)) * std::conj(b) / r;
      }
      cs[k - l] = c;
      sn[k - l] = s;
      for (std::size_t j = k; j <= m; ++j) {
        const cplx x = h(k, j), y = h(k + 1, j);
        h(k, j) = c * x + s * y;
        h(k + 1, j) = -std::conj(s) * x + c * y;
      }
    }
    for (std::size_t k = l; k < m; ++k) {
      const double c = cs[k - l];
      const cplx s = sn[k - l];
      const std::size_t rmax = std::min(k + 2, m);
      for (std::size_t i = l; i <= rmax; ++i) {
        const cplx x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * c + y * std::conj(s);
        h(i, k + 1) = -x * s + y * c;
      }
    }
    for (std::size_t k = l; k <= m; ++k) h(k, k) += mu;
  }
  return eig;
}

void horner_with_derivative(std::span<const cplx> c, cplx z, cplx& p, cplx& dp) {
  p = 0.0;
  dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

// sum_i |c_i| |z|^i, the size of the terms that cancel in p(z).
double magnitude_bound(std::span<const cplx> c, cplx z) {
  const double r = std::abs(z);
  double m = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) m = m * r + std::abs(*it);
  return m;
}

}  // namespace

double scaled_residual(std::span<const cplx> coeffs, cplx z) {
  cplx p = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * z + *it;
  const double norm = magnitude_bound(coeffs, z);
  return norm == 0.0 ? 0.0 : std::abs(p) / norm;
}

std::vector<cplx> companion_eigenvalues(std::span<const cplx> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  if (n == 1) return {-coeffs[0] / coeffs[1]};
  DenseMatrix a(n);
  const cplx lead = coeffs[n];
  for (std::size_t j = 0; j < n; ++j) a(0, j) = -coeffs[n - 1 - j] / lead;
  for (std::size_t i = 1; i < n; ++i) a(i, i - 1) = 1.0;
  // Balancing by diagonal similarity preserves the Hessenberg shape.
  balance(a);
  return hessenberg_qr(a);
}

std::vector<ComplexRoot> solve_roots(std::span<const cplx> coeffs, const RootFinderOptions& options) {
  std::size_t len = coeffs.size();
  while (len > 0 && coeffs[len - 1] == 0.0) --len;
  if (len < 2) throw std::invalid_argument("solve_roots: polynomial degree must be at least 1");
  if (std::abs(coeffs[len - 1]) <= 1e-300)
    throw std::invalid_argument("solve_roots: leading coefficient is numerically zero");
  const std::span<const cplx> p = coeffs.first(len);

  std::size_t zeros = 0;
  while (p[zeros] == 0.0) ++zeros;
  std::vector<ComplexRoot> roots(zeros, ComplexRoot{0.0, 0.0, static_cast<int>(zeros)});

  const std::span<const cplx> reduced = p.subspan(zeros);
  if (reduced.size() >= 2) {
    const std::vector<cplx> eig = companion_eigenvalues(reduced);
    for (std::size_t idx = 0; idx < eig.size(); ++idx) {
      // Newton steps may not wander further than half the distance to the
      // nearest other eigenvalue, so each root keeps its own basin.
      double sep = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < eig.size(); ++j)
        if (j != idx) sep = std::min(sep, std::abs(eig[j] - eig[idx]));
      if (zeros > 0) sep = std::min(sep, std::abs(eig[idx]));

      cplx z = eig[idx];
      cplx val, der;
      horner_with_derivative(p, z, val, der);
      double best = std::abs(val) / magnitude_bound(p, z);
      for (int it = 0; it < options.max_iter; ++it) {
        if (der == 0.0 || best == 0.0) break;
        const cplx step = val / der;
        const cplx cand = z - step;
        if (std::abs(cand - eig[idx]) > 0.5 * sep) break;
        cplx cval, cder;
        horner_with_derivative(p, cand, cval, cder);
        const double r = std::abs(cval) / magnitude_bound(p, cand);
        if (r >= best) break;
        z = cand;
        val = cval;
        der = cder;
        best = r;
        if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(z))) break;
      }
      if (!(best <= options.residual_tol))
        throw NonConvergence("Newton polishing left root " + std::to_string(idx) + " with scaled residual " +
                                 std::to_string(best),
                             static_cast<int>(idx));
      roots.push_back({z, best, 1});
    }
  }

  for (auto& r : roots) {
    int count = 0;
    for (const auto& o : roots)
      if (std::abs(o.value - r.value) <= 1e-6 * std::max(1.0, std::abs(r.value))) ++count;
    r.multiplicity_hint = count;
  }
  std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

}  // namespace indicial
