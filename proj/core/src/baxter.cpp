// Copyright 2026 The tlhad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tlhad/baxter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace tlhad {

namespace {

std::size_t local_dim_of(const Matrix& r) {
  if (!r.is_square() || r.empty()) throw DimensionError("braid generator must be square");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(r.rows()))));
  if (n * n != r.rows()) {
    throw DimensionError("braid generator dimension " + std::to_string(r.rows()) +
                         " is not a perfect square");
  }
  return n;
}

void require_local(const Matrix& r, std::size_t n) {
  if (r.rows() != n * n || r.cols() != n * n) {
    throw DimensionError("operator must be " + std::to_string(n * n) + "x" +
                         std::to_string(n * n));
  }
}

// Ř ⊗ I and I ⊗ Ř on three sites.
std::pair<Matrix, Matrix> three_site(const Matrix& r, std::size_t n) {
  const Matrix id = Matrix::identity(n);
  return {kron(r, id), kron(id, r)};
}

}  // namespace

Complex q_from_nu(Complex nu) {
  if (nu == Complex{}) throw DomainError("q_from_nu: nu must be nonzero");
  // A round-off imaginary part of either sign would pick opposite sides of
  // the branch cut for real nu < 4.
  if (std::abs(nu.imag()) <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(nu)) {
    nu = Complex{nu.real(), 0.0};
  }
  return (std::sqrt(nu) + std::sqrt(nu - 4.0)) / 2.0;
}

Complex omega_of(Complex q) { return q - 1.0 / q; }

double hecke_residual(const Matrix& r_check, Complex q) {
  const Matrix id = Matrix::identity(r_check.rows());
  return max_abs((r_check - id * q) * (r_check + id * (1.0 / q)));
}

BraidData braid_from_tl(const Matrix& t_local, Complex nu, double tol) {
  const std::size_t n = local_dim_of(t_local);
  const double scale = std::max(1.0, max_abs(t_local));
  const double loop = max_abs_diff(t_local * t_local, t_local * nu);
  if (loop > tol * scale * scale) {
    throw DomainError("braid_from_tl: T^2 = nu T fails (residual " + std::to_string(loop) + ")");
  }
  BraidData b;
  b.nu = nu;
  b.q = q_from_nu(nu);
  b.local_dim = n;
  b.r_check = Matrix::identity(n * n) * b.q - t_local * (1.0 / std::sqrt(nu));
  b.hecke_residual = hecke_residual(b.r_check, b.q);
  return b;
}

double check_braid(const Matrix& r_check, std::size_t n) {
  require_local(r_check, n);
  const auto [r12, r23] = three_site(r_check, n);
  return max_abs_diff(r12 * r23 * r12, r23 * r12 * r23);
}

Baxterized baxterize(const BraidData& b, Complex u) {
  if (u == Complex{}) throw DomainError("baxterize: u must be nonzero");
  const Matrix id = Matrix::identity(b.r_check.rows());
  const Matrix direct = b.r_check * u - inverse(b.r_check) * (1.0 / u);
  Baxterized out;
  out.r = b.r_check * (u - 1.0 / u) + id * (omega_of(b.q) / u);
  out.formula_gap = max_abs_diff(direct, out.r);
  return out;
}

std::vector<SpectralSample> default_spectral_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::vector<SpectralSample> samples;
  samples.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const double a = box(rng), b = box(rng), c = box(rng), d = box(rng);
    samples.emplace_back(std::exp(Complex{a, b}), std::exp(Complex{c, d}));
  }
  return samples;
}

double check_spectral_ybe(const BraidData& b, const std::vector<SpectralSample>& samples) {
  const std::size_t n = b.local_dim;
  double worst = 0.0;
  for (const auto& [u, w] : samples) {
    if (u == Complex{} || w == Complex{} || u * w == Complex{}) {
      throw DomainError("check_spectral_ybe: spectral parameters must be nonzero");
    }
    const auto [a12, a23] = three_site(baxterize(b, u).r, n);
    const auto [c12, c23] = three_site(baxterize(b, u * w).r, n);
    const auto [b12, b23] = three_site(baxterize(b, w).r, n);
    worst = std::max(worst, max_abs_diff(a12 * c23 * b12, b23 * c12 * a23));
  }
  return worst;
}

Matrix to_plain_r(const Matrix& r_check, std::size_t n) {
  require_local(r_check, n);
  return flip(n) * r_check;
}

Matrix to_plain_r(const BraidData& b) { return to_plain_r(b.r_check, b.local_dim); }

double check_ybe(const Matrix& r, std::size_t n) {
  require_local(r, n);
  const auto [r12, r23] = three_site(r, n);
  const Matrix p23 = kron(Matrix::identity(n), flip(n));
  const Matrix r13 = p23 * r12 * p23;
  return max_abs_diff(r12 * r13 * r23, r23 * r13 * r12);
}

}  // namespace tlhad
