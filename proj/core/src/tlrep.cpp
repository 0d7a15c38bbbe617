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

#include "tlhad/tlrep.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace tlhad {

namespace {

std::size_t ipow_size(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square() || m.empty()) throw DimensionError(std::string(what) + ": matrix is not square");
}

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(want) +
                         ", got " + std::to_string(got));
  }
}

Matrix diag_or_identity(std::span<const Complex> d, std::size_t n) {
  if (d.empty()) return Matrix::identity(n);
  require_length(d.size(), n, "weight vector");
  return Matrix::diagonal(d);
}

}  // namespace

TLAnsatz::TLAnsatz(Matrix m, std::vector<std::int64_t> exponents, std::vector<Complex> v,
                   std::vector<Complex> w, std::size_t sites)
    : m_(std::move(m)),
      exponents_(std::move(exponents)),
      v_(std::move(v)),
      w_(std::move(w)),
      sites_(sites) {
  require_square(m_, "TLAnsatz");
  const std::size_t n = m_.rows();
  require_length(exponents_.size(), n, "TLAnsatz exponents");
  if (v_.empty()) v_.assign(n, Complex{1.0});
  if (w_.empty()) w_.assign(n, Complex{1.0});
  require_length(v_.size(), n, "TLAnsatz v");
  require_length(w_.size(), n, "TLAnsatz w");
  if (sites_ < 2) throw DomainError("TLAnsatz: need at least 2 sites");
  (void)inverse(m_);  // throws when singular
  alpha_ = 0.0;
  for (std::size_t i = 0; i < n; ++i) alpha_ += v_[i] * w_[i];
  if (std::abs(alpha_) <= 1e-12) throw DomainError("TLAnsatz: Σ v_i w_i must be nonzero");
}

TLAnsatz TLAnsatz::with_sites(std::size_t sites) const {
  return TLAnsatz(m_, exponents_, v_, w_, sites);
}

Matrix build_local_generator(const TLAnsatz& a, const Tolerance& tol) {
  const std::size_t n = a.local_dim();
  const auto ex = a.exponents();
  std::int64_t lo = 0, hi = 0;
  for (auto x : ex)
    for (auto y : ex) {
      lo = std::min(lo, x - y);
      hi = std::max(hi, x - y);
    }
  // powers[d - lo] = M^d by repeated multiplication from M and M^{-1}.
  std::vector<Matrix> powers(static_cast<std::size_t>(hi - lo + 1));
  const auto at = [&](std::int64_t d) -> Matrix& { return powers[static_cast<std::size_t>(d - lo)]; };
  at(0) = Matrix::identity(n);
  for (std::int64_t d = 1; d <= hi; ++d) at(d) = mat_mul(at(d - 1), a.m());
  if (lo < 0) {
    const Matrix minv = inverse(a.m(), tol);
    for (std::int64_t d = -1; d >= lo; --d) at(d) = mat_mul(at(d + 1), minv);
  }

  Matrix t(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex coef = a.v()[r] * a.w()[c];
      const Matrix& block = at(ex[r] - ex[c]);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) t(r * n + k, c * n + l) = coef * block(k, l);
    }
  }
  return t;
}

Matrix embed(const Matrix& local, std::size_t site, std::size_t sites, std::size_t n) {
  if (local.rows() != n * n || local.cols() != n * n) {
    throw DimensionError("embed: local operator must be n^2 x n^2");
  }
  if (site < 1 || site + 1 > sites) {
    throw DimensionError("embed: site " + std::to_string(site) + " out of range for " +
                         std::to_string(sites) + " sites");
  }
  const Matrix left = Matrix::identity(ipow_size(n, site - 1));
  const Matrix right = Matrix::identity(ipow_size(n, sites - site - 1));
  return kron(kron(left, local), right);
}

Matrix apply_embedded(const Matrix& local, std::size_t site, std::size_t sites, std::size_t n,
                      const Matrix& x) {
  if (local.rows() != n * n || local.cols() != n * n) {
    throw DimensionError("apply_embedded: local operator must be n^2 x n^2");
  }
  if (site < 1 || site + 1 > sites) throw DimensionError("apply_embedded: site out of range");
  const std::size_t dim = ipow_size(n, sites);
  if (x.rows() != dim) throw DimensionError("apply_embedded: operand has wrong row count");

  const std::size_t pair = n * n;
  const std::size_t left = ipow_size(n, site - 1);
  const std::size_t right = ipow_size(n, sites - site - 1);
  const std::size_t cols = x.cols();
  Matrix out(dim, cols);
  const auto xe = x.entries();
  auto oe = out.entries();
  // Row index = (l * n² + p) * right + r.
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t p = 0; p < pair; ++p) {
      for (std::size_t q = 0; q < pair; ++q) {
        const Complex coef = local(p, q);
        if (coef == Complex{}) continue;
        for (std::size_t r = 0; r < right; ++r) {
          Complex* dst = oe.data() + ((l * pair + p) * right + r) * cols;
          const Complex* src = xe.data() + ((l * pair + q) * right + r) * cols;
          for (std::size_t c = 0; c < cols; ++c) dst[c] += coef * src[c];
        }
      }
    }
  }
  return out;
}

double TLReport::worst() const {
  double w = loop_residual;
  if (braid_residual) w = std::max(w, *braid_residual);
  if (commute_residual) w = std::max(w, *commute_residual);
  return w;
}

TLReport verify_tl(const TLAnsatz& a, const Tolerance& tol) {
  const std::size_t n = a.local_dim();
  const std::size_t sites = a.sites();
  const Complex nu = a.alpha();
  const Matrix local = build_local_generator(a, tol);

  TLReport report;
  report.nu = nu;
  report.loop_residual = max_abs_diff(mat_mul(local, local), local * nu);

  if (sites >= 3) {
    std::vector<Matrix> gens;
    gens.reserve(sites - 1);
    for (std::size_t i = 1; i < sites; ++i) gens.push_back(embed(local, i, sites, n));
    double braid = 0.0;
    for (std::size_t i = 1; i + 1 < sites; ++i) {
      // T_i T_{i+1} T_i and T_{i+1} T_i T_{i+1}
      const Matrix iji = apply_embedded(local, i, sites, n,
                                        apply_embedded(local, i + 1, sites, n, gens[i - 1]));
      const Matrix jij = apply_embedded(local, i + 1, sites, n,
                                        apply_embedded(local, i, sites, n, gens[i]));
      braid = std::max(braid, max_abs_diff(iji, gens[i - 1] * nu));
      braid = std::max(braid, max_abs_diff(jij, gens[i] * nu));
    }
    report.braid_residual = braid;

    if (sites >= 4) {
      double commute = 0.0;
      for (std::size_t i = 1; i < sites; ++i)
        for (std::size_t j = i + 2; j < sites; ++j) {
          const Matrix ij = apply_embedded(local, i, sites, n, gens[j - 1]);
          const Matrix ji = apply_embedded(local, j, sites, n, gens[i - 1]);
          commute = std::max(commute, max_abs_diff(ij, ji));
        }
      report.commute_residual = commute;
    }
  }
  return report;
}

namespace {

Matrix omega_from(std::span<const Complex> lambdas, std::span<const std::int64_t> exponents) {
  const std::size_t n = lambdas.size();
  require_length(exponents.size(), n, "master4 exponents");
  Matrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) omega(i, j) = ipow(lambdas[i], exponents[j]);
  return omega;
}

}  // namespace

Master4Report check_master4_weighted(const Matrix& p, std::span<const Complex> lambdas,
                                     std::span<const std::int64_t> exponents,
                                     std::span<const Complex> v, std::span<const Complex> w,
                                     double tol) {
  require_square(p, "check_master4");
  const std::size_t n = p.rows();
  require_length(lambdas.size(), n, "check_master4 lambdas");
  const Matrix vd = diag_or_identity(v, n);
  const Matrix wd = diag_or_identity(w, n);
  Complex alpha{};
  for (std::size_t i = 0; i < n; ++i) alpha += vd(i, i) * wd(i, i);

  const Matrix omega = omega_from(lambdas, exponents);
  const Matrix pinv = inverse(p);
  const Matrix left = pinv * vd * transpose(omega);            // (P^{-1} V Ω^t)_{iu}
  const Matrix right = hadamard_inverse(omega) * wd * p;       // (Ω^{-H} W P)_{uj}

  Master4Report rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex eig{};
      const Complex ratio = lambdas[j] / lambdas[i];
      for (std::size_t r = 0; r < n; ++r) eig += vd(r, r) * wd(r, r) * ipow(ratio, exponents[r]);
      const Complex target = i == j ? alpha : Complex{};
      for (std::size_t u = 0; u < n; ++u) {
        const double res = std::abs(eig * left(i, u) * right(u, j) - target);
        if (res > rep.max_residual) {
          rep.max_residual = res;
          rep.worst = {i, j, u};
        }
      }
    }
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

Master4Report check_master4(const Matrix& p, std::span<const Complex> lambdas,
                            std::span<const std::int64_t> exponents, double tol) {
  return check_master4_weighted(p, lambdas, exponents, {}, {}, tol);
}

EigenvectorCheck eigenvector_condition(const Matrix& p, const Matrix& omega, double tol) {
  require_square(p, "eigenvector_condition");
  require_square(omega, "eigenvector_condition");
  if (p.rows() != omega.rows()) throw DimensionError("eigenvector_condition: size mismatch");
  EigenvectorCheck out;
  const Matrix h = hadamard_inverse(omega) * p;
  out.h = is_ghm(h, tol);
  out.product_residual = twisted_eigenvector_residual(p, omega, {}, {});
  out.passed = out.h.is_ghm && out.product_residual <= tol;
  return out;
}

double twisted_eigenvector_residual(const Matrix& p, const Matrix& omega,
                                    std::span<const Complex> v, std::span<const Complex> w) {
  require_square(p, "twisted_eigenvector_residual");
  const std::size_t n = p.rows();
  if (omega.rows() != n || omega.cols() != n) {
    throw DimensionError("twisted_eigenvector_residual: size mismatch");
  }
  const Matrix left = inverse(p) * diag_or_identity(v, n) * transpose(omega);
  const Matrix right = hadamard_inverse(omega) * diag_or_identity(w, n) * p;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < n; ++u)
      worst = std::max(worst, std::abs(left(i, u) * right(u, i) - 1.0));
  return worst;
}

Matrix reconstruct_m(const Matrix& omega, const Matrix& h, std::span<const Complex> lambdas,
                     const Tolerance& tol) {
  require_square(omega, "reconstruct_m");
  require_square(h, "reconstruct_m");
  const std::size_t n = omega.rows();
  if (h.rows() != n) throw DimensionError("reconstruct_m: Ω and H sizes differ");
  require_length(lambdas.size(), n, "reconstruct_m lambdas");
  const Matrix p = inverse(hadamard_inverse(omega), tol) * h;
  return p * Matrix::diagonal(lambdas) * inverse(p, tol);
}

WeightedHadamardCheck weighted_hadamard_check(const Matrix& omega, std::span<const Complex> v,
                                              std::span<const Complex> w, Complex alpha,
                                              double tol) {
  require_square(omega, "weighted_hadamard_check");
  const std::size_t n = omega.rows();
  const Matrix lhs = hadamard_inverse(omega) * diag_or_identity(v, n) * diag_or_identity(w, n);
  const Matrix rhs = transpose(inverse(omega)) * alpha;
  WeightedHadamardCheck out;
  out.residual = max_abs_diff(lhs, rhs);
  out.passed = out.residual <= tol;
  return out;
}

Matrix gauge_transform(const Matrix& local, const Matrix& g, const Tolerance& tol) {
  require_square(g, "gauge_transform");
  const Matrix gg = kron(g, g);
  if (local.rows() != gg.rows() || local.cols() != gg.cols()) {
    throw DimensionError("gauge_transform: generator must be n^2 x n^2");
  }
  const Matrix ginv = inverse(g, tol);
  return gg * local * kron(ginv, ginv);
}

Matrix fixture_u2() {
  const Complex w = unit_root(1, 3);
  const Complex w2 = unit_root(2, 3);
  return Matrix{{1, 0, 0, 0, 0, w, 0, 1, 0},
                {0, 1, 0, w, 0, 0, 0, 0, w},
                {0, 0, 1, 0, 1, 0, 1, 0, 0},
                {0, w2, 0, 1, 0, 0, 0, 0, 1},
                {0, 0, 1, 0, 1, 0, 1, 0, 0},
                {w2, 0, 0, 0, 0, 1, 0, w2, 0},
                {0, 0, 1, 0, 1, 0, 1, 0, 0},
                {1, 0, 0, 0, 0, w, 0, 1, 0},
                {0, w2, 0, 1, 0, 0, 0, 0, 1}};
}

Matrix fixture_u1() {
  const Complex w = unit_root(1, 3);
  const Complex w2 = unit_root(2, 3);
  return Matrix{{1, 0, 0, 0, w, 0, 0, 0, w2},
                {0, 1, 0, 0, 0, w2, w, 0, 0},
                {0, 0, 1, 1, 0, 0, 0, 1, 0},
                {0, 0, 1, 1, 0, 0, 0, 1, 0},
                {w2, 0, 0, 0, 1, 0, 0, 0, w},
                {0, w, 0, 0, 0, 1, w2, 0, 0},
                {0, w2, 0, 0, 0, w, 1, 0, 0},
                {0, 0, 1, 1, 0, 0, 0, 1, 0},
                {w, 0, 0, 0, w2, 0, 0, 0, 1}};
}

TLAnsatz fixture_u1_ansatz(std::size_t sites) {
  const Complex w = unit_root(1, 3);
  const Complex w2 = unit_root(2, 3);
  Matrix m{{0, 1, 0}, {0, 0, w}, {w2, 0, 0}};
  return TLAnsatz(std::move(m), {2, 1, 0}, {w, 1, 1}, {w2, 1, 1}, sites);
}

TLAnsatz fixture_u2_ansatz(std::size_t sites) {
  const Complex w = unit_root(1, 3);
  Matrix m{{0, 1, 0}, {0, 0, w}, {1, 0, 0}};
  return TLAnsatz(std::move(m), {2, 0, 1}, {}, {}, sites);
}

}  // namespace tlhad
