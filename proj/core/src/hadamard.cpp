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

#include "tlhad/hadamard.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace tlhad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_entries_nonzero(const Matrix& u) {
  for (const auto& e : u.entries())
    if (e == Complex{}) return false;
  return true;
}

// Nearest q-th root of unity to z, by angle.
Complex snap_to_root(Complex z, std::int64_t q) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(q)));
  return unit_root(k, q);
}

bool entries_are_roots(const Matrix& u, std::int64_t q, double tol) {
  for (const auto& e : u.entries())
    if (std::abs(e - snap_to_root(e, q)) > tol) return false;
  return true;
}

}  // namespace

HadamardVerdict is_ghm(const Matrix& u, double tol) {
  HadamardVerdict v;
  if (!u.is_square() || u.empty()) {
    v.max_residual = kInf;
    v.reason = "matrix is not square";
    return v;
  }
  if (!all_entries_nonzero(u)) {
    v.max_residual = kInf;
    v.reason = "matrix has a zero entry";
    return v;
  }
  Matrix inv;
  try {
    inv = inverse(u, Tolerance{tol, tol});
  } catch (const SingularMatrixError&) {
    v.max_residual = kInf;
    v.reason = "matrix is singular";
    return v;
  }
  const auto n = static_cast<double>(u.rows());
  double worst = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      worst = std::max(worst, std::abs(n * u(i, j) * inv(j, i) - 1.0));
  v.max_residual = worst;
  v.is_ghm = worst <= tol;
  if (!v.is_ghm) {
    v.reason = "generalized Hadamard residual " + std::to_string(worst);
    return v;
  }
  v.is_chm = is_chm(u, tol);
  if (v.is_chm) {
    for (std::int64_t q = 1; q <= kButsonSearchLimit; ++q) {
      if (entries_are_roots(u, q, tol)) {
        v.butson_order = q;
        break;
      }
    }
  }
  return v;
}

bool is_chm(const Matrix& u, double tol) {
  if (!u.is_square() || u.empty()) return false;
  for (const auto& e : u.entries())
    if (std::abs(std::abs(e) - 1.0) > tol) return false;
  const Matrix gram = mat_mul(u, adjoint(u));
  const auto n = static_cast<double>(u.rows());
  return approx_eq(gram, Matrix::identity(u.rows()) * Complex{n}, tol).equal;
}

bool is_butson(const Matrix& u, std::int64_t q, double tol) {
  if (q < 1) throw DomainError("is_butson: order must be positive");
  return is_chm(u, tol) && entries_are_roots(u, q, tol);
}

EquivalenceMove EquivalenceMove::identity(std::size_t n) {
  EquivalenceMove m;
  m.left_perm.resize(n);
  m.right_perm.resize(n);
  std::iota(m.left_perm.begin(), m.left_perm.end(), std::size_t{0});
  std::iota(m.right_perm.begin(), m.right_perm.end(), std::size_t{0});
  m.left_diag.assign(n, Complex{1.0});
  m.right_diag.assign(n, Complex{1.0});
  return m;
}

namespace {

void validate_perm(std::span<const std::size_t> p, std::size_t n, const char* which) {
  if (p.size() != n) throw DimensionError(std::string(which) + " has wrong length");
  std::vector<bool> seen(n, false);
  for (auto x : p) {
    if (x >= n || seen[x]) throw DomainError(std::string(which) + " is not a bijection");
    seen[x] = true;
  }
}

void validate_diag(std::span<const Complex> d, std::size_t n, const char* which) {
  if (d.size() != n) throw DimensionError(std::string(which) + " has wrong length");
  for (const auto& x : d)
    if (x == Complex{}) throw DomainError(std::string(which) + " has a zero entry");
}

}  // namespace

void validate(const EquivalenceMove& move, std::size_t n) {
  validate_perm(move.left_perm, n, "left_perm");
  validate_perm(move.right_perm, n, "right_perm");
  validate_diag(move.left_diag, n, "left_diag");
  validate_diag(move.right_diag, n, "right_diag");
}

Matrix permutation_matrix(std::span<const std::size_t> perm) {
  Matrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1.0;
  return p;
}

Matrix apply_equivalence(const Matrix& u, const EquivalenceMove& move) {
  if (!u.is_square()) throw DimensionError("apply_equivalence: matrix is not square");
  validate(move, u.rows());
  return permutation_matrix(move.left_perm) * Matrix::diagonal(move.left_diag) * u *
         Matrix::diagonal(move.right_diag) * permutation_matrix(move.right_perm);
}

EquivalenceMove inverse_move(const EquivalenceMove& move) {
  // U = D1^{-1} σ1^{-1} H' σ2^{-1} D2^{-1}
  //   = σ1^{-1} (σ1 D1^{-1} σ1^{-1}) H' (σ2^{-1} D2^{-1} σ2) σ2^{-1}.
  const std::size_t n = move.left_perm.size();
  validate(move, n);
  EquivalenceMove inv;
  inv.left_perm.resize(n);
  inv.right_perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv.left_perm[move.left_perm[i]] = i;
    inv.right_perm[move.right_perm[i]] = i;
  }
  // (σ D σ^{-1})_ii = D_{p[i]} with σ_{i,p[i]} = 1.
  inv.left_diag.resize(n);
  inv.right_diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv.left_diag[i] = 1.0 / move.left_diag[move.left_perm[i]];
    inv.right_diag[i] = 1.0 / move.right_diag[inv.right_perm[i]];
  }
  return inv;
}

std::pair<Matrix, EquivalenceMove> dephase(const Matrix& u) {
  if (!u.is_square() || u.empty()) throw DimensionError("dephase: matrix is not square");
  const std::size_t n = u.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (u(k, 0) == Complex{}) throw ZeroEntryError(k, 0);
    if (u(0, k) == Complex{}) throw ZeroEntryError(0, k);
  }
  EquivalenceMove move = EquivalenceMove::identity(n);
  for (std::size_t i = 0; i < n; ++i) move.left_diag[i] = 1.0 / u(i, 0);
  for (std::size_t j = 0; j < n; ++j) move.right_diag[j] = u(0, 0) / u(0, j);

  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = move.left_diag[i] * u(i, j) * move.right_diag[j];
  // Exact ones on the border; the products above are already within an ulp.
  for (std::size_t k = 0; k < n; ++k) h(k, 0) = h(0, k) = 1.0;
  return {std::move(h), std::move(move)};
}

bool is_dephased(const Matrix& u, double tol) {
  if (!u.is_square() || u.empty()) return false;
  for (std::size_t k = 0; k < u.rows(); ++k) {
    if (std::abs(u(k, 0) - 1.0) > tol || std::abs(u(0, k) - 1.0) > tol) return false;
  }
  return true;
}

Matrix fourier(std::int64_t n, std::int64_t ell) {
  if (n < 1) throw DomainError("fourier: size must be positive");
  if (std::gcd(ell, n) != 1) {
    throw DomainError("fourier: ell=" + std::to_string(ell) +
                      " is not coprime to n=" + std::to_string(n));
  }
  const auto size = static_cast<std::size_t>(n);
  Matrix f(size, size);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      f(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
          unit_root((((ell % n) * a) % n) * b, n);
  return f;
}

Matrix f4_family(Complex a) {
  if (a == Complex{}) throw DomainError("f4_family: parameter must be nonzero");
  return Matrix{{1.0, 1.0, 1.0, 1.0},
                {1.0, -1.0, 1.0, -1.0},
                {1.0, a, -1.0, -a},
                {1.0, -a, -1.0, a}};
}

Matrix f6_family(Complex a, Complex b) {
  if (a == Complex{} || b == Complex{}) {
    throw DomainError("f6_family: parameters must be nonzero");
  }
  const Complex w2 = unit_root(2, 6);
  const Complex w4 = unit_root(4, 6);
  return Matrix{{1.0, 1.0, 1.0, 1.0, 1.0, 1.0},
                {1.0, w2, w4, 1.0, w2, w4},
                {1.0, w4, w2, 1.0, w4, w2},
                {1.0, a, b, -1.0, -a, -b},
                {1.0, a * w2, b * w4, -1.0, -a * w2, -b * w4},
                {1.0, a * w4, b * w2, -1.0, -a * w4, -b * w2}};
}

Matrix dita(const Matrix& a, std::span<const Matrix> bs) {
  if (!a.is_square() || a.empty()) throw DimensionError("dita: A must be square");
  const std::size_t n = a.rows();
  if (bs.size() != n) {
    throw DimensionError("dita: expected " + std::to_string(n) + " blocks, got " +
                         std::to_string(bs.size()));
  }
  const std::size_t m = bs.front().rows();
  for (const auto& b : bs) {
    if (!b.is_square() || b.rows() != m || m == 0) {
      throw DimensionError("dita: blocks must all be square of the same size");
    }
  }
  Matrix c(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) c(i * m + k, j * m + l) = a(i, j) * bs[i](k, l);
  return c;
}

}  // namespace tlhad
