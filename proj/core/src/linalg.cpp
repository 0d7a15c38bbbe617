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

#include "tlhad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

namespace tlhad {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Complex checked_complex(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("non-finite complex value");
  }
  return {re, im};
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entries length " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw DomainError("matrix entries must be finite");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged initializer rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw DomainError("matrix entries must be finite");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw DimensionError("matrix unit index out of range");
  Matrix m(n, n);
  m(a, b) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
  Matrix c(n, m);
  const auto ae = a.entries();
  const auto be = b.entries();
  auto ce = c.entries();
  // i-k-j order keeps both b and c accesses contiguous.
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = ce.data() + i * m;
    for (std::size_t k = 0; k < inner; ++k) {
      const Complex aik = ae[i * inner + k];
      if (aik == Complex{}) continue;
      const Complex* brow = be.data() + k * m;
      for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix c(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < q; ++l) {
          c(i * p + k, j * q + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

Matrix inverse(const Matrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  const double threshold = tol.abs_tol * max_abs(a);

  Matrix lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best < threshold || best == 0.0) {
      throw SingularMatrixError("inverse: pivot " + std::to_string(best) +
                                " below threshold at column " +
                                std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      std::swap(perm[col], perm[pivot]);
    }
    const Complex d = lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / d;
      lu(r, col) = factor;
      if (factor == Complex{}) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= factor * lu(col, j);
    }
  }

  // Solve L U x = P e_k column by column.
  Matrix inv(n, n);
  std::vector<Complex> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = perm[i] == k ? Complex{1.0} : Complex{};
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * x[j];
      x[ii] = s / lu(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, k) = x[i];
  }
  return inv;
}

Matrix hadamard_inverse(const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == Complex{}) throw ZeroEntryError(i, j);
      r(i, j) = 1.0 / a(i, j);
    }
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix adjoint(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

Matrix power(const Matrix& a, std::int64_t k, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("power: matrix is not square");
  Matrix base = k < 0 ? inverse(a, tol) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Matrix result = Matrix::identity(a.rows());
  while (e > 0) {
    if (e & 1U) result = mat_mul(result, base);
    e >>= 1U;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

Complex ipow(Complex z, std::int64_t k) {
  if (k < 0) {
    z = 1.0 / z;
  }
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Complex result{1.0};
  while (e > 0) {
    if (e & 1U) result *= z;
    e >>= 1U;
    if (e > 0) z *= z;
  }
  return result;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto ae = a.entries();
  const auto be = b.entries();
  for (std::size_t i = 0; i < ae.size(); ++i) m = std::max(m, std::abs(ae[i] - be[i]));
  return m;
}

Comparison approx_eq(const Matrix& a, const Matrix& b, double tol) {
  const double r = max_abs_diff(a, b);
  return {r <= tol, r};
}

Complex unit_root(std::int64_t k, std::int64_t m) {
  if (m < 1) throw DomainError("unit_root: order must be positive");
  std::int64_t r = k % m;
  if (r < 0) r += m;
  if (r == 0) return {1.0, 0.0};
  // Quarter turns are exact.
  if ((4 * r) % m == 0) {
    switch ((4 * r) / m) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

Matrix flip(std::size_t n) {
  Matrix p(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1.0;
  return p;
}

std::size_t numerical_rank(const Matrix& a, double rel_tol) {
  Matrix w = a;
  const double threshold = rel_tol * max_abs(a);
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = step, pc = step;
    double best = 0.0;
    for (std::size_t i = step; i < rows; ++i)
      for (std::size_t j = step; j < cols; ++j)
        if (std::abs(w(i, j)) > best) {
          best = std::abs(w(i, j));
          pr = i;
          pc = j;
        }
    if (best <= threshold || best == 0.0) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(w(step, j), w(pr, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(w(i, step), w(i, pc));
    for (std::size_t i = step + 1; i < rows; ++i) {
      const Complex f = w(i, step) / w(step, step);
      for (std::size_t j = step; j < cols; ++j) w(i, j) -= f * w(step, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace tlhad
