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

// Dense complex matrices in row-major storage.
//
// Everything in the library is built on this kernel: products, Kronecker
// products, LU inversion with partial pivoting, entrywise (Hadamard)
// reciprocals and tolerance-based comparison. All equalities are checked
// numerically; there is no exact cyclotomic arithmetic.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tlhad/errors.hpp"

namespace tlhad {

using Complex = std::complex<double>;

/// Throws DomainError unless both parts are finite.
Complex checked_complex(double re, double im);

struct Tolerance {
  double abs_tol = 1e-9;
  double fixture_tol = 1e-12;
};

class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of a row-major entry vector; rejects wrong lengths and
  /// non-finite values.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const Complex> diag);
  /// Canonical matrix unit e_ab (zero-indexed).
  static Matrix unit(std::size_t n, std::size_t a, std::size_t b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, Complex s);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Standard product; DimensionError when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// (a ⊗ b)[i*p + k, j*q + l] = a[i,j] * b[k,l] where b is p x q.
Matrix kron(const Matrix& a, const Matrix& b);

/// LU with partial pivoting on |.|. Throws SingularMatrixError when a pivot
/// magnitude drops below tol.abs_tol * max_abs(a).
Matrix inverse(const Matrix& a, const Tolerance& tol = {});

/// Entrywise reciprocal; ZeroEntryError names the first zero entry.
Matrix hadamard_inverse(const Matrix& a);

Matrix transpose(const Matrix& a);
Matrix adjoint(const Matrix& a);

/// Integer power; negative exponents use powers of inverse(a).
Matrix power(const Matrix& a, std::int64_t k, const Tolerance& tol = {});

/// Binary exponentiation of a scalar; negative k inverts first.
Complex ipow(Complex z, std::int64_t k);

double max_abs(const Matrix& a);

struct Comparison {
  bool equal = false;
  double max_residual = 0.0;
  explicit operator bool() const noexcept { return equal; }
};

/// max |a - b| entrywise against tol; DimensionError on shape mismatch.
Comparison approx_eq(const Matrix& a, const Matrix& b, double tol);

/// max |a - b| entrywise.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// e^{2 pi i k / m}. The exponent is reduced mod m first and quarter turns
/// are returned exactly.
Complex unit_root(std::int64_t k, std::int64_t m);

/// Swap operator on C^n ⊗ C^n: Π(x ⊗ y) = y ⊗ x.
Matrix flip(std::size_t n);

/// Rank by complete-pivoting elimination; pivots below
/// rel_tol * max_abs(a) count as zero.
std::size_t numerical_rank(const Matrix& a, double rel_tol = 1e-9);

}  // namespace tlhad
