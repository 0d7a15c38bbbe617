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

// Complex, generalized and Butson Hadamard matrices.
//
// A generalized Hadamard matrix (GHM) U of size n has no zero entries and
// satisfies U^{-H} = n (U^{-1})^t, where U^{-H} is the entrywise reciprocal.
// Equivalently n U_ij (U^{-1})_ji = 1 for all i, j, which is the form the
// predicate evaluates. A complex Hadamard matrix (CHM) additionally has
// unimodular entries, in which case the condition reads U U^† = n I.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tlhad/linalg.hpp"

namespace tlhad {

struct HadamardVerdict {
  bool is_chm = false;
  bool is_ghm = false;
  /// Smallest q for which the matrix is Butson of order q (searched up to
  /// kButsonSearchLimit); only set when is_chm.
  std::optional<std::int64_t> butson_order;
  /// max |n U_ij (U^{-1})_ji - 1|; infinity when singular or zero entries.
  double max_residual = 0.0;
  /// Empty when GHM, otherwise a short human-readable reason.
  std::string reason;
};

inline constexpr std::int64_t kButsonSearchLimit = 64;

/// Full classification. is_chm implies is_ghm and butson_order implies is_chm.
HadamardVerdict is_ghm(const Matrix& u, double tol = 1e-9);

/// Unimodular entries within tol and U U^† = n I within tol.
bool is_chm(const Matrix& u, double tol = 1e-9);

/// CHM whose entries all lie within tol of a q-th root of unity.
bool is_butson(const Matrix& u, std::int64_t q, double tol = 1e-9);

/// σ1 · D1 · U · D2 · σ2. A permutation p acts through the matrix with
/// entries P[i][p[i]] = 1, so (σ1 U) row i is U row left_perm[i].
struct EquivalenceMove {
  std::vector<std::size_t> left_perm;
  std::vector<Complex> left_diag;
  std::vector<Complex> right_diag;
  std::vector<std::size_t> right_perm;

  static EquivalenceMove identity(std::size_t n);
};

/// Validates the move (bijective permutations, nonzero diagonals, sizes).
void validate(const EquivalenceMove& move, std::size_t n);

Matrix permutation_matrix(std::span<const std::size_t> perm);

Matrix apply_equivalence(const Matrix& u, const EquivalenceMove& move);

/// The move that undoes `move`: apply_equivalence(apply_equivalence(U, m),
/// inverse_move(m)) == U.
EquivalenceMove inverse_move(const EquivalenceMove& move);

/// Normalizes the first row and column to ones with
/// D1 = diag(1/U_i1), D2 = diag(U_11/U_1j) and identity permutations.
/// Returns the dephased matrix and the move that produced it.
std::pair<Matrix, EquivalenceMove> dephase(const Matrix& u);

bool is_dephased(const Matrix& u, double tol = 1e-12);

/// Ω_ab = ω^{(a-1)(b-1)} with ω = e^{2πiℓ/n}; gcd(ℓ, n) must be 1.
Matrix fourier(std::int64_t n, std::int64_t ell = 1);

/// One-parameter 4x4 family; CHM for |a| = 1, GHM for any a != 0.
Matrix f4_family(Complex a);

/// Two-parameter 6x6 family with ω = e^{iπ/3}.
Matrix f6_family(Complex a, Complex b);

/// Diţă block construction: block (i, j) equals A_ij · B^(i).
Matrix dita(const Matrix& a, std::span<const Matrix> bs);

}  // namespace tlhad
