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

// Master matrices and master polynomials.
//
// A MasterSpec pairs eigenvalues λ_i with integer exponents n_a. Its master
// matrix is Ω_ij = λ_i^{n_j} and its master polynomial p(z) = Σ_a z^{n_a}.
// The rank-n TL ansatz closes on the eigenvalue side iff
//
//     Σ_a (λ_i/λ_j)^{n_a} = n δ_ij,
//
// i.e. every ratio of distinct eigenvalues is a root of p and Ω is a
// generalized Hadamard matrix.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tlhad/linalg.hpp"

namespace tlhad {

class MasterSpec {
 public:
  /// Validates: equal nonzero lengths, λ nonzero and pairwise distinct
  /// (relative separation 1e-12), exponents nonnegative and pairwise
  /// distinct. Order is preserved as given.
  MasterSpec(std::vector<Complex> lambdas, std::vector<std::int64_t> exponents);

  std::size_t size() const noexcept { return lambdas_.size(); }
  std::span<const Complex> lambdas() const noexcept { return lambdas_; }
  std::span<const std::int64_t> exponents() const noexcept { return exponents_; }

 private:
  std::vector<Complex> lambdas_;
  std::vector<std::int64_t> exponents_;
};

/// Shift so the minimum is zero, then sort ascending. Only exponent
/// differences matter to the ansatz, and column order of Ω is immaterial to
/// the master condition.
std::vector<std::int64_t> normalize_exponents(std::vector<std::int64_t> exponents);

/// `spec` with normalize_exponents applied.
MasterSpec normalized(const MasterSpec& spec);

Matrix master_matrix(const MasterSpec& spec);

Complex master_polynomial_eval(std::span<const std::int64_t> exponents, Complex z);

struct MasterCheck {
  bool passed = false;
  std::size_t n = 0;
  /// Row-major n x n: residuals[i*n + j] = |Σ_a (λ_i/λ_j)^{n_a} - n δ_ij|.
  std::vector<double> residuals;
  double max_residual = 0.0;
};

MasterCheck check_master_condition(const MasterSpec& spec, double tol = 1e-9);

/// λ_a = e^{2πiℓ(a-1)/n}, n_b = b - 1.
MasterSpec fourier_master(std::int64_t n, std::int64_t ell = 1);

/// p(z) = (1+z)(1+z^{2k}); λ = (1, -1, a, -a), a = e^{iπm/2k}, m odd.
/// The master matrix equals f4_family(a) in the same row/column order.
MasterSpec f4_master(std::int64_t k, std::int64_t m);

/// p(z) = (1 + z^{3r+1} + z^{3s+2})(1 + z^{3k}), 0 < r, s < k.
/// Eigenvalues are ordered (1, ω², ω⁴, c, ω²c, ω⁴c) with ω = e^{iπ/3},
/// c = e^{iπ/3k}, so the master matrix equals f6_family(c^{3r+1}, c^{3s+2})
/// entry for entry.
MasterSpec f6_master(std::int64_t k, std::int64_t r, std::int64_t s);

struct NestingStage {
  std::int64_t p = 2;
  std::int64_t k = 1;
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> f;
};

struct NestingSpec {
  std::vector<NestingStage> stages;
};

void validate(const NestingSpec& spec);

/// Iterated Fourier nesting F(z) = Π_j F_{p_j}(z^{η_j}) with η_1 = 1,
/// η_{j+1} = k_j p_j η_j, and
///   F_p(z) = Σ_{i=1}^{p} z^{g_i p + i - 1},
///   λ_{i_1..i_J} = Π_j ω_j^{f_{j,i_j} p_j + i_j - 1},  ω_j = e^{2πi/(η_j p_j)}.
/// Multi-indices are flattened with the last stage most significant (the
/// Diţă block layout); exponents come back normalized.
MasterSpec nest(const NestingSpec& spec);

struct ObstructionReport {
  std::int64_t root_order = 0;
  std::size_t distinct_rows = 0;
};

/// If every entry of u is (within tol) an m-th root of unity for a minimal
/// m <= max_order and u has more than m distinct rows, u cannot be a master
/// matrix with coprime exponents: each λ_i would itself be an m-th root.
std::optional<ObstructionReport> pigeonhole_obstruction(const Matrix& u,
                                                        double tol = 1e-9,
                                                        std::int64_t max_order = 360);

/// Bounded brute-force search for λ, n with Ω(λ, n) ≈ u.
///
/// Exponent tuples have n_1 = 0, pairwise distinct entries in
/// [0, exponent_bound] and gcd 1; λ candidates are the roots of unity of
/// order <= root_order_bound. Tuples are enumerated lexicographically with
/// per-row pruning; the first match wins. A non-dephased input is dephased
/// first and the result describes the dephased matrix. `nullopt` is only
/// conclusive within the bounds.
std::optional<MasterSpec> search_master_representation(const Matrix& u,
                                                       std::int64_t exponent_bound,
                                                       std::int64_t root_order_bound,
                                                       double tol = 1e-9);

/// 6x6 CHM built from cube roots j = e^{2πi/3}; not a master matrix.
Matrix h0();

/// 6x6 one-parameter family; conj(a) appears where the printed form has ā.
Matrix h1(Complex a);

}  // namespace tlhad
