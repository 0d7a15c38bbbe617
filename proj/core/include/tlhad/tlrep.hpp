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

// Rank-n Temperley-Lieb generators built from a single invertible matrix.
//
// The local generator on two sites is
//
//     T = Σ_{a,b} v_a w_b e_ab ⊗ M^{n_a - n_b},
//
// with v = w = (1, ..., 1) for the plain ansatz. It always satisfies the
// one-loop relation T² = α T with α = Σ v_i w_i. The braid-type relation
// T_i T_{i±1} T_i = α T_i holds iff the eigenvalues of M form a master
// matrix (generalized Hadamard) and the eigenvector matrix P makes
// Ω^{-H} P generalized Hadamard as well.
//
// Sign convention: we verify the relations the constructed T literally
// satisfies, T² = νT and T T' T = νT with ν = α. The abstract generators
// X² = -(q + 1/q) X of the Hecke quotient are X = -T/√ν (see baxter.hpp).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tlhad/hadamard.hpp"
#include "tlhad/linalg.hpp"

namespace tlhad {

class TLAnsatz {
 public:
  /// Empty v or w means all ones. Exponent order is significant and kept.
  /// Throws SingularMatrixError for non-invertible M and DomainError when
  /// α = Σ v_i w_i vanishes or sites < 2.
  TLAnsatz(Matrix m, std::vector<std::int64_t> exponents, std::vector<Complex> v = {},
           std::vector<Complex> w = {}, std::size_t sites = 3);

  const Matrix& m() const noexcept { return m_; }
  std::span<const std::int64_t> exponents() const noexcept { return exponents_; }
  std::span<const Complex> v() const noexcept { return v_; }
  std::span<const Complex> w() const noexcept { return w_; }
  std::size_t sites() const noexcept { return sites_; }
  std::size_t local_dim() const noexcept { return m_.rows(); }
  Complex alpha() const noexcept { return alpha_; }

  TLAnsatz with_sites(std::size_t sites) const;

 private:
  Matrix m_;
  std::vector<std::int64_t> exponents_;
  std::vector<Complex> v_;
  std::vector<Complex> w_;
  std::size_t sites_;
  Complex alpha_;
};

/// Σ_{a,b} v_a w_b kron(e_ab, M^{n_a - n_b}), written block by block.
Matrix build_local_generator(const TLAnsatz& a, const Tolerance& tol = {});

/// I^{⊗(site-1)} ⊗ local ⊗ I^{⊗(sites-site-1)}, site is 1-based.
Matrix embed(const Matrix& local, std::size_t site, std::size_t sites, std::size_t n);

/// embed(local, site, sites, n) · x without forming the embedded operator.
Matrix apply_embedded(const Matrix& local, std::size_t site, std::size_t sites, std::size_t n,
                      const Matrix& x);

struct TLReport {
  Complex nu;
  double loop_residual = 0.0;
  /// Unset when sites < 3.
  std::optional<double> braid_residual;
  /// Unset when sites < 4.
  std::optional<double> commute_residual;

  double worst() const;
  bool passed(double tol) const { return worst() <= tol; }
};

/// Max-abs residuals of T_i² - νT_i, T_i T_{i±1} T_i - νT_i and [T_i, T_j]
/// for |i - j| > 1 over all sites, with ν = α.
TLReport verify_tl(const TLAnsatz& a, const Tolerance& tol = {});

struct Master4Report {
  bool passed = false;
  double max_residual = 0.0;
  /// Zero-based (i, j, u) of the largest residual.
  std::array<std::size_t, 3> worst{};
};

/// All n³ conditions
///   (Σ_r v_r w_r (λ_j/λ_i)^{n_r}) · (P^{-1} V Ω^t)_{iu} (Ω^{-H} W P)_{uj} = α δ_ij
/// with Ω_ij = λ_i^{n_j}. The unweighted form (v = w = 1, α = n) is the
/// factorized TL condition for M = P Λ P^{-1}.
Master4Report check_master4(const Matrix& p, std::span<const Complex> lambdas,
                            std::span<const std::int64_t> exponents, double tol = 1e-9);

Master4Report check_master4_weighted(const Matrix& p, std::span<const Complex> lambdas,
                                     std::span<const std::int64_t> exponents,
                                     std::span<const Complex> v, std::span<const Complex> w,
                                     double tol = 1e-9);

struct EigenvectorCheck {
  bool passed = false;
  /// Verdict for H = Ω^{-H} P.
  HadamardVerdict h;
  /// max |(P^{-1} Ω^t)_{iu} (Ω^{-H} P)_{ui} - 1|.
  double product_residual = 0.0;
};

/// passed iff H = Ω^{-H} P is GHM and the product form holds.
EigenvectorCheck eigenvector_condition(const Matrix& p, const Matrix& omega, double tol = 1e-9);

/// max |(P^{-1} V Ω^t)_{iu} (Ω^{-H} W P)_{ui} - 1|, the twisted P condition
/// of the weighted ansatz.
double twisted_eigenvector_residual(const Matrix& p, const Matrix& omega,
                                    std::span<const Complex> v, std::span<const Complex> w);

/// M = P Λ P^{-1} with P = (Ω^{-H})^{-1} H. When Ω is GHM this is
/// (1/n) Ω^t H Λ H^{-1} Ω^{-H}.
Matrix reconstruct_m(const Matrix& omega, const Matrix& h, std::span<const Complex> lambdas,
                     const Tolerance& tol = {});

struct WeightedHadamardCheck {
  bool passed = false;
  double residual = 0.0;
};

/// max |Ω^{-H} V W - α (Ω^{-1})^t|.
WeightedHadamardCheck weighted_hadamard_check(const Matrix& omega, std::span<const Complex> v,
                                              std::span<const Complex> w, Complex alpha,
                                              double tol = 1e-9);

/// (g ⊗ g) T (g ⊗ g)^{-1}.
Matrix gauge_transform(const Matrix& local, const Matrix& g, const Tolerance& tol = {});

/// The 9x9 generator U^(I): weighted, v = (ω,1,1), w = (ω²,1,1).
Matrix fixture_u1();
/// The 9x9 generator U^(II): plain.
Matrix fixture_u2();

/// M = [[0,1,0],[0,0,ω],[ω²,0,0]], exponents (2,1,0), v = (ω,1,1), w = (ω²,1,1).
TLAnsatz fixture_u1_ansatz(std::size_t sites = 3);
/// M = [[0,1,0],[0,0,ω],[1,0,0]], exponents (2,0,1).
TLAnsatz fixture_u2_ansatz(std::size_t sites = 3);

}  // namespace tlhad
