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

// Braid generators, Baxterization and Yang-Baxter residuals.
//
// A TL generator with T² = νT gives the Hecke generator
//
//     Ř = q I + X,  X = -T/√ν,  q + 1/q = √ν,
//
// so that (Ř - qI)(Ř + I/q) = 0. Jones' Baxterization
//
//     Ř(u) = u Ř - u^{-1} Ř^{-1} = (u - 1/u) Ř + (ω(q)/u) I,  ω(q) = q - 1/q
//
// then solves the braided Yang-Baxter equation with multiplicative spectral
// parameters. All checks embed on three sites.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tlhad/linalg.hpp"

namespace tlhad {

struct BraidData {
  Complex q;
  Complex nu;
  Matrix r_check;
  std::size_t local_dim = 0;
  /// max |(Ř - qI)(Ř + I/q)| at construction time.
  double hecke_residual = 0.0;
};

/// q = (√ν + √(ν - 4)) / 2 with principal branches; for real 0 < ν < 4
/// this is the unimodular root with nonnegative imaginary part. Imaginary
/// parts within a few ulps of |ν| are treated as +0.
Complex q_from_nu(Complex nu);

/// ω(q) = q - 1/q.
Complex omega_of(Complex q);

/// Ř = qI - T/√ν. Throws DomainError when T² ≈ νT fails within tol
/// (relative to max(1, |T|)) or when T is not n² x n².
BraidData braid_from_tl(const Matrix& t_local, Complex nu, double tol = 1e-9);

/// max |(Ř - qI)(Ř + I/q)|.
double hecke_residual(const Matrix& r_check, Complex q);

/// max |Ř₁₂ Ř₂₃ Ř₁₂ - Ř₂₃ Ř₁₂ Ř₂₃| on three sites of dimension n.
double check_braid(const Matrix& r_check, std::size_t n);

struct Baxterized {
  Matrix r;
  /// max |(uŘ - Ř^{-1}/u) - ((u - 1/u)Ř + (ω(q)/u) I)|.
  double formula_gap = 0.0;
};

/// Both forms of Ř(u); `r` is the linear (Hecke-reduced) form.
Baxterized baxterize(const BraidData& b, Complex u);

using SpectralSample = std::pair<Complex, Complex>;

/// `count` pairs (e^{z1}, e^{z2}) with z uniform in the complex box [-1,1]².
std::vector<SpectralSample> default_spectral_samples(std::uint64_t seed = 42,
                                                     std::size_t count = 20);

/// Worst max-abs residual of Ř₁₂(u) Ř₂₃(uw) Ř₁₂(w) - Ř₂₃(w) Ř₁₂(uw) Ř₂₃(u).
double check_spectral_ybe(const BraidData& b, const std::vector<SpectralSample>& samples);

/// R = Π Ř.
Matrix to_plain_r(const BraidData& b);
Matrix to_plain_r(const Matrix& r_check, std::size_t n);

/// max |R₁₂ R₁₃ R₂₃ - R₂₃ R₁₃ R₁₂| with R₁₃ = Π₂₃ R₁₂ Π₂₃.
double check_ybe(const Matrix& r, std::size_t n);

}  // namespace tlhad
