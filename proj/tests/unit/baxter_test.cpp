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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tlhad/baxter.hpp"
#include "tlhad/hadamard.hpp"
#include "tlhad/master.hpp"
#include "tlhad/tlrep.hpp"

namespace tlhad {
namespace {

using testing::Rng;

BraidData fourier_braid(std::int64_t n) {
  const MasterSpec spec = fourier_master(n);
  const Matrix m = reconstruct_m(master_matrix(spec), fourier(n), spec.lambdas());
  const TLAnsatz a(m, {spec.exponents().begin(), spec.exponents().end()});
  return braid_from_tl(build_local_generator(a), a.alpha());
}

BraidData u2_braid() {
  const TLAnsatz a = fixture_u2_ansatz();
  return braid_from_tl(build_local_generator(a), a.alpha());
}

// Three-site braid residual through the oracle embedding.
double oracle_braid(const Matrix& r, std::size_t n) {
  const Matrix a = testing::oracle_embed(r, 1, 3, n), b = testing::oracle_embed(r, 2, 3, n);
  return testing::oracle_max_diff(a * b * a, b * a * b);
}

TEST(QFromNu, Examples) {
  EXPECT_LE(std::abs(q_from_nu(4.0) - 1.0), 1e-15);
  EXPECT_LE(std::abs(q_from_nu(3.0) - Complex(std::sqrt(3.0) / 2.0, 0.5)), 1e-15);
  EXPECT_LE(std::abs(q_from_nu(9.0) - (3.0 + std::sqrt(5.0)) / 2.0), 1e-15);
  EXPECT_THROW(q_from_nu(0.0), DomainError);
}

TEST(QFromNu, SolvesQuadraticAndPicksUpperBranch) {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const Complex nu = (t % 2) ? Complex(rng.uniform(0.1, 3.99), 0.0) : rng.nonzero(0.1, 10.0);
    const Complex q = q_from_nu(nu);
    EXPECT_LE(std::abs(q + 1.0 / q - std::sqrt(nu)), 1e-12);
    if (t % 2) {
      EXPECT_NEAR(std::abs(q), 1.0, 1e-14);
      EXPECT_GE(q.imag(), 0.0);
    }
  }
  // Round-off in the imaginary part does not flip the branch.
  EXPECT_GT(q_from_nu(Complex(3.0, -1e-16)).imag(), 0.0);
  EXPECT_GT(q_from_nu(Complex(3.0, 1e-16)).imag(), 0.0);
}

TEST(BraidFromTL, ZeroGeneratorGivesScalar) {
  const BraidData b = braid_from_tl(Matrix(4, 4), 2.0);
  EXPECT_LE(max_abs_diff(b.r_check, Matrix::identity(4) * b.q), 0.0);
  EXPECT_LE(b.hecke_residual, 1e-15);
}

TEST(BraidFromTL, FixtureU2) {
  const BraidData b = u2_braid();
  EXPECT_EQ(b.local_dim, 3u);
  EXPECT_LE(b.hecke_residual, 1e-10);
  EXPECT_LE(std::abs(b.q + 1.0 / b.q - std::sqrt(b.nu)), 1e-12);
}

TEST(BraidFromTL, RejectsNonTLInput) {
  Rng rng(52);
  EXPECT_THROW(braid_from_tl(rng.matrix(4, 4), 2.0), DomainError);
  EXPECT_THROW(braid_from_tl(Matrix(3, 3), 2.0), DimensionError);
}

TEST(CheckBraid, Examples) {
  EXPECT_EQ(check_braid(Matrix::identity(9), 3), 0.0);
  EXPECT_EQ(check_braid(flip(3), 3), 0.0);
  for (std::int64_t n : {2, 3}) {
    const BraidData b = fourier_braid(n);
    EXPECT_LE(check_braid(b.r_check, b.local_dim), 1e-9);
    EXPECT_NEAR(check_braid(b.r_check, b.local_dim), oracle_braid(b.r_check, b.local_dim), 1e-13);
  }
  EXPECT_THROW(check_braid(Matrix::identity(8), 3), DimensionError);
}

TEST(HeckeInverse, InverseIsShiftedGenerator) {
  std::vector<BraidData> all{fourier_braid(2), fourier_braid(3), fourier_braid(4), u2_braid()};
  const TLAnsatz u1 = fixture_u1_ansatz();
  all.push_back(braid_from_tl(build_local_generator(u1), u1.alpha()));
  for (const BraidData& b : all) {
    const Matrix id = Matrix::identity(b.r_check.rows());
    EXPECT_LE(b.hecke_residual, 1e-10);
    EXPECT_LE(max_abs_diff(inverse(b.r_check), b.r_check - id * omega_of(b.q)), 1e-10);
  }
}

TEST(Baxterize, Examples) {
  const BraidData b = u2_braid();
  const Baxterized one = baxterize(b, 1.0);
  EXPECT_LE(max_abs_diff(one.r, Matrix::identity(9) * omega_of(b.q)), 1e-14);
  EXPECT_LE(baxterize(b, 2.0).formula_gap, 1e-10);
  EXPECT_THROW(baxterize(b, 0.0), DomainError);

  const BraidData deg = fourier_braid(4);
  EXPECT_LE(std::abs(deg.q - 1.0), 1e-15);
  const Complex u{1.3, -0.4};
  EXPECT_LE(max_abs_diff(baxterize(deg, u).r, deg.r_check * (u - 1.0 / u)), 1e-14);
}

TEST(SpectralYBE, UnitParameters) {
  const BraidData b = u2_braid();
  const std::vector<SpectralSample> ones{{1.0, 1.0}};
  EXPECT_LE(check_spectral_ybe(b, ones), 1e-14);
  const Matrix lhs = kron(baxterize(b, 1.0).r, Matrix::identity(3));
  const Complex w3 = std::pow(omega_of(b.q), 3.0);
  EXPECT_LE(max_abs_diff(lhs * lhs * lhs, Matrix::identity(27) * w3), 1e-13);
}

TEST(SpectralYBE, SampledParameters) {
  const auto samples = default_spectral_samples();
  ASSERT_EQ(samples.size(), 20u);
  for (const auto& [u, w] : samples) {
    EXPECT_LE(std::abs(std::log(std::abs(u))), 1.0);
    EXPECT_LE(std::abs(std::log(std::abs(w))), 1.0);
  }
  EXPECT_LE(check_spectral_ybe(fourier_braid(2), samples), 1e-8);
  EXPECT_LE(check_spectral_ybe(fourier_braid(3), samples), 1e-8);
  EXPECT_LE(check_spectral_ybe(u2_braid(), samples), 1e-8);
  EXPECT_THROW(check_spectral_ybe(u2_braid(), {{0.0, 1.0}}), DomainError);
}

TEST(SpectralYBE, SamplesAreSeeded) {
  EXPECT_EQ(default_spectral_samples(42), default_spectral_samples(42));
  EXPECT_NE(default_spectral_samples(42), default_spectral_samples(43));
  EXPECT_EQ(default_spectral_samples(7, 5).size(), 5u);
}

TEST(SpectralYBE, ConstantBraidImpliesSpectral) {
  const double tol = 1e-9;
  for (const BraidData& b : {fourier_braid(2), fourier_braid(3), fourier_braid(4), u2_braid()}) {
    ASSERT_LE(check_braid(b.r_check, b.local_dim), tol);
    EXPECT_LE(check_spectral_ybe(b, default_spectral_samples()), 10.0 * tol);
  }
}

TEST(PlainR, Examples) {
  EXPECT_EQ(to_plain_r(flip(3), 3), Matrix::identity(9));
  EXPECT_EQ(check_ybe(Matrix::identity(9), 3), 0.0);
  const BraidData b = u2_braid();
  EXPECT_LE(check_ybe(to_plain_r(b), 3), 1e-9);
  EXPECT_THROW(check_ybe(Matrix::identity(8), 3), DimensionError);
}

TEST(PlainR, ThirteenEmbeddingMatchesIndexFormula) {
  // R13 acts on factors 1 and 3: R13[(i j k),(l m n)] = R[(i k),(l n)] δ_jm.
  Rng rng(53);
  const std::size_t n = 2;
  const Matrix r = rng.matrix(4, 4);
  const Matrix r12 = kron(r, Matrix::identity(n));
  const Matrix p23 = kron(Matrix::identity(n), flip(n));
  const Matrix r13 = p23 * r12 * p23;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t o = 0; o < n; ++o) {
              const Complex want = (j == m) ? r(i * n + k, l * n + o) : Complex{};
              EXPECT_EQ(r13((i * n + j) * n + k, (l * n + m) * n + o), want);
            }
}

TEST(PlainR, BraidAndYbeResidualsAgree) {
  Rng rng(54);
  for (int t = 0; t < 20; ++t) {
    // Random Hecke generators: gauge-conjugated fixtures and perturbed ones.
    const Matrix g = Matrix::identity(3) + rng.matrix(3, 3, 0.3);
    Matrix tl = gauge_transform(fixture_u2(), g);
    Matrix r = Matrix::identity(9) * q_from_nu(3.0) - tl * Complex(1.0 / std::sqrt(3.0));
    if (t % 2) r = r + rng.matrix(9, 9, 1e-3);
    EXPECT_NEAR(check_braid(r, 3), check_ybe(to_plain_r(r, 3), 3), 1e-12) << t;
  }
}

}  // namespace
}  // namespace tlhad
