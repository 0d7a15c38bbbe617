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
#include <limits>

#include "oracles.hpp"
#include "tlhad/hadamard.hpp"
#include "tlhad/linalg.hpp"

namespace tlhad {
namespace {

using testing::Rng;

TEST(Matrix, RejectsWrongLengthAndNonFinite) {
  EXPECT_THROW(Matrix(2, 2, std::vector<Complex>(3)), DimensionError);
  std::vector<Complex> bad(4);
  bad[2] = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  EXPECT_THROW(Matrix(2, 2, bad), DomainError);
  EXPECT_THROW((Matrix{{1.0, 2.0}, {3.0}}), DimensionError);
  EXPECT_THROW(checked_complex(std::numeric_limits<double>::infinity(), 0.0), DomainError);
}

TEST(Matrix, UnitAndDiagonal) {
  const Matrix e = Matrix::unit(3, 1, 2);
  EXPECT_EQ(e(1, 2), Complex(1.0));
  EXPECT_EQ(max_abs(e), 1.0);
  const std::vector<Complex> d{1.0, 2.0, Complex(0.0, 3.0)};
  const Matrix dm = Matrix::diagonal(d);
  EXPECT_EQ(dm(2, 2), Complex(0.0, 3.0));
  EXPECT_EQ(dm(0, 1), Complex{});
  EXPECT_THROW(Matrix::unit(2, 2, 0), DimensionError);
}

TEST(MatMul, IdentityAndUnits) {
  EXPECT_EQ(mat_mul(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(2));
  EXPECT_EQ(mat_mul(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)), Matrix::unit(2, 0, 0));
  const Matrix f = fourier(2);
  EXPECT_TRUE(approx_eq(mat_mul(f, f), Matrix{{2.0, 0.0}, {0.0, 2.0}}, 1e-15));
}

TEST(MatMul, DimensionMismatch) {
  EXPECT_THROW(mat_mul(Matrix(2, 3), Matrix(2, 3)), DimensionError);
  EXPECT_THROW(Matrix(2, 2) + Matrix(2, 3), DimensionError);
}

TEST(MatMul, MatchesInnerProductOracle) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto r = static_cast<std::size_t>(rng.integer(1, 7));
    const auto k = static_cast<std::size_t>(rng.integer(1, 7));
    const auto c = static_cast<std::size_t>(rng.integer(1, 7));
    const Matrix a = rng.matrix(r, k), b = rng.matrix(k, c);
    EXPECT_LE(max_abs_diff(mat_mul(a, b), testing::oracle_mul(a, b)), 1e-14);
  }
}

TEST(Kron, IdentityAndUnitPlacement) {
  EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
  const Matrix k = kron(Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1));
  Matrix expected(4, 4);
  expected(1, 1) = 1.0;
  EXPECT_EQ(k, expected);
}

TEST(Kron, UnitPlacementOffDiagonal) {
  // e_01 ⊗ e_10 puts its single 1 at (0*2+1, 1*2+0).
  const Matrix k = kron(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0));
  Matrix expected(4, 4);
  expected(1, 2) = 1.0;
  EXPECT_EQ(k, expected);
}

TEST(Kron, MatchesIndexFormulaAndIsAssociative) {
  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const Matrix a = rng.matrix(2, 2), b = rng.matrix(2, 2), c = rng.matrix(2, 2);
    EXPECT_LE(max_abs_diff(kron(a, b), testing::oracle_kron(a, b)), 0.0);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-15);
    EXPECT_LE(max_abs_diff(kron(kron(a, b), c), testing::oracle_kron(a, testing::oracle_kron(b, c))),
              1e-15);
  }
}

TEST(Kron, DimensionLaw) {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const auto ra = static_cast<std::size_t>(rng.integer(1, 4));
    const auto ca = static_cast<std::size_t>(rng.integer(1, 4));
    const auto rb = static_cast<std::size_t>(rng.integer(1, 4));
    const auto cb = static_cast<std::size_t>(rng.integer(1, 4));
    const Matrix k = kron(rng.matrix(ra, ca), rng.matrix(rb, cb));
    EXPECT_EQ(k.rows(), ra * rb);
    EXPECT_EQ(k.cols(), ca * cb);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_TRUE(approx_eq(inverse(fourier(2)), fourier(2) * Complex(0.5), 1e-15));
  EXPECT_THROW(inverse(Matrix(2, 2)), SingularMatrixError);
  EXPECT_THROW(inverse(Matrix(2, 3)), DimensionError);
}

TEST(Inverse, RelativeSingularityThreshold) {
  // Scale invariance: a tiny but well-conditioned matrix inverts fine.
  EXPECT_NO_THROW(inverse(Matrix::identity(3) * Complex(1e-20)));
  // Rank deficient up to round-off.
  EXPECT_THROW(inverse(Matrix{{1.0, 2.0}, {2.0, 4.0 + 1e-14}}), SingularMatrixError);
}

TEST(Inverse, RoundTripUpTo36) {
  Rng rng(13);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 21u, 36u}) {
    const Matrix a = rng.well_conditioned(n);
    const Matrix inv = inverse(a);
    EXPECT_LE(max_abs_diff(a * inv, Matrix::identity(n)), 1e-9) << "n=" << n;
    EXPECT_LE(max_abs_diff(inv, testing::oracle_inverse(a)), 1e-10) << "n=" << n;
  }
}

TEST(HadamardInverse, Examples) {
  const Matrix ones{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
  EXPECT_EQ(hadamard_inverse(ones), ones);
  // Entrywise reciprocal of the F4 family at a = 2 is the family at a = 1/2.
  EXPECT_TRUE(approx_eq(hadamard_inverse(f4_family(2.0)), f4_family(0.5), 1e-15));
}

TEST(HadamardInverse, ZeroEntryReportsPosition) {
  try {
    hadamard_inverse(Matrix{{1.0, 2.0}, {0.0, 3.0}});
    FAIL() << "expected ZeroEntryError";
  } catch (const ZeroEntryError& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 0u);
  }
}

TEST(HadamardInverse, Involution) {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    Matrix a(4, 4);
    for (auto& z : a.entries()) z = rng.nonzero();
    EXPECT_LE(max_abs_diff(hadamard_inverse(hadamard_inverse(a)), a), 1e-14);
  }
}

TEST(ApproxEq, Examples) {
  Rng rng(15);
  const Matrix a = rng.matrix(3, 3);
  EXPECT_TRUE(approx_eq(a, a, 0.0));
  Matrix b = Matrix::identity(2);
  b(0, 0) += 1e-6;
  const Comparison c = approx_eq(Matrix::identity(2), b, 1e-9);
  EXPECT_FALSE(c);
  EXPECT_NEAR(c.max_residual, 1e-6, 1e-15);
  EXPECT_TRUE(approx_eq(fourier(2) * fourier(2), Matrix::identity(2) * Complex(2.0), 1e-12));
  EXPECT_THROW(approx_eq(Matrix(2, 2), Matrix(2, 3), 1.0), DimensionError);
}

TEST(UnitRoot, Examples) {
  EXPECT_EQ(unit_root(0, 7), Complex(1.0));
  EXPECT_EQ(unit_root(1, 2), Complex(-1.0));
  EXPECT_EQ(unit_root(1, 4), Complex(0.0, 1.0));
  EXPECT_EQ(unit_root(-1, 4), Complex(0.0, -1.0));
  const Complex w = unit_root(1, 3);
  EXPECT_LE(std::abs(w * w + w + 1.0), 1e-15);
  EXPECT_THROW(unit_root(1, 0), DomainError);
}

TEST(UnitRoot, MagnitudeAndOrder) {
  for (std::int64_t m = 1; m <= 24; ++m) {
    for (std::int64_t k = -m; k <= 2 * m; ++k) {
      const Complex z = unit_root(k, m);
      EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
      EXPECT_LE(std::abs(ipow(z, m) - 1.0), 1e-13);
      EXPECT_LE(std::abs(z - testing::oracle_root(static_cast<double>(k), static_cast<double>(m))),
                1e-14);
    }
  }
}

TEST(Power, NegativeUsesInverse) {
  Rng rng(16);
  const Matrix a = rng.well_conditioned(4);
  EXPECT_EQ(power(a, 0), Matrix::identity(4));
  EXPECT_LE(max_abs_diff(power(a, 3), testing::oracle_power(a, 3)), 1e-11);
  EXPECT_LE(max_abs_diff(power(a, -2), testing::oracle_power(a, -2)), 1e-12);
  EXPECT_LE(max_abs_diff(power(a, 5) * power(a, -5), Matrix::identity(4)), 1e-10);
}

TEST(Ipow, MatchesStdPow) {
  const Complex z{0.6, -0.7};
  for (int k = -6; k <= 6; ++k) {
    EXPECT_LE(std::abs(ipow(z, k) - std::pow(z, static_cast<double>(k))), 1e-13) << k;
  }
}

TEST(Flip, SwapsTensorFactors) {
  Rng rng(17);
  const Matrix x = rng.matrix(3, 1), y = rng.matrix(3, 1);
  EXPECT_LE(max_abs_diff(flip(3) * kron(x, y), kron(y, x)), 0.0);
  EXPECT_EQ(flip(3) * flip(3), Matrix::identity(9));
}

TEST(NumericalRank, Basics) {
  EXPECT_EQ(numerical_rank(Matrix::identity(4)), 4u);
  EXPECT_EQ(numerical_rank(Matrix(3, 3)), 0u);
  Rng rng(18);
  const Matrix x = rng.matrix(5, 2), y = rng.matrix(2, 5);
  EXPECT_EQ(numerical_rank(x * y), 2u);
}

TEST(AdjointTranspose, Basics) {
  const Matrix a{{1.0, Complex(0.0, 2.0)}, {3.0, 4.0}};
  EXPECT_EQ(transpose(a)(0, 1), Complex(3.0));
  EXPECT_EQ(adjoint(a)(1, 0), Complex(0.0, -2.0));
}

}  // namespace
}  // namespace tlhad
