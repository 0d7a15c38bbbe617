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
#include <cstring>
#include <limits>

#include "oracles.hpp"
#include "tlhad/json_io.hpp"

namespace tlhad {
namespace {

using io::Json;
using testing::Rng;

bool bit_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::memcmp(a.entries().data(), b.entries().data(), a.size() * sizeof(Complex)) == 0;
}

TEST(JsonMatrix, Layout) {
  const Json j = io::matrix_to_json(Matrix{{1.0, Complex(0.0, -2.5)}});
  EXPECT_EQ(j["rows"], 1);
  EXPECT_EQ(j["cols"], 2);
  ASSERT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][1][1].get<double>(), -2.5);
}

TEST(JsonMatrix, BitExactRoundTrip) {
  const Complex z = std::polar(1.0, testing::kPi / 7.0);
  const Matrix m{{z, -z}, {std::conj(z), 1.0 / 3.0}};
  const Matrix back = io::matrix_from_json(io::parse(io::dump(io::matrix_to_json(m))));
  EXPECT_TRUE(bit_equal(m, back));

  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    Matrix r = rng.matrix(3, 4, 1e3);
    r(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -std::numeric_limits<double>::max());
    EXPECT_TRUE(bit_equal(r, io::matrix_from_json(io::parse(io::dump(io::matrix_to_json(r))))));
  }
}

TEST(JsonMatrix, RejectsMalformed) {
  EXPECT_THROW(io::matrix_from_json(io::parse(R"({"rows":2,"cols":2,"entries":[[1,0],[1,0],[1,0]]})")),
               FormatError);
  EXPECT_THROW(io::matrix_from_json(io::parse(R"({"rows":1,"cols":1})")), FormatError);
  EXPECT_THROW(io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"entries":[[1,0,0]]})")), FormatError);
  EXPECT_THROW(io::matrix_from_json(io::parse(R"({"rows":-1,"cols":1,"entries":[]})")), FormatError);
  EXPECT_THROW(io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"entries":[["a",0]]})")), FormatError);
  EXPECT_THROW(io::matrix_from_json(io::parse("[1, 2]")), FormatError);
  EXPECT_THROW(io::parse("{\"rows\": "), FormatError);
}

TEST(JsonMatrix, AcceptsRealShorthandEntries) {
  const Matrix m = io::matrix_from_json(io::parse(R"({"rows":1,"cols":2,"entries":[2,[0,1]]})"));
  EXPECT_EQ(m(0, 0), Complex(2.0));
  EXPECT_EQ(m(0, 1), Complex(0.0, 1.0));
}

TEST(JsonReal, NonFiniteAsStrings) {
  EXPECT_EQ(io::real_to_json(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::real_to_json(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(io::real_to_json(std::nan("")), "nan");
  EXPECT_EQ(io::real_to_json(0.25), 0.25);
}

TEST(JsonMasterSpec, RoundTripAndValidation) {
  const MasterSpec s = fourier_master(5, 2);
  const MasterSpec back = io::master_spec_from_json(io::parse(io::dump(io::master_spec_to_json(s))));
  ASSERT_EQ(back.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(back.lambdas()[i], s.lambdas()[i]);
    EXPECT_EQ(back.exponents()[i], s.exponents()[i]);
  }
  EXPECT_THROW(io::master_spec_from_json(io::parse(R"({"lambdas":[[1,0],[1,0]],"exponents":[0,1]})")),
               FormatError);
  EXPECT_THROW(io::master_spec_from_json(io::parse(R"({"lambdas":[[1,0]],"exponents":[0.5]})")),
               FormatError);
}

TEST(JsonNesting, RoundTrip) {
  NestingSpec n;
  n.stages.push_back({2, 2, {0, 1}, {1, 0}});
  n.stages.push_back({3, 1, {0, 0, 2}, {1, 1, 0}});
  const NestingSpec back = io::nesting_spec_from_json(io::parse(io::dump(io::nesting_spec_to_json(n))));
  ASSERT_EQ(back.stages.size(), 2u);
  EXPECT_EQ(back.stages[1].g, n.stages[1].g);
  EXPECT_EQ(back.stages[0].k, 2);
  EXPECT_THROW(io::nesting_spec_from_json(io::parse(R"({"stages":[{"p":2,"k":1,"g":[0],"f":[0,0]}]})")),
               FormatError);
}

TEST(JsonAnsatz, RoundTripWithDefaults) {
  const TLAnsatz u1 = fixture_u1_ansatz(4);
  const TLAnsatz back = io::ansatz_from_json(io::parse(io::dump(io::ansatz_to_json(u1))));
  EXPECT_TRUE(bit_equal(back.m(), u1.m()));
  EXPECT_EQ(back.sites(), 4u);
  EXPECT_EQ(back.v()[0], u1.v()[0]);
  EXPECT_EQ(back.w()[0], u1.w()[0]);

  const TLAnsatz plain = io::ansatz_from_json(
      io::parse(R"({"m":{"rows":2,"cols":2,"entries":[[1,0],[0,0],[0,0],[-1,0]]},"exponents":[0,1]})"));
  EXPECT_EQ(plain.sites(), 3u);
  EXPECT_EQ(plain.alpha(), Complex(2.0));
  EXPECT_THROW(io::ansatz_from_json(io::parse(
                   R"({"m":{"rows":2,"cols":2,"entries":[[0,0],[0,0],[0,0],[0,0]]},"exponents":[0,1]})")),
               FormatError);
}

TEST(JsonBraid, RoundTrip) {
  const TLAnsatz a = fixture_u2_ansatz();
  const BraidData b = braid_from_tl(build_local_generator(a), a.alpha());
  const BraidData back = io::braid_from_json(io::parse(io::dump(io::braid_to_json(b))));
  EXPECT_EQ(back.q, b.q);
  EXPECT_EQ(back.nu, b.nu);
  EXPECT_TRUE(bit_equal(back.r_check, b.r_check));
  EXPECT_EQ(back.local_dim, 3u);
  EXPECT_EQ(back.hecke_residual, b.hecke_residual);
  EXPECT_THROW(io::braid_from_json(io::parse(
                   R"({"q":[1,0],"nu":[4,0],"r_check":{"rows":2,"cols":2,"entries":[1,0,0,1]}})")),
               FormatError);
}

TEST(JsonReport, Fields) {
  const TLReport r = verify_tl(fixture_u2_ansatz(4));
  const Json j = io::tl_report_to_json(r, 1e-9);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["tol"].get<double>(), 1e-9);
  EXPECT_TRUE(j["commute_residual"].is_number());
  const Json j2 = io::tl_report_to_json(verify_tl(fixture_u2_ansatz(2)), 1e-9);
  EXPECT_TRUE(j2["braid_residual"].is_null());
}

}  // namespace
}  // namespace tlhad
