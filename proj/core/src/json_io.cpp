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

#include "tlhad/json_io.hpp"

#include <cmath>
#include <limits>

namespace tlhad::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

double number(const Json& j) {
  if (!j.is_number()) throw FormatError("expected a number, got " + j.dump());
  return j.get<double>();
}

std::int64_t integer(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::isfinite(x) && std::trunc(x) == x && std::abs(x) < 9.0e15) {
      return static_cast<std::int64_t>(x);
    }
  }
  throw FormatError("expected an integer, got " + j.dump());
}

std::size_t count(const Json& j) {
  const std::int64_t k = integer(j);
  if (k < 0) throw FormatError("expected a nonnegative integer, got " + j.dump());
  return static_cast<std::size_t>(k);
}

}  // namespace

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  double re = 0.0, im = 0.0;
  if (j.is_number()) {
    re = number(j);
  } else if (j.is_array() && j.size() == 2) {
    re = number(j[0]);
    im = number(j[1]);
  } else {
    throw FormatError("expected a complex number [re, im], got " + j.dump());
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw FormatError("non-finite complex number");
  return {re, im};
}

Json complexes_to_json(std::span<const Complex> zs) {
  Json out = Json::array();
  for (const Complex& z : zs) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complexes_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of complex numbers");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(complex_from_json(e));
  return out;
}

std::vector<std::int64_t> integers_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of integers");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(integer(e));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = complexes_to_json(m.entries());
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = count(field(j, "rows"));
  const std::size_t cols = count(field(j, "cols"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw FormatError("'entries' must be an array");
  if (entries.size() != rows * cols) {
    throw FormatError("'entries' has length " + std::to_string(entries.size()) + ", expected " +
                      std::to_string(rows * cols));
  }
  return Matrix(rows, cols, complexes_from_json(entries));
}

Json master_spec_to_json(const MasterSpec& spec) {
  Json out = Json::object();
  out["lambdas"] = complexes_to_json(spec.lambdas());
  out["exponents"] = Json(std::vector<std::int64_t>(spec.exponents().begin(), spec.exponents().end()));
  return out;
}

MasterSpec master_spec_from_json(const Json& j) {
  try {
    return MasterSpec(complexes_from_json(field(j, "lambdas")),
                      integers_from_json(field(j, "exponents")));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid master spec: ") + e.what());
  }
}

Json nesting_spec_to_json(const NestingSpec& spec) {
  Json stages = Json::array();
  for (const NestingStage& s : spec.stages) {
    Json stage = Json::object();
    stage["p"] = s.p;
    stage["k"] = s.k;
    stage["g"] = s.g;
    stage["f"] = s.f;
    stages.push_back(std::move(stage));
  }
  Json out = Json::object();
  out["stages"] = std::move(stages);
  return out;
}

NestingSpec nesting_spec_from_json(const Json& j) {
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) throw FormatError("'stages' must be an array");
  NestingSpec spec;
  for (const Json& s : stages) {
    NestingStage stage;
    stage.p = integer(field(s, "p"));
    stage.k = integer(field(s, "k"));
    stage.g = integers_from_json(field(s, "g"));
    stage.f = integers_from_json(field(s, "f"));
    spec.stages.push_back(std::move(stage));
  }
  try {
    validate(spec);
  } catch (const Error& e) {
    throw FormatError(std::string("invalid nesting spec: ") + e.what());
  }
  return spec;
}

Json ansatz_to_json(const TLAnsatz& a) {
  Json out = Json::object();
  out["m"] = matrix_to_json(a.m());
  out["exponents"] = Json(std::vector<std::int64_t>(a.exponents().begin(), a.exponents().end()));
  out["v"] = complexes_to_json(a.v());
  out["w"] = complexes_to_json(a.w());
  out["sites"] = a.sites();
  return out;
}

TLAnsatz ansatz_from_json(const Json& j) {
  Matrix m = matrix_from_json(field(j, "m"));
  auto exponents = integers_from_json(field(j, "exponents"));
  std::vector<Complex> v, w;
  if (j.contains("v")) v = complexes_from_json(j["v"]);
  if (j.contains("w")) w = complexes_from_json(j["w"]);
  const std::size_t sites = j.contains("sites") ? count(j["sites"]) : 3;
  try {
    return TLAnsatz(std::move(m), std::move(exponents), std::move(v), std::move(w), sites);
  } catch (const Error& e) {
    throw FormatError(std::string("invalid ansatz: ") + e.what());
  }
}

Json braid_to_json(const BraidData& b) {
  Json out = Json::object();
  out["q"] = complex_to_json(b.q);
  out["nu"] = complex_to_json(b.nu);
  out["r_check"] = matrix_to_json(b.r_check);
  return out;
}

BraidData braid_from_json(const Json& j) {
  BraidData b;
  b.q = complex_from_json(field(j, "q"));
  b.nu = complex_from_json(field(j, "nu"));
  b.r_check = matrix_from_json(field(j, "r_check"));
  if (b.q == Complex{}) throw FormatError("braid data: q must be nonzero");
  const auto n = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(b.r_check.rows()))));
  if (!b.r_check.is_square() || n * n != b.r_check.rows() || n == 0) {
    throw FormatError("braid data: r_check must be n^2 x n^2");
  }
  b.local_dim = n;
  b.hecke_residual = hecke_residual(b.r_check, b.q);
  return b;
}

Json tl_report_to_json(const TLReport& r, double tol) {
  Json out = Json::object();
  out["nu"] = complex_to_json(r.nu);
  out["loop_residual"] = real_to_json(r.loop_residual);
  out["braid_residual"] = r.braid_residual ? real_to_json(*r.braid_residual) : Json(nullptr);
  out["commute_residual"] = r.commute_residual ? real_to_json(*r.commute_residual) : Json(nullptr);
  out["max_residual"] = real_to_json(r.worst());
  out["tol"] = tol;
  out["passed"] = r.passed(tol);
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tlhad::io
