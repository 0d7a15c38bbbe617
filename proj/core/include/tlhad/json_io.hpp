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

// JSON interchange. Complex numbers are [re, im] pairs; matrices are
//
//     {"rows": r, "cols": c, "entries": [[re, im], ...]}   (row-major)
//
// Doubles are written in shortest round-trip form, so write/read is
// bit-exact. Readers throw FormatError on anything malformed.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlhad/baxter.hpp"
#include "tlhad/linalg.hpp"
#include "tlhad/master.hpp"
#include "tlhad/tlrep.hpp"

namespace tlhad::io {

using Json = nlohmann::ordered_json;

/// Finite values as numbers, others as the strings "inf", "-inf", "nan".
Json real_to_json(double x);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json complexes_to_json(std::span<const Complex> zs);
std::vector<Complex> complexes_from_json(const Json& j);

std::vector<std::int64_t> integers_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json master_spec_to_json(const MasterSpec& spec);
MasterSpec master_spec_from_json(const Json& j);

Json nesting_spec_to_json(const NestingSpec& spec);
NestingSpec nesting_spec_from_json(const Json& j);

Json ansatz_to_json(const TLAnsatz& a);
TLAnsatz ansatz_from_json(const Json& j);

Json braid_to_json(const BraidData& b);
BraidData braid_from_json(const Json& j);

Json tl_report_to_json(const TLReport& r, double tol);

/// Parses text; FormatError on syntax errors.
Json parse(const std::string& text);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace tlhad::io
