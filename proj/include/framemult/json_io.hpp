// include/framemult/json_io.hpp

// Copyright 2026  The framemult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "framemult/blockseq.hpp"

namespace framemult {
namespace json_io {

using Json = nlohmann::ordered_json;
using ExampleSystem = std::variant<BlockSystem, InterleavedSystem>;

// All parse failures, including schema violations, raise kParse.
Json Parse(const std::string &text);

Json ComplexToJson(Complex z);
Complex ComplexFromJson(const Json &j);

Json VectorToJson(const ComplexVector &v);
ComplexVector VectorFromJson(const Json &j);

Json MatrixToJson(const ComplexMatrix &a);  // row-major list of rows

/// {"dim": d, "vectors": [[[re, im], ...], ...]}
Json FrameToJson(const FiniteFrame &frame);
FiniteFrame FrameFromJson(const Json &j);

/// {"values": [[re, im], ...]}
Json SymbolToJson(const Symbol &m);
Symbol SymbolFromJson(const Json &j);

/// {"kind": "constant-template" | "harmonic-weight" | "geometric-interleave", ...}
/// Custom generators cannot be serialized (kInvalidArgument).
Json SystemToJson(const ExampleSystem &sys);
ExampleSystem SystemFromJson(const Json &j);

}  // namespace json_io
}  // namespace framemult
