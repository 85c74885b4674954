// include/framemult/report.hpp

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

#include <cstdint>
#include <optional>
#include <string>

#include "framemult/json_io.hpp"

namespace framemult {
namespace report {

using json_io::Json;

/// Report layout:
///
///   {"command": ..., "inputs": {"sha256": {...}, "params": {...}},
///    "findings": {"checks": {name: {"pass": bool, ["residual", "tolerance"]...}},
///                 "values": {...},
///                 "discrepancies": {name: {"claimed", "computed", "note"}}},
///    "tolerances": {"rel_eps", "cond_max"},
///    "verdict": "pass" | "fail" | "flagged"}
///
/// verdict is "fail" iff some check failed, "flagged" iff all checks passed
/// but a documented discrepancy was recorded, "pass" otherwise.
class Builder {
 public:
  Builder(std::string command, const ToleranceConfig &tol);

  void Input(const std::string &name, const std::string &bytes);
  void Param(const std::string &name, Json value);

  /// Asserted boolean.
  bool Check(const std::string &name, bool pass);
  /// Asserted residual <= tolerance.
  bool CheckResidual(const std::string &name, double residual, double tolerance);
  /// Asserted equality between an observed and expected boolean.
  bool CheckExpect(const std::string &name, bool actual, bool expected);

  void Value(const std::string &name, Json value);
  void Discrepancy(const std::string &name, Json claimed, Json computed, const std::string &note);

  bool failed() const { return failed_; }
  Json Finish() const;

 private:
  Json report_;
  bool failed_ = false;
  bool flagged_ = false;
};

struct MultiplierFlags {
  bool invert = false;
  bool induced_duals = false;
  bool verify_all = false;
  bool expect_invertible = false;
};

/// frame-info: dimensions, frame bounds, Riesz flag, canonical dual.
/// NotAFrame is reported in the findings. The canonical dual is written to
/// *canonical_dual when requested and available.
Json FrameInfo(const std::string &frame_text, const ToleranceConfig &tol,
               std::optional<Json> *canonical_dual = nullptr);

/// multiplier: build M_{m,Phi,Psi} and run the requested checks. verify_all
/// samples duals and therefore requires a seed (kInvalidArgument otherwise).
/// Input or shape errors propagate as exceptions.
Json MultiplierRun(const std::string &symbol_text, const std::string &phi_text,
                   const std::string &psi_text, const MultiplierFlags &flags,
                   const ToleranceConfig &tol, std::optional<std::uint64_t> seed);

/// examples run <name>: the annotated expectation list of a registry entry.
Json ExampleRun(const std::string &name, const ToleranceConfig &tol);

/// Human-readable rendering of any report.
std::string RenderPretty(const Json &report);

}  // namespace report
}  // namespace framemult
