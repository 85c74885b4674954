// tools/framemult_cli.cpp

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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 when the command ran (the verdict lives inside the report),
// 2 for usage and input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framemult/framemult.h"

namespace {

constexpr int kExitRan = 0;
constexpr int kExitInputError = 2;

struct CommonOptions {
  double tol_rel = 0.0;
  double cond_max = 0.0;
  bool pretty = false;
};

struct InputError {
  std::string message;
};

void AddCommon(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("--tol-rel", opts.tol_rel, "relative tolerance (default 1e-9)");
  cmd->add_option("--cond-max", opts.cond_max, "condition-number cap for invertibility (default 1e12)");
  cmd->add_flag("--pretty", opts.pretty, "human-readable rendering instead of JSON");
}

fm_tolerance Tolerance(const CommonOptions &opts) {
  fm_tolerance tol = fm_default_tolerance();
  if (opts.tol_rel != 0.0) tol.rel_eps = opts.tol_rel;
  if (opts.cond_max != 0.0) tol.cond_max = opts.cond_max;
  return tol;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Takes ownership of a library-allocated string.
std::string Take(char *s) {
  std::string out(s);
  fm_string_free(s);
  return out;
}

void CheckStatus(fm_status status) {
  if (status != FM_OK)
    throw InputError{std::string(fm_status_string(status)) + ": " + fm_last_error_message()};
}

void Emit(const std::string &report_json, bool pretty) {
  if (pretty) {
    char *text = nullptr;
    CheckStatus(fm_report_render_pretty(report_json.c_str(), &text));
    std::cout << Take(text);
  } else {
    std::cout << nlohmann::ordered_json::parse(report_json).dump(2) << "\n";
  }
}

int RunFrameInfo(const std::string &path, const std::optional<std::string> &out_path,
                 const CommonOptions &opts) {
  const std::string text = ReadFile(path);
  const fm_tolerance tol = Tolerance(opts);
  char *report = nullptr;
  CheckStatus(fm_report_frame_info(text.c_str(), &tol, &report));
  const std::string report_json = Take(report);

  if (out_path) {
    fm_frame *frame = nullptr;
    fm_frame *dual = nullptr;
    CheckStatus(fm_frame_from_json(text.c_str(), &frame));
    const fm_status st = fm_frame_canonical_dual(frame, &tol, &dual);
    fm_frame_destroy(frame);
    if (st == FM_OK) {
      char *dual_json = nullptr;
      const fm_status to_json = fm_frame_to_json(dual, &dual_json);
      fm_frame_destroy(dual);
      CheckStatus(to_json);
      std::ofstream out(*out_path, std::ios::binary);
      if (!out) throw InputError{"cannot write '" + *out_path + "'"};
      out << nlohmann::ordered_json::parse(Take(dual_json)).dump(2) << "\n";
    } else if (st != FM_ERR_NOT_A_FRAME) {
      CheckStatus(st);
    }
    // Not a frame: the report already says so and there is no dual to write.
  }
  Emit(report_json, opts.pretty);
  return kExitRan;
}

struct MultiplierArgs {
  std::string symbol, phi, psi;
  bool invert = false;
  bool induced_duals = false;
  bool verify_all = false;
  bool expect_invertible = false;
  std::optional<std::uint64_t> seed;
};

int RunMultiplier(const MultiplierArgs &a, const CommonOptions &opts) {
  const std::string m = ReadFile(a.symbol);
  const std::string phi = ReadFile(a.phi);
  const std::string psi = ReadFile(a.psi);
  const fm_tolerance tol = Tolerance(opts);
  const std::uint64_t seed = a.seed.value_or(0);
  char *report = nullptr;
  CheckStatus(fm_report_multiplier(m.c_str(), phi.c_str(), psi.c_str(), a.invert, a.induced_duals,
                                   a.verify_all, a.expect_invertible, a.seed ? &seed : nullptr,
                                   &tol, &report));
  Emit(Take(report), opts.pretty);
  return kExitRan;
}

std::string ExampleReport(const std::string &name, const fm_tolerance &tol) {
  char *report = nullptr;
  CheckStatus(fm_report_example(name.c_str(), &tol, &report));
  return Take(report);
}

int RunExamples(const std::string &name, bool all, const CommonOptions &opts) {
  const fm_tolerance tol = Tolerance(opts);
  if (!all) {
    if (name.empty()) throw InputError{"examples run: give an example name or --all"};
    Emit(ExampleReport(name, tol), opts.pretty);
    return kExitRan;
  }
  // --all: one report per example; the combined verdict is the worst of them.
  nlohmann::ordered_json runs = nlohmann::ordered_json::object();
  std::string verdict = "pass";
  std::string pretty;
  for (std::size_t i = 0; i < fm_example_count(); ++i) {
    const std::string ex = fm_example_name(i);
    const std::string text = ExampleReport(ex, tol);
    auto report = nlohmann::ordered_json::parse(text);
    const std::string v = report.at("verdict");
    if (v == "fail") verdict = "fail";
    else if (v == "flagged" && verdict == "pass") verdict = "flagged";
    if (opts.pretty) {
      char *rendered = nullptr;
      CheckStatus(fm_report_render_pretty(text.c_str(), &rendered));
      pretty += "== " + ex + "\n" + Take(rendered);
    }
    runs[ex] = std::move(report);
  }
  if (opts.pretty) {
    std::cout << pretty << "overall: " << verdict << "\n";
  } else {
    nlohmann::ordered_json out{{"command", "examples"}, {"runs", runs}, {"verdict", verdict}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitRan;
}

int ShowExample(const std::string &name) {
  char *text = nullptr;
  CheckStatus(fm_example_show(name.c_str(), &text));
  std::cout << Take(text) << "\n";
  return kExitRan;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"framemult: frame multipliers, induced dual frames and identity checks"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto *frame_info = app.add_subcommand("frame-info", "frame bounds, Riesz test and canonical dual");
  std::string frame_path;
  std::optional<std::string> out_path;
  frame_info->add_option("path", frame_path, "frame JSON file")->required();
  frame_info->add_option("--out", out_path, "write the canonical dual to this path");
  AddCommon(frame_info, opts);

  auto *multiplier = app.add_subcommand("multiplier", "build M_{m,Phi,Psi} and verify identities");
  MultiplierArgs margs;
  multiplier->add_option("--symbol", margs.symbol, "symbol JSON file")->required();
  multiplier->add_option("--phi", margs.phi, "Phi frame JSON file")->required();
  multiplier->add_option("--psi", margs.psi, "Psi frame JSON file")->required();
  multiplier->add_flag("--invert", margs.invert, "compute the inverse");
  multiplier->add_flag("--induced-duals", margs.induced_duals, "compute Phi-dagger and Psi-dagger");
  multiplier->add_flag("--verify-all", margs.verify_all, "run the full verification bundle (needs --seed)");
  multiplier->add_flag("--expect-invertible", margs.expect_invertible,
                       "fail the verdict when M is not invertible");
  multiplier->add_option("--seed", margs.seed, "seed for dual sampling");
  AddCommon(multiplier, opts);

  auto *examples = app.add_subcommand("examples", "worked example registry");
  examples->require_subcommand(1);
  auto *run = examples->add_subcommand("run", "run an example's expectation list");
  std::string example_name;
  bool all = false;
  run->add_option("name", example_name, "example name");
  run->add_flag("--all", all, "run every registered example");
  AddCommon(run, opts);
  auto *show = examples->add_subcommand("show", "print an example's system definition");
  std::string show_name;
  show->add_option("name", show_name, "example name")->required();
  auto *list = examples->add_subcommand("list", "list registered example names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*frame_info) return RunFrameInfo(frame_path, out_path, opts);
    if (*multiplier) return RunMultiplier(margs, opts);
    if (*run) return RunExamples(example_name, all, opts);
    if (*show) return ShowExample(show_name);
    if (*list) {
      for (std::size_t i = 0; i < fm_example_count(); ++i) std::cout << fm_example_name(i) << "\n";
      return kExitRan;
    }
  } catch (const InputError &e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
