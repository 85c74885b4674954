// src/capi.cpp

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

#include "framemult/framemult.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "framemult/error.hpp"
#include "framemult/report.hpp"

struct fm_frame {
  framemult::FiniteFrame frame;
};

struct fm_symbol {
  framemult::Symbol symbol;
};

struct fm_multiplier {
  framemult::Multiplier mult;
};

namespace {

using framemult::ComplexMatrix;
using framemult::ComplexVector;
using framemult::Error;
using framemult::ErrorCode;

thread_local std::string g_last_error;

fm_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return FM_ERR_PARSE;
    case ErrorCode::kDimensionMismatch: return FM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kNotHermitian: return FM_ERR_NOT_HERMITIAN;
    case ErrorCode::kNotAFrame: return FM_ERR_NOT_A_FRAME;
    case ErrorCode::kNotInvertible: return FM_ERR_NOT_INVERTIBLE;
    case ErrorCode::kZeroSymbolEntry: return FM_ERR_ZERO_SYMBOL_ENTRY;
    case ErrorCode::kNotADual: return FM_ERR_NOT_A_DUAL;
    case ErrorCode::kIdentityDoesNotHold: return FM_ERR_IDENTITY_DOES_NOT_HOLD;
    case ErrorCode::kImplicationViolated: return FM_ERR_IMPLICATION_VIOLATED;
    case ErrorCode::kPreconditionFailed: return FM_ERR_PRECONDITION_FAILED;
    case ErrorCode::kUnknownExample: return FM_ERR_UNKNOWN_EXAMPLE;
    case ErrorCode::kMetadataMissing: return FM_ERR_METADATA_MISSING;
    case ErrorCode::kMetadataInconsistent: return FM_ERR_METADATA_INCONSISTENT;
    case ErrorCode::kRatioNotCertified: return FM_ERR_RATIO_NOT_CERTIFIED;
    case ErrorCode::kInvalidArgument: return FM_ERR_INVALID_ARGUMENT;
  }
  return FM_ERR_INTERNAL;
}

fm_status Fail(fm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body and converts any escaping exception into a status code.
template <typename F>
fm_status Guard(F &&body) {
  try {
    body();
    return FM_OK;
  } catch (const Error &e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(FM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(FM_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(FM_ERR_INTERNAL, "unknown exception");
  }
}

void Require(bool ok, const char *what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

framemult::ToleranceConfig Tol(const fm_tolerance *tol) {
  framemult::ToleranceConfig cfg;
  if (tol) {
    cfg.rel_eps = tol->rel_eps;
    cfg.cond_max = tol->cond_max;
  }
  cfg.Validate();
  return cfg;
}

ComplexMatrix ReadMatrix(const double *data, long rows, long cols) {
  ComplexMatrix a(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) {
      const double *z = data + 2 * (j * rows + i);
      a(i, j) = framemult::Complex(z[0], z[1]);
    }
  return a;
}

void WriteMatrix(const ComplexMatrix &a, double *out) {
  for (long j = 0; j < a.cols(); ++j)
    for (long i = 0; i < a.rows(); ++i) {
      double *z = out + 2 * (j * a.rows() + i);
      z[0] = a(i, j).real();
      z[1] = a(i, j).imag();
    }
}

char *CopyString(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const std::vector<std::string> &ExampleNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &e : framemult::blockseq::ExampleRegistry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

}  // namespace

extern "C" {

fm_tolerance fm_default_tolerance(void) {
  framemult::ToleranceConfig cfg;
  return fm_tolerance{cfg.rel_eps, cfg.cond_max};
}

const char *fm_status_string(fm_status status) {
  switch (status) {
    case FM_OK: return "ok";
    case FM_ERR_INTERNAL: return "internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(ErrorCode::kInvalidArgument); ++c)
    if (ToStatus(static_cast<ErrorCode>(c)) == status)
      return framemult::ErrorCodeName(static_cast<ErrorCode>(c));
  return "unknown";
}

const char *fm_last_error_message(void) { return g_last_error.c_str(); }

void fm_string_free(char *s) { delete[] s; }

fm_status fm_frame_create(size_t dim, size_t count, const double *synthesis, fm_frame **out) {
  return Guard([&] {
    Require(out && synthesis && dim > 0 && count > 0, "fm_frame_create: bad arguments");
    *out = new fm_frame{framemult::FiniteFrame(
        ReadMatrix(synthesis, static_cast<long>(dim), static_cast<long>(count)))};
  });
}

fm_status fm_frame_from_json(const char *json, fm_frame **out) {
  return Guard([&] {
    Require(out && json, "fm_frame_from_json: null argument");
    *out = new fm_frame{framemult::json_io::FrameFromJson(framemult::json_io::Parse(json))};
  });
}

fm_status fm_frame_to_json(const fm_frame *frame, char **out) {
  return Guard([&] {
    Require(out && frame, "fm_frame_to_json: null argument");
    *out = CopyString(framemult::json_io::FrameToJson(frame->frame).dump());
  });
}

void fm_frame_destroy(fm_frame *frame) { delete frame; }

size_t fm_frame_dim(const fm_frame *frame) {
  return frame ? static_cast<size_t>(frame->frame.dim()) : 0;
}

size_t fm_frame_count(const fm_frame *frame) {
  return frame ? static_cast<size_t>(frame->frame.count()) : 0;
}

fm_status fm_frame_synthesis(const fm_frame *frame, double *out) {
  return Guard([&] {
    Require(out && frame, "fm_frame_synthesis: null argument");
    WriteMatrix(frame->frame.synthesis(), out);
  });
}

fm_status fm_frame_bounds(const fm_frame *frame, const fm_tolerance *tol, double *lower,
                          double *upper) {
  return Guard([&] {
    Require(frame && lower && upper, "fm_frame_bounds: null argument");
    framemult::FrameBounds b = framemult::frames::Bounds(frame->frame, Tol(tol));
    *lower = b.lower;
    *upper = b.upper;
  });
}

fm_status fm_frame_canonical_dual(const fm_frame *frame, const fm_tolerance *tol, fm_frame **out) {
  return Guard([&] {
    Require(frame && out, "fm_frame_canonical_dual: null argument");
    *out = new fm_frame{framemult::frames::CanonicalDual(frame->frame, Tol(tol))};
  });
}

fm_status fm_frame_is_dual(const fm_frame *candidate, const fm_frame *frame,
                           const fm_tolerance *tol, int *out) {
  return Guard([&] {
    Require(candidate && frame && out, "fm_frame_is_dual: null argument");
    *out = framemult::frames::IsDual(candidate->frame, frame->frame, Tol(tol)) ? 1 : 0;
  });
}

fm_status fm_symbol_create(size_t count, const double *values, fm_symbol **out) {
  return Guard([&] {
    Require(out && values && count > 0, "fm_symbol_create: bad arguments");
    ComplexVector v = ReadMatrix(values, static_cast<long>(count), 1).col(0);
    *out = new fm_symbol{framemult::Symbol(std::move(v))};
  });
}

fm_status fm_symbol_from_json(const char *json, fm_symbol **out) {
  return Guard([&] {
    Require(out && json, "fm_symbol_from_json: null argument");
    *out = new fm_symbol{framemult::json_io::SymbolFromJson(framemult::json_io::Parse(json))};
  });
}

void fm_symbol_destroy(fm_symbol *symbol) { delete symbol; }

size_t fm_symbol_count(const fm_symbol *symbol) {
  return symbol ? static_cast<size_t>(symbol->symbol.size()) : 0;
}

fm_status fm_multiplier_create(const fm_symbol *m, const fm_frame *phi, const fm_frame *psi,
                               const fm_tolerance *tol, fm_multiplier **out) {
  return Guard([&] {
    Require(m && phi && psi && out, "fm_multiplier_create: null argument");
    *out = new fm_multiplier{
        framemult::Multiplier::Build(m->symbol, phi->frame, psi->frame, Tol(tol))};
  });
}

void fm_multiplier_destroy(fm_multiplier *mult) { delete mult; }

size_t fm_multiplier_dim(const fm_multiplier *mult) {
  return mult ? static_cast<size_t>(mult->mult.dim()) : 0;
}

fm_status fm_multiplier_matrix(const fm_multiplier *mult, double *out) {
  return Guard([&] {
    Require(mult && out, "fm_multiplier_matrix: null argument");
    WriteMatrix(mult->mult.matrix(), out);
  });
}

fm_status fm_multiplier_is_invertible(const fm_multiplier *mult, int *out) {
  return Guard([&] {
    Require(mult && out, "fm_multiplier_is_invertible: null argument");
    *out = mult->mult.invertible() ? 1 : 0;
  });
}

fm_status fm_multiplier_invert(const fm_multiplier *mult, double *out) {
  return Guard([&] {
    Require(mult && out, "fm_multiplier_invert: null argument");
    WriteMatrix(mult->mult.inverse(), out);
  });
}

fm_status fm_multiplier_induced_duals(const fm_multiplier *mult, fm_frame **psi_dagger,
                                      fm_frame **phi_dagger) {
  return Guard([&] {
    Require(mult && psi_dagger && phi_dagger, "fm_multiplier_induced_duals: null argument");
    framemult::InducedDuals d = framemult::multipliers::ComputeInducedDuals(mult->mult);
    *psi_dagger = new fm_frame{std::move(d.psi_dagger)};
    *phi_dagger = new fm_frame{std::move(d.phi_dagger)};
  });
}

fm_status fm_multiplier_canonical_inversion(const fm_multiplier *mult, double *residual) {
  return Guard([&] {
    Require(mult && residual, "fm_multiplier_canonical_inversion: null argument");
    *residual = framemult::multipliers::VerifyCanonicalInversion(mult->mult);
  });
}

fm_status fm_report_frame_info(const char *frame_json, const fm_tolerance *tol, char **out) {
  return Guard([&] {
    Require(frame_json && out, "fm_report_frame_info: null argument");
    *out = CopyString(framemult::report::FrameInfo(frame_json, Tol(tol)).dump());
  });
}

fm_status fm_report_multiplier(const char *symbol_json, const char *phi_json, const char *psi_json,
                               int invert, int induced_duals, int verify_all,
                               int expect_invertible, const uint64_t *seed,
                               const fm_tolerance *tol, char **out) {
  return Guard([&] {
    Require(symbol_json && phi_json && psi_json && out, "fm_report_multiplier: null argument");
    framemult::report::MultiplierFlags flags;
    flags.invert = invert != 0;
    flags.induced_duals = induced_duals != 0;
    flags.verify_all = verify_all != 0;
    flags.expect_invertible = expect_invertible != 0;
    std::optional<std::uint64_t> s;
    if (seed) s = *seed;
    *out = CopyString(
        framemult::report::MultiplierRun(symbol_json, phi_json, psi_json, flags, Tol(tol), s)
            .dump());
  });
}

fm_status fm_report_example(const char *name, const fm_tolerance *tol, char **out) {
  return Guard([&] {
    Require(name && out, "fm_report_example: null argument");
    *out = CopyString(framemult::report::ExampleRun(name, Tol(tol)).dump());
  });
}

fm_status fm_report_render_pretty(const char *report_json, char **out) {
  return Guard([&] {
    Require(report_json && out, "fm_report_render_pretty: null argument");
    framemult::report::Json report = framemult::json_io::Parse(report_json);
    try {
      *out = CopyString(framemult::report::RenderPretty(report));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kParse, std::string("not a report: ") + e.what());
    }
  });
}

size_t fm_example_count(void) { return ExampleNames().size(); }

const char *fm_example_name(size_t index) {
  const auto &names = ExampleNames();
  return index < names.size() ? names[index].c_str() : nullptr;
}

fm_status fm_example_show(const char *name, char **out) {
  return Guard([&] {
    Require(name && out, "fm_example_show: null argument");
    framemult::ExampleEntry e = framemult::blockseq::FindExample(name);
    framemult::report::Json j{{"name", e.name},
                              {"title", e.title},
                              {"system", framemult::json_io::SystemToJson(e.system)},
                              {"annotations", e.annotations}};
    *out = CopyString(j.dump(2));
  });
}

}  // extern "C"
