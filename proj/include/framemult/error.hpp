// include/framemult/error.hpp

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

#include <stdexcept>
#include <string>

namespace framemult {

enum class ErrorCode {
  kParse,
  kDimensionMismatch,
  kNotHermitian,
  kNotAFrame,
  kNotInvertible,
  kZeroSymbolEntry,
  kNotADual,
  kIdentityDoesNotHold,
  kImplicationViolated,
  kPreconditionFailed,
  kUnknownExample,
  kMetadataMissing,
  kMetadataInconsistent,
  kRatioNotCertified,
  kInvalidArgument,
};

const char *ErrorCodeName(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the C
/// API maps onto its status values; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the throwing inversion paths; carries sigma_min / sigma_max.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(double sigma_ratio, const std::string &what)
      : Error(ErrorCode::kNotInvertible, what), sigma_ratio_(sigma_ratio) {}
  double sigma_ratio() const noexcept { return sigma_ratio_; }

 private:
  double sigma_ratio_;
};

}  // namespace framemult
