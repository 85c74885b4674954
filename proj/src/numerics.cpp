// src/numerics.cpp

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

#include "framemult/numerics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "framemult/error.hpp"

namespace framemult {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotAFrame: return "NotAFrame";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kZeroSymbolEntry: return "ZeroSymbolEntry";
    case ErrorCode::kNotADual: return "NotADual";
    case ErrorCode::kIdentityDoesNotHold: return "IdentityDoesNotHold";
    case ErrorCode::kImplicationViolated: return "ImplicationViolated";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kUnknownExample: return "UnknownExample";
    case ErrorCode::kMetadataMissing: return "MetadataMissing";
    case ErrorCode::kMetadataInconsistent: return "MetadataInconsistent";
    case ErrorCode::kRatioNotCertified: return "RatioNotCertified";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void ToleranceConfig::Validate() const {
  if (!(rel_eps > 0.0) || !std::isfinite(rel_eps))
    throw Error(ErrorCode::kInvalidArgument, "rel_eps must be positive");
  if (!(cond_max > 1.0))
    throw Error(ErrorCode::kInvalidArgument, "cond_max must exceed 1");
}

namespace numerics {

namespace {

Eigen::JacobiSVD<ComplexMatrix> FullSvd(const ComplexMatrix &a) {
  return Eigen::JacobiSVD<ComplexMatrix>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

double Norm(const ComplexMatrix &a) { return a.norm(); }

bool AllFinite(const ComplexMatrix &a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

ComplexMatrix Adjoint(const ComplexMatrix &a) { return a.adjoint(); }

ComplexMatrix Pseudoinverse(const ComplexMatrix &a, const ToleranceConfig &tol) {
  ComplexMatrix result = ComplexMatrix::Zero(a.cols(), a.rows());
  if (a.size() == 0) return result;
  auto svd = FullSvd(a);
  const RealVector &s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return result;
  const double cutoff = tol.rel_eps * s(0);
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) <= cutoff) break;
    result += svd.matrixV().col(k) * (1.0 / s(k)) * svd.matrixU().col(k).adjoint();
  }
  return result;
}

RealVector SpectrumHermitian(const ComplexMatrix &a, const ToleranceConfig &tol) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kDimensionMismatch, "spectrum of a non-square matrix");
  const double skew = (a - a.adjoint()).norm();
  if (skew > tol.rel_eps * a.norm())
    throw Error(ErrorCode::kNotHermitian,
                "matrix is not Hermitian (||A-A*|| = " + std::to_string(skew) + ")");
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RealVector SingularValues(const ComplexMatrix &a) {
  if (a.size() == 0) return RealVector();
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
}

long Rank(const ComplexMatrix &a, const ToleranceConfig &tol) {
  RealVector s = SingularValues(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  long r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > tol.rel_eps * s(0)) ++r;
  return r;
}

double ConditionNumber(const ComplexMatrix &a) {
  RealVector s = SingularValues(a);
  if (s.size() == 0 || s(s.size() - 1) == 0.0)
    return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

Inversion TryInvert(const ComplexMatrix &a, const ToleranceConfig &tol) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
  Inversion out;
  if (a.size() == 0) return out;
  auto svd = FullSvd(a);
  const RealVector &s = svd.singularValues();
  const double smax = s(0), smin = s(s.size() - 1);
  out.sigma_ratio = smax > 0.0 ? smin / smax : 0.0;
  if (!(smax > 0.0) || smin <= smax / tol.cond_max) return out;
  out.inverse = svd.matrixV() * s.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
  return out;
}

ComplexMatrix InvertOrThrow(const ComplexMatrix &a, const ToleranceConfig &tol) {
  Inversion inv = TryInvert(a, tol);
  if (!inv)
    throw NotInvertibleError(inv.sigma_ratio,
                             "matrix is not invertible (sigma_min/sigma_max = " +
                                 std::to_string(inv.sigma_ratio) + ")");
  return *inv.inverse;
}

double RelativeResidual(const ComplexMatrix &a, const ComplexMatrix &b,
                        double reference_norm) {
  const double scale = std::max(reference_norm, std::numeric_limits<double>::min());
  return (a - b).norm() / scale;
}

ComplexMatrix Diagonal(const ComplexVector &values) {
  return values.asDiagonal();
}

}  // namespace numerics
}  // namespace framemult
