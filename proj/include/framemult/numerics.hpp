// include/framemult/numerics.hpp

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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace framemult {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance policy shared by every check in the library.
///
/// rel_eps scales residuals by operand norms; cond_max is the largest
/// sigma_max / sigma_min ratio still treated as invertible.
struct ToleranceConfig {
  double rel_eps = 1e-9;
  double cond_max = 1e12;

  /// Throws kInvalidArgument unless rel_eps > 0 and cond_max > 1.
  void Validate() const;
};

namespace numerics {

// Frobenius norm. All relative residuals in the library use it.
double Norm(const ComplexMatrix &a);

bool AllFinite(const ComplexMatrix &a);

ComplexMatrix Adjoint(const ComplexMatrix &a);

/// Moore-Penrose pseudoinverse; singular values at or below
/// rel_eps * sigma_max are dropped.
ComplexMatrix Pseudoinverse(const ComplexMatrix &a, const ToleranceConfig &tol);

/// Ascending eigenvalues of a Hermitian matrix. Throws kNotHermitian when
/// ||A - A*|| > rel_eps * ||A||.
RealVector SpectrumHermitian(const ComplexMatrix &a,
                             const ToleranceConfig &tol = {});

/// Singular values in descending order.
RealVector SingularValues(const ComplexMatrix &a);

/// Numerical rank: count of singular values above rel_eps * sigma_max.
long Rank(const ComplexMatrix &a, const ToleranceConfig &tol);

/// sigma_max / sigma_min, infinite for singular or empty input.
double ConditionNumber(const ComplexMatrix &a);

struct Inversion {
  std::optional<ComplexMatrix> inverse;
  double sigma_ratio = 0.0;  // sigma_min / sigma_max
  explicit operator bool() const { return inverse.has_value(); }
};

/// Inverse of a square matrix, or an empty result when
/// sigma_min <= sigma_max / cond_max. Non-square input throws
/// kDimensionMismatch.
Inversion TryInvert(const ComplexMatrix &a, const ToleranceConfig &tol);

/// Same as TryInvert but throws NotInvertibleError.
ComplexMatrix InvertOrThrow(const ComplexMatrix &a, const ToleranceConfig &tol);

/// ||a - b|| / max(||reference||, tiny). The reference norm is the scale the
/// caller wants the residual relative to.
double RelativeResidual(const ComplexMatrix &a, const ComplexMatrix &b,
                        double reference_norm);

ComplexMatrix Diagonal(const ComplexVector &values);

}  // namespace numerics
}  // namespace framemult
