// include/framemult/frames.hpp

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
#include <random>
#include <vector>

#include "framemult/numerics.hpp"

namespace framemult {

/// An ordered finite sequence (phi_1, ..., phi_N) in C^d, stored as its d x N
/// synthesis matrix (column n is phi_{n+1}). Storage is 0-based.
///
/// Inner products are linear in the first argument and conjugate-linear in
/// the second: <f, phi> = sum_k f_k conj(phi_k). The analysis operator is
/// therefore the adjoint of the synthesis matrix.
///
/// A FiniteFrame need not span C^d; "frame" in the name refers to the type of
/// object, and IsFrame() answers the predicate.
class FiniteFrame {
 public:
  /// Throws kInvalidArgument for empty or non-finite input.
  explicit FiniteFrame(ComplexMatrix synthesis);

  static FiniteFrame FromVectors(const std::vector<ComplexVector> &vectors);

  /// Columns of the identity in C^d.
  static FiniteFrame OrthonormalBasis(long dim);

  long dim() const { return synthesis_.rows(); }
  long count() const { return synthesis_.cols(); }

  const ComplexMatrix &synthesis() const { return synthesis_; }
  ComplexMatrix analysis_matrix() const { return synthesis_.adjoint(); }
  ComplexVector vector(long n) const { return synthesis_.col(n); }

  /// The weighted sequence (w_n phi_n).
  FiniteFrame Weighted(const ComplexVector &weights) const;

 private:
  ComplexMatrix synthesis_;
};

/// Parameter of the dual-frame family of a frame: a d x N matrix whose columns
/// are the perturbation vectors h_n. Every finite sequence is Bessel, so there
/// is no restriction on H.
struct DualFamilyParam {
  FiniteFrame base;
  ComplexMatrix perturbation;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

enum class EquivalenceFailure { kNone, kNoLinearMap, kNotInvertible };

const char *EquivalenceFailureName(EquivalenceFailure f);

/// Outcome of searching for an invertible L with L phi_n = psi_n.
struct Equivalence {
  std::optional<ComplexMatrix> op;
  EquivalenceFailure failure = EquivalenceFailure::kNone;
  double residual = 0.0;  // ||L Syn_Phi - Syn_Psi|| / ||Syn_Psi||
  explicit operator bool() const { return op.has_value(); }
};

namespace frames {

/// c_n = <f, phi_n>.
ComplexVector Analysis(const FiniteFrame &phi, const ComplexVector &f);

/// sum_n c_n phi_n.
ComplexVector Synthesis(const FiniteFrame &phi, const ComplexVector &c);

/// S = Syn Syn*.
ComplexMatrix FrameOperator(const FiniteFrame &phi);

bool IsFrame(const FiniteFrame &phi, const ToleranceConfig &tol = {});

/// Extreme eigenvalues of S. Throws kNotAFrame when lower <= rel_eps * upper.
FrameBounds Bounds(const FiniteFrame &phi, const ToleranceConfig &tol = {});

/// (S^{-1} phi_n). Throws kNotAFrame.
FiniteFrame CanonicalDual(const FiniteFrame &phi, const ToleranceConfig &tol = {});

/// Both reconstruction identities Syn_F Ana_Phi = I and Syn_Phi Ana_F = I.
bool IsDual(const FiniteFrame &f, const FiniteFrame &phi,
            const ToleranceConfig &tol = {});

/// f = sum <f, f_n> phi_n, i.e. Syn_Phi Ana_F = I.
bool IsAPseudoDual(const FiniteFrame &f, const FiniteFrame &phi,
                   const ToleranceConfig &tol = {});

/// f = sum <f, phi_n> f_n, i.e. Syn_F Ana_Phi = I.
bool IsSPseudoDual(const FiniteFrame &f, const FiniteFrame &phi,
                   const ToleranceConfig &tol = {});

/// The dual (phi~_n + h_n - sum_j <phi~_n, phi_j> h_j). Every dual of the
/// base frame arises this way, and H = 0 gives the canonical dual.
FiniteFrame DualFamily(const DualFamilyParam &p, const ToleranceConfig &tol = {});

/// Random dual-family parameter: iid standard complex Gaussian entries,
/// rescaled so ||H|| <= ||canonical dual||.
ComplexMatrix RandomPerturbation(const FiniteFrame &phi, std::mt19937_64 &rng,
                                 const ToleranceConfig &tol = {});

/// Candidate L = Syn_Psi pinv(Syn_Phi), accepted when it reproduces Syn_Psi to
/// rel_eps and is invertible. Both inputs must be frames with equal d and N.
Equivalence EquivalenceOperator(const FiniteFrame &phi, const FiniteFrame &psi,
                                const ToleranceConfig &tol = {});

bool IsRieszBasis(const FiniteFrame &phi, const ToleranceConfig &tol = {});

/// Ordered, entrywise equality: ||a_n - b_n|| <= rel_eps (1 + ||b_n||) for
/// every n.
bool SameSequence(const FiniteFrame &a, const FiniteFrame &b,
                  const ToleranceConfig &tol = {});

}  // namespace frames
}  // namespace framemult
