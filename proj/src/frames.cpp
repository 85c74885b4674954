// src/frames.cpp

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

#include "framemult/frames.hpp"

#include <cmath>
#include <string>

#include "framemult/error.hpp"

namespace framemult {

FiniteFrame::FiniteFrame(ComplexMatrix synthesis) : synthesis_(std::move(synthesis)) {
  if (synthesis_.rows() < 1 || synthesis_.cols() < 1)
    throw Error(ErrorCode::kInvalidArgument, "a frame needs d >= 1 and N >= 1");
  if (!numerics::AllFinite(synthesis_))
    throw Error(ErrorCode::kInvalidArgument, "frame entries must be finite");
}

FiniteFrame FiniteFrame::FromVectors(const std::vector<ComplexVector> &vectors) {
  if (vectors.empty())
    throw Error(ErrorCode::kInvalidArgument, "a frame needs at least one vector");
  const long d = vectors.front().size();
  ComplexMatrix syn(d, static_cast<long>(vectors.size()));
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    if (vectors[n].size() != d)
      throw Error(ErrorCode::kDimensionMismatch,
                  "frame vector " + std::to_string(n) + " has length " +
                      std::to_string(vectors[n].size()) + ", expected " +
                      std::to_string(d));
    syn.col(static_cast<long>(n)) = vectors[n];
  }
  return FiniteFrame(std::move(syn));
}

FiniteFrame FiniteFrame::OrthonormalBasis(long dim) {
  return FiniteFrame(ComplexMatrix::Identity(dim, dim));
}

FiniteFrame FiniteFrame::Weighted(const ComplexVector &weights) const {
  if (weights.size() != count())
    throw Error(ErrorCode::kDimensionMismatch, "weight sequence length differs from N");
  return FiniteFrame(synthesis_ * weights.asDiagonal());
}

const char *EquivalenceFailureName(EquivalenceFailure f) {
  switch (f) {
    case EquivalenceFailure::kNone: return "none";
    case EquivalenceFailure::kNoLinearMap: return "no_linear_map";
    case EquivalenceFailure::kNotInvertible: return "map_not_invertible";
  }
  return "unknown";
}

namespace frames {

namespace {

void RequireSameShape(const FiniteFrame &a, const FiniteFrame &b) {
  if (a.dim() != b.dim() || a.count() != b.count())
    throw Error(ErrorCode::kDimensionMismatch,
                "sequences differ in shape: " + std::to_string(a.dim()) + "x" +
                    std::to_string(a.count()) + " vs " + std::to_string(b.dim()) +
                    "x" + std::to_string(b.count()));
}

// Residual of a reconstruction product against the identity. Rounding in
// Syn_A Ana_B grows with ||A|| ||B||, so that product sets the scale.
bool ReconstructsIdentity(const FiniteFrame &synth, const FiniteFrame &anal,
                          const ToleranceConfig &tol) {
  const long d = synth.dim();
  ComplexMatrix prod = synth.synthesis() * anal.synthesis().adjoint();
  const double scale =
      std::max(std::sqrt(static_cast<double>(d)),
               synth.synthesis().norm() * anal.synthesis().norm());
  return (prod - ComplexMatrix::Identity(d, d)).norm() <= tol.rel_eps * scale;
}

}  // namespace

ComplexVector Analysis(const FiniteFrame &phi, const ComplexVector &f) {
  if (f.size() != phi.dim())
    throw Error(ErrorCode::kDimensionMismatch, "analysis: vector length differs from d");
  return phi.synthesis().adjoint() * f;
}

ComplexVector Synthesis(const FiniteFrame &phi, const ComplexVector &c) {
  if (c.size() != phi.count())
    throw Error(ErrorCode::kDimensionMismatch,
                "synthesis: coefficient length differs from N");
  return phi.synthesis() * c;
}

ComplexMatrix FrameOperator(const FiniteFrame &phi) {
  return phi.synthesis() * phi.synthesis().adjoint();
}

bool IsFrame(const FiniteFrame &phi, const ToleranceConfig &tol) {
  RealVector ev = numerics::SpectrumHermitian(FrameOperator(phi), tol);
  const double upper = ev(ev.size() - 1);
  return upper > 0.0 && ev(0) > tol.rel_eps * upper;
}

FrameBounds Bounds(const FiniteFrame &phi, const ToleranceConfig &tol) {
  RealVector ev = numerics::SpectrumHermitian(FrameOperator(phi), tol);
  FrameBounds b{ev(0), ev(ev.size() - 1)};
  if (!(b.upper > 0.0) || b.lower <= tol.rel_eps * b.upper)
    throw Error(ErrorCode::kNotAFrame, "sequence does not span C^" +
                                           std::to_string(phi.dim()) +
                                           " (lower frame bound " +
                                           std::to_string(b.lower) + ")");
  return b;
}

FiniteFrame CanonicalDual(const FiniteFrame &phi, const ToleranceConfig &tol) {
  Bounds(phi, tol);
  ComplexMatrix s = FrameOperator(phi);
  // S is Hermitian positive definite here.
  return FiniteFrame(s.llt().solve(phi.synthesis()));
}

bool IsDual(const FiniteFrame &f, const FiniteFrame &phi, const ToleranceConfig &tol) {
  RequireSameShape(f, phi);
  return ReconstructsIdentity(f, phi, tol) && ReconstructsIdentity(phi, f, tol);
}

bool IsAPseudoDual(const FiniteFrame &f, const FiniteFrame &phi,
                   const ToleranceConfig &tol) {
  RequireSameShape(f, phi);
  return ReconstructsIdentity(phi, f, tol);
}

bool IsSPseudoDual(const FiniteFrame &f, const FiniteFrame &phi,
                   const ToleranceConfig &tol) {
  RequireSameShape(f, phi);
  return ReconstructsIdentity(f, phi, tol);
}

FiniteFrame DualFamily(const DualFamilyParam &p, const ToleranceConfig &tol) {
  const FiniteFrame &phi = p.base;
  if (p.perturbation.rows() != phi.dim() || p.perturbation.cols() != phi.count())
    throw Error(ErrorCode::kDimensionMismatch,
                "dual-family perturbation must be d x N");
  FiniteFrame canonical = CanonicalDual(phi, tol);
  // Column n of H * G is sum_j <phi~_n, phi_j> h_j with G_{jn} = <phi~_n, phi_j>.
  ComplexMatrix gram = phi.synthesis().adjoint() * canonical.synthesis();
  ComplexMatrix syn = canonical.synthesis() + p.perturbation - p.perturbation * gram;
  return FiniteFrame(std::move(syn));
}

ComplexMatrix RandomPerturbation(const FiniteFrame &phi, std::mt19937_64 &rng,
                                 const ToleranceConfig &tol) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix h(phi.dim(), phi.count());
  for (long j = 0; j < h.cols(); ++j)
    for (long i = 0; i < h.rows(); ++i) h(i, j) = Complex(gauss(rng), gauss(rng));
  const double cap = CanonicalDual(phi, tol).synthesis().norm();
  const double norm = h.norm();
  if (norm > cap && norm > 0.0) h *= cap / norm;
  return h;
}

Equivalence EquivalenceOperator(const FiniteFrame &phi, const FiniteFrame &psi,
                                const ToleranceConfig &tol) {
  RequireSameShape(phi, psi);
  if (!IsFrame(phi, tol) || !IsFrame(psi, tol))
    throw Error(ErrorCode::kNotAFrame, "equivalence is defined between frames");
  Equivalence out;
  ComplexMatrix candidate =
      psi.synthesis() * numerics::Pseudoinverse(phi.synthesis(), tol);
  out.residual = numerics::RelativeResidual(candidate * phi.synthesis(),
                                            psi.synthesis(), psi.synthesis().norm());
  if (out.residual > tol.rel_eps) {
    out.failure = EquivalenceFailure::kNoLinearMap;
    return out;
  }
  if (!numerics::TryInvert(candidate, tol)) {
    out.failure = EquivalenceFailure::kNotInvertible;
    return out;
  }
  out.op = std::move(candidate);
  return out;
}

bool IsRieszBasis(const FiniteFrame &phi, const ToleranceConfig &tol) {
  return phi.count() == phi.dim() && IsFrame(phi, tol);
}

bool SameSequence(const FiniteFrame &a, const FiniteFrame &b, const ToleranceConfig &tol) {
  RequireSameShape(a, b);
  for (long n = 0; n < a.count(); ++n) {
    const double ref = b.synthesis().col(n).norm();
    if ((a.synthesis().col(n) - b.synthesis().col(n)).norm() > tol.rel_eps * (1.0 + ref))
      return false;
  }
  return true;
}

}  // namespace frames
}  // namespace framemult
