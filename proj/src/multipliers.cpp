// src/multipliers.cpp

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

#include "framemult/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "framemult/error.hpp"

namespace framemult {

Symbol::Symbol(ComplexVector values) : values_(std::move(values)) {
  if (values_.size() < 1)
    throw Error(ErrorCode::kInvalidArgument, "a symbol needs at least one entry");
  if (!numerics::AllFinite(values_))
    throw Error(ErrorCode::kInvalidArgument, "symbol entries must be finite");
  RealVector mod = values_.cwiseAbs();
  sup_modulus_ = mod.maxCoeff();
  inf_modulus_ = mod.minCoeff();
}

Symbol Symbol::Constant(long count, Complex value) {
  return Symbol(ComplexVector::Constant(count, value));
}

bool Symbol::constant_modulus(const ToleranceConfig &tol) const {
  return sup_modulus_ > 0.0 && sup_modulus_ - inf_modulus_ <= tol.rel_eps * sup_modulus_;
}

bool Symbol::constant(const ToleranceConfig &tol) const {
  const Complex first = values_(0);
  for (long n = 1; n < size(); ++n)
    if (std::abs(values_(n) - first) > tol.rel_eps * std::max(sup_modulus_, 1e-300))
      return false;
  return true;
}

Symbol Symbol::Reciprocal() const {
  if (!all_nonzero()) {
    long n = 0;
    values_.cwiseAbs().minCoeff(&n);
    throw Error(ErrorCode::kZeroSymbolEntry,
                "symbol entry " + std::to_string(n) + " is zero; 1/m is undefined");
  }
  return Symbol(values_.cwiseInverse());
}

Symbol Symbol::Conjugate() const { return Symbol(values_.conjugate()); }

Multiplier::Multiplier(Symbol m, FiniteFrame phi, FiniteFrame psi, ComplexMatrix matrix,
                       const ToleranceConfig &tol)
    : symbol_(std::move(m)),
      phi_(std::move(phi)),
      psi_(std::move(psi)),
      matrix_(std::move(matrix)),
      tol_(tol),
      inversion_(numerics::TryInvert(matrix_, tol)) {}

Multiplier Multiplier::Build(Symbol m, FiniteFrame phi, FiniteFrame psi,
                             const ToleranceConfig &tol) {
  tol.Validate();
  if (phi.dim() != psi.dim())
    throw Error(ErrorCode::kDimensionMismatch,
                "Phi lives in C^" + std::to_string(phi.dim()) + ", Psi in C^" +
                    std::to_string(psi.dim()));
  if (m.size() != phi.count() || m.size() != psi.count())
    throw Error(ErrorCode::kDimensionMismatch,
                "symbol length " + std::to_string(m.size()) + ", |Phi| = " +
                    std::to_string(phi.count()) + ", |Psi| = " +
                    std::to_string(psi.count()));
  ComplexMatrix matrix = multipliers::MultiplierMatrix(m.values(), phi, psi);
  return Multiplier(std::move(m), std::move(phi), std::move(psi), std::move(matrix), tol);
}

const ComplexMatrix &Multiplier::inverse() const {
  if (!inversion_.inverse)
    throw NotInvertibleError(inversion_.sigma_ratio,
                             "multiplier is not invertible (sigma_min/sigma_max = " +
                                 std::to_string(inversion_.sigma_ratio) + ")");
  return *inversion_.inverse;
}

ComplexVector Multiplier::Apply(const ComplexVector &f) const {
  if (f.size() != dim())
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from d");
  return matrix_ * f;
}

namespace multipliers {

namespace {

double InverseResidual(const Multiplier &M, const ComplexMatrix &candidate) {
  const ComplexMatrix &inv = M.inverse();
  return numerics::RelativeResidual(inv, candidate, inv.norm());
}

bool Legs3Agree(const bool legs[3]) { return legs[0] == legs[1] && legs[1] == legs[2]; }

[[noreturn]] void Violated(const std::string &what) {
  throw Error(ErrorCode::kImplicationViolated, what);
}

}  // namespace

ComplexMatrix MultiplierMatrix(const ComplexVector &m, const FiniteFrame &phi,
                               const FiniteFrame &psi) {
  if (phi.dim() != psi.dim() || m.size() != phi.count() || m.size() != psi.count())
    throw Error(ErrorCode::kDimensionMismatch, "multiplier operands differ in shape");
  // Rank-one terms accumulated in index order. A fixed summation order makes
  // block-diagonal systems reproduce their per-block matrices bit for bit.
  const ComplexMatrix &a = phi.synthesis();
  const ComplexMatrix &b = psi.synthesis();
  const long d = a.rows();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (long n = 0; n < m.size(); ++n) {
    if (m(n) == Complex(0.0, 0.0)) continue;
    for (long j = 0; j < d; ++j) {
      const Complex bj = std::conj(b(j, n));
      if (bj == Complex(0.0, 0.0)) continue;
      for (long i = 0; i < d; ++i) out(i, j) += (m(n) * a(i, n)) * bj;
    }
  }
  return out;
}

ComplexMatrix Invert(const Multiplier &M) { return M.inverse(); }

InducedDuals ComputeInducedDuals(const Multiplier &M) {
  if (!M.symbol().all_nonzero()) M.symbol().Reciprocal();  // throws
  const ComplexMatrix &inv = M.inverse();
  const ComplexVector &m = M.symbol().values();
  ComplexMatrix psi_dagger = inv * M.phi().synthesis() * m.asDiagonal();
  ComplexMatrix phi_dagger =
      inv.adjoint() * M.psi().synthesis() * m.conjugate().asDiagonal();
  return InducedDuals{FiniteFrame(std::move(psi_dagger)), FiniteFrame(std::move(phi_dagger))};
}

double VerifyIdentityMinv1(const Multiplier &M, const FiniteFrame &psi_d) {
  if (!frames::IsSPseudoDual(psi_d, M.psi(), M.tolerance()))
    throw Error(ErrorCode::kNotADual, "supplied sequence is not a dual of Psi");
  InducedDuals duals = ComputeInducedDuals(M);
  ComplexVector recip = M.symbol().Reciprocal().values();
  return InverseResidual(M, MultiplierMatrix(recip, psi_d, duals.phi_dagger));
}

double VerifyIdentityMinv2(const Multiplier &M, const FiniteFrame &phi_d) {
  if (!frames::IsAPseudoDual(phi_d, M.phi(), M.tolerance()))
    throw Error(ErrorCode::kNotADual, "supplied sequence is not a dual of Phi");
  InducedDuals duals = ComputeInducedDuals(M);
  ComplexVector recip = M.symbol().Reciprocal().values();
  return InverseResidual(M, MultiplierMatrix(recip, duals.psi_dagger, phi_d));
}

DualCertificate CertifyAllDuals(const Multiplier &M) {
  const ToleranceConfig &tol = M.tolerance();
  DualCertificate cert;
  const long d = M.dim(), n_count = M.count();
  for (long point = -1; point < d * n_count; ++point) {
    ComplexMatrix h = ComplexMatrix::Zero(d, n_count);
    if (point >= 0) h(point % d, point / d) = 1.0;
    FiniteFrame psi_d = frames::DualFamily({M.psi(), h}, tol);
    FiniteFrame phi_d = frames::DualFamily({M.phi(), h}, tol);
    cert.max_residual_minv1 = std::max(cert.max_residual_minv1, VerifyIdentityMinv1(M, psi_d));
    cert.max_residual_minv2 = std::max(cert.max_residual_minv2, VerifyIdentityMinv2(M, phi_d));
    ++cert.points;
  }
  cert.certified =
      cert.max_residual_minv1 <= tol.rel_eps && cert.max_residual_minv2 <= tol.rel_eps;
  return cert;
}

long NullMultiplierKernel(const ComplexVector &m, const std::vector<FiniteFrame> &duals,
                          UnknownSlot slot, const ToleranceConfig &tol) {
  if (duals.empty())
    throw Error(ErrorCode::kInvalidArgument, "need at least one dual frame");
  const long d = duals.front().dim(), n_count = duals.front().count();
  if (m.size() != n_count)
    throw Error(ErrorCode::kDimensionMismatch, "symbol length differs from N");
  const long k_count = static_cast<long>(duals.size());
  // Both slots reduce to the rank of an N-column stack: the unknown enters
  // either as Syn_G (B_k = diag(m) Syn_{D_k}^*) or as Syn_G^* (A_k = Syn_{D_k} diag(m)).
  ComplexMatrix stacked(d * k_count, n_count);
  for (long k = 0; k < k_count; ++k) {
    const FiniteFrame &dk = duals[static_cast<std::size_t>(k)];
    if (dk.dim() != d || dk.count() != n_count)
      throw Error(ErrorCode::kDimensionMismatch, "dual frames differ in shape");
    if (slot == UnknownSlot::kSynthesis)
      stacked.middleRows(k * d, d) = (m.asDiagonal() * dk.synthesis().adjoint()).adjoint();
    else
      stacked.middleRows(k * d, d) = dk.synthesis() * m.asDiagonal();
  }
  return d * (n_count - numerics::Rank(stacked, tol));
}

std::vector<FiniteFrame> SampleDuals(const FiniteFrame &frame, long dual_samples,
                                     std::uint64_t seed, const ToleranceConfig &tol) {
  if (dual_samples < 1)
    throw Error(ErrorCode::kInvalidArgument, "dual_samples must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<FiniteFrame> out;
  out.reserve(static_cast<std::size_t>(dual_samples));
  out.push_back(frames::CanonicalDual(frame, tol));
  for (long k = 1; k < dual_samples; ++k)
    out.push_back(frames::DualFamily({frame, frames::RandomPerturbation(frame, rng, tol)}, tol));
  return out;
}

long UniquenessKernel(const Multiplier &M, DaggerSide side, long dual_samples,
                      std::uint64_t seed) {
  M.inverse();
  const ToleranceConfig &tol = M.tolerance();
  ComplexVector recip = M.symbol().Reciprocal().values();
  // Two solutions F, F' of the identity differ by a sequence annihilated by
  // every sampled multiplier, so the kernel of the homogeneous part measures
  // the freedom left in the unknown.
  if (side == DaggerSide::kPhiDagger)
    return NullMultiplierKernel(recip, SampleDuals(M.psi(), dual_samples, seed, tol),
                                UnknownSlot::kAnalysis, tol);
  return NullMultiplierKernel(recip, SampleDuals(M.phi(), dual_samples, seed, tol),
                              UnknownSlot::kSynthesis, tol);
}

bool RecoverPseudoDualF(const Multiplier &M, const FiniteFrame &f) {
  InducedDuals duals = ComputeInducedDuals(M);
  ComplexVector recip = M.symbol().Reciprocal().values();
  const double r = InverseResidual(M, MultiplierMatrix(recip, f, duals.phi_dagger));
  if (r > M.tolerance().rel_eps)
    throw Error(ErrorCode::kIdentityDoesNotHold,
                "M^{-1} != M_{1/m,F,Phi-dagger} (residual " + std::to_string(r) + ")");
  return frames::IsSPseudoDual(f, M.psi(), M.tolerance());
}

bool RecoverPseudoDualG(const Multiplier &M, const FiniteFrame &g) {
  InducedDuals duals = ComputeInducedDuals(M);
  ComplexVector recip = M.symbol().Reciprocal().values();
  const double r = InverseResidual(M, MultiplierMatrix(recip, duals.psi_dagger, g));
  if (r > M.tolerance().rel_eps)
    throw Error(ErrorCode::kIdentityDoesNotHold,
                "M^{-1} != M_{1/m,Psi-dagger,G} (residual " + std::to_string(r) + ")");
  return frames::IsAPseudoDual(g, M.phi(), M.tolerance());
}

double VerifyCanonicalInversion(const Multiplier &M) {
  const ToleranceConfig &tol = M.tolerance();
  M.inverse();
  ComplexVector recip = M.symbol().Reciprocal().values();
  FiniteFrame psi_c = frames::CanonicalDual(M.psi(), tol);
  FiniteFrame phi_c = frames::CanonicalDual(M.phi(), tol);
  return InverseResidual(M, MultiplierMatrix(recip, psi_c, phi_c));
}

PropQReport CheckPropQ(const Multiplier &M) {
  const ToleranceConfig &tol = M.tolerance();
  const Symbol &m = M.symbol();
  PropQReport r;
  r.eq1_residual = VerifyCanonicalInversion(M);
  r.eq1_holds = r.eq1_residual <= tol.rel_eps;
  r.psi_equiv_mphi =
      static_cast<bool>(frames::EquivalenceOperator(M.phi().Weighted(m.values()), M.psi(), tol));
  r.phi_equiv_mbar_psi = static_cast<bool>(
      frames::EquivalenceOperator(M.psi().Weighted(m.values().conjugate()), M.phi(), tol));
  InducedDuals duals = ComputeInducedDuals(M);
  r.psi_dagger_is_canonical =
      frames::SameSequence(duals.psi_dagger, frames::CanonicalDual(M.psi(), tol), tol);
  r.phi_dagger_is_canonical =
      frames::SameSequence(duals.phi_dagger, frames::CanonicalDual(M.phi(), tol), tol);
  r.constant_symbol = m.constant(tol);

  if (r.psi_equiv_mphi && !r.eq1_holds)
    Violated("Psi ~ m Phi but the canonical inversion formula fails");
  if (r.psi_equiv_mphi != r.psi_dagger_is_canonical)
    Violated("Psi ~ m Phi disagrees with Psi-dagger == canonical dual");
  if (r.phi_equiv_mbar_psi && !r.eq1_holds)
    Violated("Phi ~ conj(m) Psi but the canonical inversion formula fails");
  if (r.phi_equiv_mbar_psi != r.phi_dagger_is_canonical)
    Violated("Phi ~ conj(m) Psi disagrees with Phi-dagger == canonical dual");
  if (r.constant_symbol) {
    const bool all[5] = {r.eq1_holds, r.psi_equiv_mphi, r.phi_equiv_mbar_psi,
                         r.psi_dagger_is_canonical, r.phi_dagger_is_canonical};
    for (bool b : all)
      if (b != all[0]) Violated("constant symbol: characterizations disagree");
  }
  return r;
}

bool CheckWeightedCanonical(const FiniteFrame &phi, const Symbol &m,
                            const ToleranceConfig &tol) {
  ComplexVector recip_conj = m.Reciprocal().values().conjugate();
  FiniteFrame weighted = phi.Weighted(m.values());
  if (!frames::IsFrame(weighted, tol))
    throw Error(ErrorCode::kNotAFrame, "weighted sequence m Phi is not a frame");
  FiniteFrame lhs = frames::CanonicalDual(weighted, tol);
  FiniteFrame rhs = frames::CanonicalDual(phi, tol).Weighted(recip_conj);
  return frames::SameSequence(lhs, rhs, tol);
}

WeightedChainReport CheckWeightedChain(const Multiplier &M) {
  const ToleranceConfig &tol = M.tolerance();
  const Symbol &m = M.symbol();
  m.Reciprocal();
  WeightedChainReport r;
  const bool inv = M.invertible();
  const bool eq1 = inv && VerifyCanonicalInversion(M) <= tol.rel_eps;
  std::optional<InducedDuals> duals;
  if (inv) duals = ComputeInducedDuals(M);

  r.phi_side_applies = CheckWeightedCanonical(M.phi(), m, tol);
  if (r.phi_side_applies) {
    r.phi_side_legs[0] = eq1;
    r.phi_side_legs[1] =
        static_cast<bool>(frames::EquivalenceOperator(M.phi().Weighted(m.values()), M.psi(), tol));
    r.phi_side_legs[2] =
        inv && frames::SameSequence(duals->psi_dagger, frames::CanonicalDual(M.psi(), tol), tol);
    if (!Legs3Agree(r.phi_side_legs))
      Violated("weighted canonical hypothesis on Phi holds but the chain disagrees");
  }
  Symbol mbar = m.Conjugate();
  r.psi_side_applies = CheckWeightedCanonical(M.psi(), mbar, tol);
  if (r.psi_side_applies) {
    r.psi_side_legs[0] = eq1;
    r.psi_side_legs[1] = static_cast<bool>(
        frames::EquivalenceOperator(M.psi().Weighted(mbar.values()), M.phi(), tol));
    r.psi_side_legs[2] =
        inv && frames::SameSequence(duals->phi_dagger, frames::CanonicalDual(M.phi(), tol), tol);
    if (!Legs3Agree(r.psi_side_legs))
      Violated("weighted canonical hypothesis on Psi holds but the chain disagrees");
  }
  return r;
}

ConstantModulusReport CheckConstantModulus(const Multiplier &M) {
  const ToleranceConfig &tol = M.tolerance();
  const Symbol &m = M.symbol();
  if (!m.constant_modulus(tol))
    throw Error(ErrorCode::kPreconditionFailed, "symbol modulus is not a nonzero constant");
  ConstantModulusReport r;
  r.modulus = m.sup_modulus();
  r.invertible_and_eq1 = M.invertible() && VerifyCanonicalInversion(M) <= tol.rel_eps;
  r.psi_equiv_mphi =
      static_cast<bool>(frames::EquivalenceOperator(M.phi().Weighted(m.values()), M.psi(), tol));
  r.phi_equiv_mbar_psi = static_cast<bool>(
      frames::EquivalenceOperator(M.psi().Weighted(m.values().conjugate()), M.phi(), tol));
  if (r.invertible_and_eq1 != r.psi_equiv_mphi || r.psi_equiv_mphi != r.phi_equiv_mbar_psi)
    Violated("constant-modulus symbol: the three characterizations disagree");
  return r;
}

}  // namespace multipliers
}  // namespace framemult
