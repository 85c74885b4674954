// include/framemult/multipliers.hpp

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
#include <vector>

#include "framemult/frames.hpp"

namespace framemult {

/// Weight sequence m = (m_n) of a multiplier.
class Symbol {
 public:
  explicit Symbol(ComplexVector values);

  static Symbol Constant(long count, Complex value);

  long size() const { return values_.size(); }
  const ComplexVector &values() const { return values_; }
  Complex operator[](long n) const { return values_(n); }

  bool all_nonzero() const { return inf_modulus_ > 0.0; }
  double sup_modulus() const { return sup_modulus_; }
  double inf_modulus() const { return inf_modulus_; }

  /// Finite case: every entry is finite, so this is inf |m_n| > 0.
  bool semi_normalized() const { return all_nonzero(); }

  /// True when max |m_n| - min |m_n| <= rel_eps * max |m_n| and m != 0.
  bool constant_modulus(const ToleranceConfig &tol = {}) const;
  bool constant(const ToleranceConfig &tol = {}) const;

  /// 1/m; throws kZeroSymbolEntry.
  Symbol Reciprocal() const;
  Symbol Conjugate() const;

 private:
  ComplexVector values_;
  double sup_modulus_ = 0.0;
  double inf_modulus_ = 0.0;
};

/// M_{m,Phi,Psi} f = sum_n m_n <f, psi_n> phi_n, realized as
/// Syn_Phi diag(m) Syn_Psi^*. The inverse is computed once, at build time,
/// under the tolerance the multiplier was built with.
class Multiplier {
 public:
  static Multiplier Build(Symbol m, FiniteFrame phi, FiniteFrame psi,
                          const ToleranceConfig &tol = {});

  const Symbol &symbol() const { return symbol_; }
  const FiniteFrame &phi() const { return phi_; }
  const FiniteFrame &psi() const { return psi_; }
  const ComplexMatrix &matrix() const { return matrix_; }
  const ToleranceConfig &tolerance() const { return tol_; }

  long dim() const { return matrix_.rows(); }
  long count() const { return symbol_.size(); }

  bool invertible() const { return inversion_.inverse.has_value(); }
  double sigma_ratio() const { return inversion_.sigma_ratio; }
  /// Throws NotInvertibleError.
  const ComplexMatrix &inverse() const;

  ComplexVector Apply(const ComplexVector &f) const;

 private:
  Multiplier(Symbol m, FiniteFrame phi, FiniteFrame psi, ComplexMatrix matrix,
             const ToleranceConfig &tol);

  Symbol symbol_;
  FiniteFrame phi_;
  FiniteFrame psi_;
  ComplexMatrix matrix_;
  ToleranceConfig tol_;
  numerics::Inversion inversion_;
};

/// The pair of dual frames an invertible multiplier induces:
/// psi_dagger = (M^{-1}(m_n phi_n)), a dual of Psi, and
/// phi_dagger = ((M^{-1})^*(conj(m_n) psi_n)), a dual of Phi.
struct InducedDuals {
  FiniteFrame psi_dagger;
  FiniteFrame phi_dagger;
};

/// Which induced dual a uniqueness question is about.
enum class DaggerSide {
  kPhiDagger,  // unknown F in M^{-1} = M_{1/m, Psi^d, F}, all duals Psi^d of Psi
  kPsiDagger,  // unknown G in M^{-1} = M_{1/m, G, Phi^d}, all duals Phi^d of Phi
};

/// Residuals of the reciprocal-symbol inversion identities over the whole
/// dual family, evaluated at H = 0 and at every basis perturbation. The
/// identity is affine in H, so passing these d*N+1 points covers every dual.
struct DualCertificate {
  double max_residual_minv1 = 0.0;
  double max_residual_minv2 = 0.0;
  long points = 0;
  bool certified = false;
};

struct PropQReport {
  double eq1_residual = 0.0;
  bool eq1_holds = false;
  bool psi_equiv_mphi = false;
  bool phi_equiv_mbar_psi = false;
  bool psi_dagger_is_canonical = false;
  bool phi_dagger_is_canonical = false;
  bool constant_symbol = false;
};

/// The two weighted-frame chains. A chain is only evaluated when its
/// hypothesis (canonical dual of the weighted frame equals the conjugate
/// reciprocal weighted canonical dual) holds.
struct WeightedChainReport {
  bool phi_side_applies = false;
  // Legs: M invertible with the canonical inversion formula; Psi ~ m Phi;
  // M invertible with Psi-dagger canonical.
  bool phi_side_legs[3] = {false, false, false};
  bool psi_side_applies = false;
  // Legs: M invertible with the canonical inversion formula; Phi ~ conj(m) Psi;
  // M invertible with Phi-dagger canonical.
  bool psi_side_legs[3] = {false, false, false};
};

struct ConstantModulusReport {
  double modulus = 0.0;
  bool invertible_and_eq1 = false;
  bool psi_equiv_mphi = false;
  bool phi_equiv_mbar_psi = false;
};

namespace multipliers {

/// Syn_Phi diag(m) Syn_Psi^* without any checks beyond shapes.
ComplexMatrix MultiplierMatrix(const ComplexVector &m, const FiniteFrame &phi,
                               const FiniteFrame &psi);

/// Throws NotInvertibleError.
ComplexMatrix Invert(const Multiplier &M);

/// Throws kZeroSymbolEntry, NotInvertibleError.
InducedDuals ComputeInducedDuals(const Multiplier &M);

/// ||M^{-1} - M_{1/m, Psi^d, Phi-dagger}|| / ||M^{-1}||. Psi^d must be an
/// s-pseudo-dual of Psi (every dual qualifies); otherwise kNotADual.
double VerifyIdentityMinv1(const Multiplier &M, const FiniteFrame &psi_d);

/// ||M^{-1} - M_{1/m, Psi-dagger, Phi^d}|| / ||M^{-1}||. Phi^d must be an
/// a-pseudo-dual of Phi; otherwise kNotADual.
double VerifyIdentityMinv2(const Multiplier &M, const FiniteFrame &phi_d);

/// Exact check of both identities over all duals (see DualCertificate).
DualCertificate CertifyAllDuals(const Multiplier &M);

/// Kernel dimension of G -> (M_{m, G, D_k})_k (kSynthesis) or
/// G -> (M_{m, D_k, G})_k (kAnalysis) over the supplied duals D_k, counted in
/// complex dimensions of the d*N unknown entries. Zero means the only
/// sequence annihilated by every sampled multiplier is the null sequence.
enum class UnknownSlot { kSynthesis, kAnalysis };
long NullMultiplierKernel(const ComplexVector &m, const std::vector<FiniteFrame> &duals,
                          UnknownSlot slot, const ToleranceConfig &tol);

/// Canonical dual followed by (dual_samples - 1) random dual-family draws of
/// the frame on the relevant side.
std::vector<FiniteFrame> SampleDuals(const FiniteFrame &frame, long dual_samples,
                                     std::uint64_t seed, const ToleranceConfig &tol);

/// Kernel dimension of the difference system for the chosen induced dual.
long UniquenessKernel(const Multiplier &M, DaggerSide side, long dual_samples,
                      std::uint64_t seed);

/// If M^{-1} = M_{1/m, F, Phi-dagger} holds, returns whether F is an
/// s-pseudo-dual of Psi. Throws kIdentityDoesNotHold otherwise.
bool RecoverPseudoDualF(const Multiplier &M, const FiniteFrame &f);

/// If M^{-1} = M_{1/m, Psi-dagger, G} holds, returns whether G is an
/// a-pseudo-dual of Phi. Throws kIdentityDoesNotHold otherwise.
bool RecoverPseudoDualG(const Multiplier &M, const FiniteFrame &g);

/// ||M^{-1} - M_{1/m, Psi~, Phi~}|| / ||M^{-1}||.
double VerifyCanonicalInversion(const Multiplier &M);

/// Throws kImplicationViolated if the computed booleans contradict the
/// equivalence/canonical-dual implications.
PropQReport CheckPropQ(const Multiplier &M);

/// canonical_dual(m Phi) == ((1/conj(m_n)) S_Phi^{-1} phi_n).
bool CheckWeightedCanonical(const FiniteFrame &phi, const Symbol &m,
                            const ToleranceConfig &tol = {});

/// Throws kImplicationViolated.
WeightedChainReport CheckWeightedChain(const Multiplier &M);

/// Throws kPreconditionFailed unless |m_n| is a nonzero constant;
/// kImplicationViolated if the three legs disagree.
ConstantModulusReport CheckConstantModulus(const Multiplier &M);

}  // namespace multipliers
}  // namespace framemult
