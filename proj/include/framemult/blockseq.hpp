// include/framemult/blockseq.hpp

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

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "framemult/multipliers.hpp"

namespace framemult {

/// One block of a block-structured system: L template vectors in C^b for each
/// side, stored as b x L matrices, and L weights.
struct BlockTemplate {
  ComplexMatrix phi;
  ComplexMatrix psi;
  ComplexVector m;
};

enum class GeneratorKind { kConstantTemplate, kHarmonicWeight, kCustom };

const char *GeneratorKindName(GeneratorKind kind);

/// Infinite sequences Phi, Psi, m whose multiplier is block-diagonal: block k
/// (k >= 1) acts on its own copy of C^b. Concretely, the sequences list the
/// entries of block 1, then of block 2, and so on.
///
/// Power-law generators scale entry n of block k by k^{-e_n}, with exponents
/// given per entry and per side. The exponents are the closed-form metadata
/// used to reason about limits; a kConstantTemplate system is the special
/// case with all exponents zero. kCustom systems carry an arbitrary generator
/// and no metadata.
class BlockSystem {
 public:
  static BlockSystem ConstantTemplate(BlockTemplate block);
  static BlockSystem HarmonicWeight(BlockTemplate base, RealVector phi_exponents,
                                    RealVector psi_exponents, RealVector m_exponents);
  static BlockSystem Custom(long block_dim, long block_len,
                            std::function<BlockTemplate(long)> generator);

  GeneratorKind kind() const { return kind_; }
  long block_dim() const { return block_dim_; }
  long block_len() const { return block_len_; }
  bool has_metadata() const { return kind_ != GeneratorKind::kCustom; }

  /// Templates of block k, k >= 1.
  BlockTemplate Block(long k) const;

  // Metadata; only meaningful when has_metadata().
  const BlockTemplate &base() const { return base_; }
  const RealVector &phi_exponents() const { return phi_exp_; }
  const RealVector &psi_exponents() const { return psi_exp_; }
  const RealVector &m_exponents() const { return m_exp_; }

 private:
  BlockSystem() = default;

  GeneratorKind kind_ = GeneratorKind::kConstantTemplate;
  long block_dim_ = 0;
  long block_len_ = 0;
  BlockTemplate base_;
  RealVector phi_exp_, psi_exp_, m_exp_;
  std::function<BlockTemplate(long)> generator_;
};

/// A complex scalar with a geometric law: value(k) = first * ratio^k, k >= 0.
struct GeometricTerm {
  Complex first{1.0, 0.0};
  Complex ratio{1.0, 0.0};
  Complex at(long k) const;
};

/// Sequences that are not block-diagonal: a single recurrent basis direction
/// e_r receives infinitely many terms (first, ratio) while every other basis
/// direction e_j receives exactly one transient term. The terms interleave as
/// (e_r, e_{j1}, e_r, e_{j2}, ...).
struct InterleavedSystem {
  long recurrent_index = 1;  // 1-based basis index
  GeometricTerm phi, psi, m;
  Complex transient_phi{1.0, 0.0};
  Complex transient_psi{1.0, 0.0};
  Complex transient_m{1.0, 0.0};
  /// User-certified bound r < 1 with |p_{k+1}| <= r |p_k|, where
  /// p_k = m_k phi_k conj(psi_k).
  double ratio_bound = 0.5;

  /// p_k computed from the generated terms.
  Complex Product(long k) const;
};

enum class Side { kPhi, kPsi, kMPhi, kMbarPsi, kMPsi };
const char *SideName(Side side);

enum class FrameClass { kFrame, kBesselNotFrame, kNotBessel };
const char *FrameClassName(FrameClass c);

struct SideBounds {
  long horizon = 0;
  double horizon_lower = 0.0;  // inf over the horizon of the smallest eigenvalue
  double horizon_upper = 0.0;  // sup over the horizon of the largest eigenvalue
  double limit_lower = 0.0;    // from metadata
  double limit_upper = 0.0;    // +inf when not Bessel
  FrameClass classification = FrameClass::kFrame;
};

struct SymbolProfile {
  double inf_modulus = 0.0;
  double sup_modulus = 0.0;  // +inf when unbounded
  bool all_nonzero = false;
  bool bounded() const { return sup_modulus < std::numeric_limits<double>::infinity(); }
  bool semi_normalized() const { return inf_modulus > 0.0 && bounded(); }
};

/// Finitely supported vector in the infinite space; keys are 1-based basis
/// indices.
using SparseVector = std::map<long, Complex>;

struct InterleavedResult {
  SparseVector value;
  double error_bound = 0.0;
  long terms = 0;  // recurrent terms summed
};

struct FiniteSystem {
  Symbol m;
  FiniteFrame phi;
  FiniteFrame psi;
};

struct ExampleEntry {
  std::string name;
  std::string title;
  std::variant<BlockSystem, InterleavedSystem> system;
  std::vector<std::string> annotations;
};

namespace blockseq {

inline constexpr long kDefaultHorizon = 1000;
inline constexpr long kSymbolSpotCheck = 1024;
inline constexpr long kRatioSpotCheck = 64;

/// b x b matrix sum_n m_{k,n} phi_{k,n} psi_{k,n}^*. Throws kInvalidArgument for
/// k < 1.
ComplexMatrix BlockMultiplier(const BlockSystem &sys, long k);

/// The first K blocks laid out as one finite system in C^{bK}.
FiniteSystem Assemble(const BlockSystem &sys, long blocks);

/// Per-block multiplier built through the multipliers module.
Multiplier BlockMultiplierObject(const BlockSystem &sys, long k,
                                 const ToleranceConfig &tol = {});

SideBounds SystemFrameBounds(const BlockSystem &sys, Side side, long horizon,
                             const ToleranceConfig &tol = {});
SideBounds SystemFrameBounds(const InterleavedSystem &sys, Side side, long horizon,
                             const ToleranceConfig &tol = {});

/// Closed-form inf/sup of |m_n|, spot-checked against the first 1024 entries.
/// Throws kMetadataMissing for custom generators and kMetadataInconsistent
/// when the generated entries contradict the closed form.
SymbolProfile ProfileSymbol(const BlockSystem &sys);
SymbolProfile ProfileSymbol(const InterleavedSystem &sys);

/// Throws kRatioNotCertified unless 0 <= ratio_bound < 1 and the first 64
/// products respect it.
void CertifyRatio(const InterleavedSystem &sys);

/// M f, summing recurrent terms until the geometric tail bound is <= tol.
InterleavedResult InterleavedApply(const InterleavedSystem &sys, const SparseVector &f,
                                   double tol);

/// M f with exactly `terms` recurrent terms; error_bound is the tail bound.
InterleavedResult InterleavedApplyTruncated(const InterleavedSystem &sys,
                                            const SparseVector &f, long terms);

std::vector<ExampleEntry> ExampleRegistry();

/// Throws kUnknownExample.
ExampleEntry FindExample(const std::string &name);

}  // namespace blockseq
}  // namespace framemult
