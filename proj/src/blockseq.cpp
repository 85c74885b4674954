// src/blockseq.cpp

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

#include "framemult/blockseq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framemult/error.hpp"

namespace framemult {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack on spot checks of closed-form metadata against generated
// entries; the generators go through pow and accumulate a few ulps.
constexpr double kSpotSlack = 1e-12;

RealVector ZeroExponents(long n) { return RealVector::Zero(n); }

void CheckTemplate(const BlockTemplate &t) {
  const long b = t.phi.rows(), len = t.phi.cols();
  if (b < 1 || len < 1)
    throw Error(ErrorCode::kInvalidArgument, "block template must be non-empty");
  if (t.psi.rows() != b || t.psi.cols() != len || t.m.size() != len)
    throw Error(ErrorCode::kDimensionMismatch, "block template lengths differ");
}

// Per-entry description of one side of a power-law system: entry n of block k
// is coefficient_n * k^{-exponent_n} * vector_n.
struct SideEntries {
  ComplexMatrix vectors;
  ComplexVector coefficients;
  RealVector exponents;
};

SideEntries EntriesFor(const BlockSystem &sys, Side side) {
  const BlockTemplate &t = sys.base();
  const long len = sys.block_len();
  switch (side) {
    case Side::kPhi:
      return {t.phi, ComplexVector::Ones(len), sys.phi_exponents()};
    case Side::kPsi:
      return {t.psi, ComplexVector::Ones(len), sys.psi_exponents()};
    case Side::kMPhi:
      return {t.phi, t.m, sys.phi_exponents() + sys.m_exponents()};
    case Side::kMbarPsi:
      return {t.psi, t.m.conjugate(), sys.psi_exponents() + sys.m_exponents()};
    case Side::kMPsi:
      return {t.psi, t.m, sys.psi_exponents() + sys.m_exponents()};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown side");
}

ComplexMatrix SideSynthesis(const BlockTemplate &blk, Side side) {
  switch (side) {
    case Side::kPhi: return blk.phi;
    case Side::kPsi: return blk.psi;
    case Side::kMPhi: return blk.phi * blk.m.asDiagonal();
    case Side::kMbarPsi: return blk.psi * blk.m.conjugate().asDiagonal();
    case Side::kMPsi: return blk.psi * blk.m.asDiagonal();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown side");
}

RealVector BlockSpectrum(const ComplexMatrix &syn, const ToleranceConfig &tol) {
  return numerics::SpectrumHermitian(syn * syn.adjoint(), tol);
}

Complex InterleavedSideCoefficient(const InterleavedSystem &sys, Side side, long k) {
  switch (side) {
    case Side::kPhi: return sys.phi.at(k);
    case Side::kPsi: return sys.psi.at(k);
    case Side::kMPhi: return sys.m.at(k) * sys.phi.at(k);
    case Side::kMbarPsi: return std::conj(sys.m.at(k)) * sys.psi.at(k);
    case Side::kMPsi: return sys.m.at(k) * sys.psi.at(k);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown side");
}

Complex InterleavedSideTransient(const InterleavedSystem &sys, Side side) {
  switch (side) {
    case Side::kPhi: return sys.transient_phi;
    case Side::kPsi: return sys.transient_psi;
    case Side::kMPhi: return sys.transient_m * sys.transient_phi;
    case Side::kMbarPsi: return std::conj(sys.transient_m) * sys.transient_psi;
    case Side::kMPsi: return sys.transient_m * sys.transient_psi;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown side");
}

// Modulus ratio of the recurrent coefficient of a side.
double InterleavedSideRatio(const InterleavedSystem &sys, Side side) {
  switch (side) {
    case Side::kPhi: return std::abs(sys.phi.ratio);
    case Side::kPsi: return std::abs(sys.psi.ratio);
    case Side::kMPhi: return std::abs(sys.m.ratio) * std::abs(sys.phi.ratio);
    case Side::kMbarPsi:
    case Side::kMPsi: return std::abs(sys.m.ratio) * std::abs(sys.psi.ratio);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown side");
}

void SpotCheckModulus(double value, const SymbolProfile &p) {
  const double lo = p.inf_modulus * (1.0 - kSpotSlack);
  const double hi = p.sup_modulus * (1.0 + kSpotSlack);
  if (value < lo || value > hi)
    throw Error(ErrorCode::kMetadataInconsistent,
                "generated symbol entry " + std::to_string(value) +
                    " lies outside the closed-form range [" + std::to_string(p.inf_modulus) +
                    ", " + std::to_string(p.sup_modulus) + "]");
}

}  // namespace

const char *GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kConstantTemplate: return "constant-template";
    case GeneratorKind::kHarmonicWeight: return "harmonic-weight";
    case GeneratorKind::kCustom: return "custom";
  }
  return "unknown";
}

const char *SideName(Side side) {
  switch (side) {
    case Side::kPhi: return "phi";
    case Side::kPsi: return "psi";
    case Side::kMPhi: return "m_phi";
    case Side::kMbarPsi: return "mbar_psi";
    case Side::kMPsi: return "m_psi";
  }
  return "unknown";
}

const char *FrameClassName(FrameClass c) {
  switch (c) {
    case FrameClass::kFrame: return "frame";
    case FrameClass::kBesselNotFrame: return "bessel_not_frame";
    case FrameClass::kNotBessel: return "not_bessel";
  }
  return "unknown";
}

BlockSystem BlockSystem::ConstantTemplate(BlockTemplate block) {
  CheckTemplate(block);
  const long len = block.phi.cols();
  BlockSystem sys = HarmonicWeight(std::move(block), ZeroExponents(len), ZeroExponents(len),
                                   ZeroExponents(len));
  sys.kind_ = GeneratorKind::kConstantTemplate;
  return sys;
}

BlockSystem BlockSystem::HarmonicWeight(BlockTemplate base, RealVector phi_exponents,
                                        RealVector psi_exponents, RealVector m_exponents) {
  CheckTemplate(base);
  const long len = base.phi.cols();
  if (phi_exponents.size() != len || psi_exponents.size() != len || m_exponents.size() != len)
    throw Error(ErrorCode::kDimensionMismatch, "exponent vectors must have block length");
  if (!phi_exponents.allFinite() || !psi_exponents.allFinite() || !m_exponents.allFinite())
    throw Error(ErrorCode::kInvalidArgument, "exponents must be finite");
  BlockSystem sys;
  sys.kind_ = GeneratorKind::kHarmonicWeight;
  sys.block_dim_ = base.phi.rows();
  sys.block_len_ = len;
  sys.base_ = std::move(base);
  sys.phi_exp_ = std::move(phi_exponents);
  sys.psi_exp_ = std::move(psi_exponents);
  sys.m_exp_ = std::move(m_exponents);
  return sys;
}

BlockSystem BlockSystem::Custom(long block_dim, long block_len,
                                std::function<BlockTemplate(long)> generator) {
  if (block_dim < 1 || block_len < 1 || !generator)
    throw Error(ErrorCode::kInvalidArgument, "custom block system needs b, L >= 1 and a generator");
  BlockSystem sys;
  sys.kind_ = GeneratorKind::kCustom;
  sys.block_dim_ = block_dim;
  sys.block_len_ = block_len;
  sys.generator_ = std::move(generator);
  return sys;
}

BlockTemplate BlockSystem::Block(long k) const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "block index starts at 1");
  if (kind_ == GeneratorKind::kCustom) {
    BlockTemplate t = generator_(k);
    if (t.phi.rows() != block_dim_ || t.phi.cols() != block_len_)
      throw Error(ErrorCode::kDimensionMismatch, "custom generator returned a block of the wrong shape");
    CheckTemplate(t);
    return t;
  }
  BlockTemplate t = base_;
  if (kind_ == GeneratorKind::kConstantTemplate) return t;
  const double kk = static_cast<double>(k);
  for (long n = 0; n < block_len_; ++n) {
    t.phi.col(n) *= std::pow(kk, -phi_exp_(n));
    t.psi.col(n) *= std::pow(kk, -psi_exp_(n));
    t.m(n) *= std::pow(kk, -m_exp_(n));
  }
  return t;
}

Complex GeometricTerm::at(long k) const {
  return first * std::polar(std::pow(std::abs(ratio), static_cast<double>(k)),
                            static_cast<double>(k) * std::arg(ratio));
}

Complex InterleavedSystem::Product(long k) const {
  return m.at(k) * phi.at(k) * std::conj(psi.at(k));
}

namespace blockseq {

ComplexMatrix BlockMultiplier(const BlockSystem &sys, long k) {
  BlockTemplate t = sys.Block(k);
  return multipliers::MultiplierMatrix(t.m, FiniteFrame(std::move(t.phi)), FiniteFrame(std::move(t.psi)));
}

FiniteSystem Assemble(const BlockSystem &sys, long blocks) {
  if (blocks < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one block");
  const long b = sys.block_dim(), len = sys.block_len();
  ComplexMatrix phi = ComplexMatrix::Zero(b * blocks, len * blocks);
  ComplexMatrix psi = ComplexMatrix::Zero(b * blocks, len * blocks);
  ComplexVector m(len * blocks);
  for (long k = 1; k <= blocks; ++k) {
    BlockTemplate t = sys.Block(k);
    phi.block((k - 1) * b, (k - 1) * len, b, len) = t.phi;
    psi.block((k - 1) * b, (k - 1) * len, b, len) = t.psi;
    m.segment((k - 1) * len, len) = t.m;
  }
  return FiniteSystem{Symbol(std::move(m)), FiniteFrame(std::move(phi)), FiniteFrame(std::move(psi))};
}

Multiplier BlockMultiplierObject(const BlockSystem &sys, long k, const ToleranceConfig &tol) {
  BlockTemplate t = sys.Block(k);
  return Multiplier::Build(Symbol(t.m), FiniteFrame(t.phi), FiniteFrame(t.psi), tol);
}

SideBounds SystemFrameBounds(const BlockSystem &sys, Side side, long horizon,
                             const ToleranceConfig &tol) {
  if (horizon < 1) throw Error(ErrorCode::kInvalidArgument, "horizon must be at least 1");
  SideBounds out;
  out.horizon = horizon;
  out.horizon_lower = kInf;
  out.horizon_upper = 0.0;
  std::vector<double> lows, highs;
  lows.reserve(static_cast<std::size_t>(horizon));
  highs.reserve(static_cast<std::size_t>(horizon));
  for (long k = 1; k <= horizon; ++k) {
    RealVector ev = BlockSpectrum(SideSynthesis(sys.Block(k), side), tol);
    lows.push_back(ev(0));
    highs.push_back(ev(ev.size() - 1));
    out.horizon_lower = std::min(out.horizon_lower, ev(0));
    out.horizon_upper = std::max(out.horizon_upper, ev(ev.size() - 1));
  }

  if (!sys.has_metadata()) {
    // Without a closed form the only defensible call is a flat tail.
    const std::size_t half = lows.size() / 2;
    auto [lo_min, lo_max] = std::minmax_element(lows.begin() + half, lows.end());
    auto [hi_min, hi_max] = std::minmax_element(highs.begin() + half, highs.end());
    const double scale = std::max(*hi_max, 1e-300);
    if (*lo_max - *lo_min > tol.rel_eps * scale || *hi_max - *hi_min > tol.rel_eps * scale)
      throw Error(ErrorCode::kMetadataMissing,
                  "no closed form for a custom block system and the horizon trend is not flat");
    out.limit_lower = out.horizon_lower;
    out.limit_upper = out.horizon_upper;
  } else {
    SideEntries e = EntriesFor(sys, side);
    const long b = sys.block_dim();
    bool unbounded = false;
    ComplexMatrix s_limit = ComplexMatrix::Zero(b, b);
    for (long n = 0; n < sys.block_len(); ++n) {
      const double weight = std::norm(e.coefficients(n)) * e.vectors.col(n).squaredNorm();
      if (weight == 0.0) continue;
      if (e.exponents(n) < 0.0) unbounded = true;
      if (e.exponents(n) == 0.0)
        s_limit += std::norm(e.coefficients(n)) * e.vectors.col(n) * e.vectors.col(n).adjoint();
    }
    if (unbounded) {
      out.classification = FrameClass::kNotBessel;
      out.limit_lower = out.horizon_lower;
      out.limit_upper = kInf;
      return out;
    }
    // Non-negative exponents make the block frame operators decrease in the
    // Loewner order, so block 1 holds the sup and the limit block the inf.
    RealVector first = BlockSpectrum(SideSynthesis(sys.Block(1), side), tol);
    out.limit_upper = first(first.size() - 1);
    out.limit_lower = numerics::SpectrumHermitian(s_limit, tol)(0);
  }
  out.classification = (out.limit_upper > 0.0 && out.limit_lower > tol.rel_eps * out.limit_upper)
                           ? FrameClass::kFrame
                           : FrameClass::kBesselNotFrame;
  return out;
}

SideBounds SystemFrameBounds(const InterleavedSystem &sys, Side side, long horizon,
                             const ToleranceConfig &tol) {
  if (horizon < 1) throw Error(ErrorCode::kInvalidArgument, "horizon must be at least 1");
  SideBounds out;
  out.horizon = horizon;
  // The frame operator is diagonal: the recurrent direction collects
  // sum_k |c_k|^2, every other direction gets |t|^2.
  double partial = 0.0;
  for (long k = 0; k < horizon; ++k) partial += std::norm(InterleavedSideCoefficient(sys, side, k));
  const double transient = std::norm(InterleavedSideTransient(sys, side));
  out.horizon_lower = std::min(partial, transient);
  out.horizon_upper = std::max(partial, transient);

  const double c0 = std::norm(InterleavedSideCoefficient(sys, side, 0));
  const double rho = InterleavedSideRatio(sys, side);
  double recurrent = 0.0;
  if (c0 > 0.0) recurrent = rho < 1.0 ? c0 / (1.0 - rho * rho) : kInf;
  if (recurrent == kInf) {
    out.classification = FrameClass::kNotBessel;
    out.limit_lower = transient;
    out.limit_upper = kInf;
    return out;
  }
  out.limit_lower = std::min(recurrent, transient);
  out.limit_upper = std::max(recurrent, transient);
  out.classification = (out.limit_upper > 0.0 && out.limit_lower > tol.rel_eps * out.limit_upper)
                           ? FrameClass::kFrame
                           : FrameClass::kBesselNotFrame;
  return out;
}

SymbolProfile ProfileSymbol(const BlockSystem &sys) {
  if (!sys.has_metadata())
    throw Error(ErrorCode::kMetadataMissing, "custom block system carries no symbol metadata");
  SymbolProfile p;
  p.inf_modulus = kInf;
  p.sup_modulus = 0.0;
  p.all_nonzero = true;
  const ComplexVector &m = sys.base().m;
  const RealVector &e = sys.m_exponents();
  for (long n = 0; n < m.size(); ++n) {
    const double a = std::abs(m(n));
    if (a == 0.0) {
      p.all_nonzero = false;
      p.inf_modulus = 0.0;
      continue;
    }
    // |m| k^{-e}: decreasing to 0 for e > 0, constant for e = 0, unbounded for e < 0.
    p.inf_modulus = std::min(p.inf_modulus, e(n) > 0.0 ? 0.0 : a);
    p.sup_modulus = std::max(p.sup_modulus, e(n) < 0.0 ? kInf : a);
  }
  const long blocks = (kSymbolSpotCheck + sys.block_len() - 1) / sys.block_len();
  long seen = 0;
  for (long k = 1; k <= blocks; ++k) {
    BlockTemplate t = sys.Block(k);
    for (long n = 0; n < t.m.size() && seen < kSymbolSpotCheck; ++n, ++seen)
      SpotCheckModulus(std::abs(t.m(n)), p);
  }
  return p;
}

SymbolProfile ProfileSymbol(const InterleavedSystem &sys) {
  SymbolProfile p;
  const double first = std::abs(sys.m.first);
  const double rho = std::abs(sys.m.ratio);
  const double transient = std::abs(sys.transient_m);
  double rec_inf = first, rec_sup = first;
  if (first > 0.0) {
    if (rho > 1.0) rec_sup = kInf;
    if (rho < 1.0) rec_inf = 0.0;
  }
  p.inf_modulus = std::min(rec_inf, transient);
  p.sup_modulus = std::max(rec_sup, transient);
  p.all_nonzero = first > 0.0 && rho > 0.0 && transient > 0.0;
  for (long k = 0; k < kSymbolSpotCheck / 2; ++k) {
    SpotCheckModulus(std::abs(sys.m.at(k)), p);
    SpotCheckModulus(transient, p);
  }
  return p;
}

void CertifyRatio(const InterleavedSystem &sys) {
  const double r = sys.ratio_bound;
  if (!(r >= 0.0 && r < 1.0))
    throw Error(ErrorCode::kRatioNotCertified, "ratio bound must lie in [0, 1)");
  for (long k = 0; k + 1 < kRatioSpotCheck; ++k) {
    const double now = std::abs(sys.Product(k)), next = std::abs(sys.Product(k + 1));
    if (next > r * now * (1.0 + kSpotSlack))
      throw Error(ErrorCode::kRatioNotCertified,
                  "|p_" + std::to_string(k + 1) + "| exceeds ratio_bound * |p_" +
                      std::to_string(k) + "|");
  }
}

namespace {

InterleavedResult ApplyTransients(const InterleavedSystem &sys, const SparseVector &f,
                                  Complex &recurrent_coeff) {
  InterleavedResult out;
  const Complex t = sys.transient_m * sys.transient_phi * std::conj(sys.transient_psi);
  recurrent_coeff = 0.0;
  for (const auto &[index, value] : f) {
    if (index < 1) throw Error(ErrorCode::kInvalidArgument, "basis indices start at 1");
    if (value == Complex(0.0, 0.0)) continue;
    if (index == sys.recurrent_index)
      recurrent_coeff = value;
    else
      out.value[index] = t * value;
  }
  return out;
}

}  // namespace

InterleavedResult InterleavedApplyTruncated(const InterleavedSystem &sys,
                                            const SparseVector &f, long terms) {
  CertifyRatio(sys);
  if (terms < 0) throw Error(ErrorCode::kInvalidArgument, "terms must be non-negative");
  Complex fr;
  InterleavedResult out = ApplyTransients(sys, f, fr);
  if (fr == Complex(0.0, 0.0)) return out;
  Complex sum = 0.0;
  for (long k = 0; k < terms; ++k) sum += sys.Product(k);
  out.value[sys.recurrent_index] = sum * fr;
  out.terms = terms;
  out.error_bound = std::abs(fr) * std::abs(sys.Product(terms)) / (1.0 - sys.ratio_bound);
  return out;
}

InterleavedResult InterleavedApply(const InterleavedSystem &sys, const SparseVector &f,
                                   double tol) {
  CertifyRatio(sys);
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  Complex fr;
  InterleavedResult out = ApplyTransients(sys, f, fr);
  if (fr == Complex(0.0, 0.0)) return out;
  const double scale = std::abs(fr) / (1.0 - sys.ratio_bound);
  constexpr long kMaxTerms = 1L << 20;
  Complex sum = 0.0;
  long k = 0;
  double bound = scale * std::abs(sys.Product(0));
  while (bound > tol && k < kMaxTerms) {
    sum += sys.Product(k);
    ++k;
    bound = scale * std::abs(sys.Product(k));
  }
  if (bound > tol)
    throw Error(ErrorCode::kRatioNotCertified, "tail bound did not reach the tolerance");
  out.value[sys.recurrent_index] = sum * fr;
  out.terms = k;
  out.error_bound = bound;
  return out;
}

std::vector<ExampleEntry> ExampleRegistry() {
  auto row = [](std::initializer_list<double> v) {
    ComplexMatrix r(1, static_cast<long>(v.size()));
    long i = 0;
    for (double x : v) r(0, i++) = x;
    return r;
  };
  auto vec = [](std::initializer_list<double> v) {
    ComplexVector r(static_cast<long>(v.size()));
    long i = 0;
    for (double x : v) r(i++) = x;
    return r;
  };
  auto reals = [](std::initializer_list<double> v) {
    RealVector r(static_cast<long>(v.size()));
    long i = 0;
    for (double x : v) r(i++) = x;
    return r;
  };
  const double s5 = std::sqrt(5.0);

  std::vector<ExampleEntry> out;
  out.push_back(
      {"ex4_1",
       "bounded, non-semi-normalized symbol with identity multiplier",
       BlockSystem::HarmonicWeight({row({1, 1, -1}), row({1, 1, 1}), vec({1, 1, 1})},
                                   reals({0, 0, 0}), reals({0, 1, 1}), reals({0, 1, 1})),
       {"block multiplier is the identity for every k",
        "symbol bounded and nonzero, not semi-normalized",
        "m Phi and conj(m) Psi are frames, so the bounded-symbol induced-dual results apply",
        "weighted canonical characterization not applicable (symbol modulus varies)"}});

  InterleavedSystem ex42;
  ex42.recurrent_index = 1;
  ex42.phi = {1.0, 0.5};
  ex42.psi = {1.0, 1.0 / std::sqrt(2.0)};
  ex42.m = {1.0, std::sqrt(2.0)};
  ex42.ratio_bound = 0.5;
  out.push_back(
      {"ex4_2",
       "unbounded symbol, interleaved recurrent direction",
       ex42,
       {"claimed: multiplier is the identity",
        "computed: e_1 coefficient is 1 + sum_k 2^-k = 2 (flagged)",
        "m unbounded; m Psi not Bessel; m Phi is a frame"}});

  out.push_back(
      {"ex5_3",
       "canonical-dual inversion without equivalence",
       BlockSystem::ConstantTemplate(
           {row({1, 1, -1}), row({1, 1, 1}), vec({(5 + 2 * s5) / 5, (5 - 2 * s5) / 5, 1})}),
       {"block multiplier is the identity",
        "canonical duals are one third of the templates",
        "canonical-dual inversion formula holds",
        "Psi not equivalent to m Phi; Phi not equivalent to conj(m) Psi",
        "symbol semi-normalized"}});

  out.push_back({"ex5_final",
                 "constant modulus, varying phase",
                 BlockSystem::ConstantTemplate({row({1, 1}), row({1, -1}), vec({1, -1})}),
                 {"Psi = m Phi and Phi = conj(m) Psi",
                  "all constant-modulus characterizations hold"}});
  return out;
}

ExampleEntry FindExample(const std::string &name) {
  for (auto &e : ExampleRegistry())
    if (e.name == name) return e;
  throw Error(ErrorCode::kUnknownExample, "unknown example '" + name + "'");
}

}  // namespace blockseq
}  // namespace framemult
