// src/report.cpp

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

#include "framemult/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "framemult/error.hpp"

namespace framemult {
namespace report {

namespace {

// Fixed tolerances of the example expectations.
constexpr double kBlockIdentityTol = 1e-12;
constexpr double kDualTol = 1e-10;
constexpr double kInterleaveTol = 1e-12;

std::string Sha256Hex(const std::string &bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

Json BoundsJson(const SideBounds &b) {
  auto finite_or_null = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
  return Json{{"horizon", b.horizon},
              {"horizon_lower", b.horizon_lower},
              {"horizon_upper", b.horizon_upper},
              {"limit_lower", finite_or_null(b.limit_lower)},
              {"limit_upper", finite_or_null(b.limit_upper)},
              {"classification", FrameClassName(b.classification)}};
}

Json ProfileJson(const SymbolProfile &p) {
  return Json{{"inf_modulus", p.inf_modulus},
              {"sup_modulus", std::isfinite(p.sup_modulus) ? Json(p.sup_modulus) : Json(nullptr)},
              {"all_nonzero", p.all_nonzero},
              {"bounded", p.bounded()},
              {"semi_normalized", p.semi_normalized()}};
}

double MaxColumnError(const ComplexMatrix &a, const ComplexMatrix &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void RunBlockIdentity(Builder &out, const BlockSystem &sys, long horizon) {
  double worst = 0.0;
  const long b = sys.block_dim();
  for (long k = 1; k <= horizon; ++k)
    worst = std::max(worst, MaxColumnError(blockseq::BlockMultiplier(sys, k),
                                           ComplexMatrix::Identity(b, b)));
  out.CheckResidual("block_multiplier_is_identity_k1_to_" + std::to_string(horizon), worst,
                    kBlockIdentityTol);
}

void RunEx41(Builder &out, const BlockSystem &sys, const ToleranceConfig &tol) {
  const long horizon = blockseq::kDefaultHorizon;
  RunBlockIdentity(out, sys, horizon);

  SymbolProfile p = blockseq::ProfileSymbol(sys);
  out.Value("symbol_profile", ProfileJson(p));
  out.CheckExpect("symbol_bounded", p.bounded(), true);
  out.CheckExpect("symbol_semi_normalized", p.semi_normalized(), false);
  out.CheckExpect("symbol_all_nonzero", p.all_nonzero, true);

  SideBounds mphi = blockseq::SystemFrameBounds(sys, Side::kMPhi, horizon, tol);
  out.Value("m_phi_bounds", BoundsJson(mphi));
  out.Check("m_phi_horizon_bounds_within_1_3",
            mphi.horizon_lower > 1.0 && mphi.horizon_upper <= 3.0 &&
                mphi.horizon_lower <= mphi.horizon_upper);
  out.CheckExpect("m_phi_is_frame", mphi.classification == FrameClass::kFrame, true);
  SideBounds mbarpsi = blockseq::SystemFrameBounds(sys, Side::kMbarPsi, horizon, tol);
  out.Value("mbar_psi_bounds", BoundsJson(mbarpsi));
  out.CheckExpect("mbar_psi_is_frame", mbarpsi.classification == FrameClass::kFrame, true);

  // Writing M_{m,Phi,Psi} as M_{(1), m Phi, Psi} must give the same Psi-dagger.
  double pathway = 0.0;
  bool duals_ok = true;
  for (long k = 1; k <= horizon; ++k) {
    Multiplier direct = blockseq::BlockMultiplierObject(sys, k, tol);
    Multiplier via_ones =
        Multiplier::Build(Symbol::Constant(direct.count(), 1.0),
                          direct.phi().Weighted(direct.symbol().values()), direct.psi(), tol);
    InducedDuals a = multipliers::ComputeInducedDuals(direct);
    InducedDuals b = multipliers::ComputeInducedDuals(via_ones);
    pathway = std::max(pathway, MaxColumnError(a.psi_dagger.synthesis(), b.psi_dagger.synthesis()));
    duals_ok = duals_ok && frames::IsDual(a.psi_dagger, direct.psi(), tol) &&
               frames::IsDual(a.phi_dagger, direct.phi(), tol);
  }
  out.CheckResidual("unit_symbol_pathway_psi_dagger_matches", pathway, kDualTol);
  out.Check("block_induced_duals_are_duals", duals_ok);

  BlockTemplate t2 = sys.Block(2);
  out.Value("weighted_canonical_block_2",
            multipliers::CheckWeightedCanonical(FiniteFrame(t2.phi), Symbol(t2.m), tol));
}

void RunEx42(Builder &out, const InterleavedSystem &sys, const ToleranceConfig &tol) {
  bool certified = true;
  try {
    blockseq::CertifyRatio(sys);
  } catch (const Error &) {
    certified = false;
  }
  out.Check("ratio_bound_certified", certified);
  if (!certified) return;

  InterleavedResult e1 = blockseq::InterleavedApply(sys, {{sys.recurrent_index, 1.0}}, kInterleaveTol);
  const Complex coeff = e1.value.at(sys.recurrent_index);
  const Complex rho = sys.m.ratio * sys.phi.ratio * std::conj(sys.psi.ratio);
  const Complex closed_form = sys.Product(0) / (1.0 - rho);
  out.Value("e1_coefficient", json_io::ComplexToJson(coeff));
  out.Value("e1_terms", e1.terms);
  out.CheckResidual("e1_tail_bound", e1.error_bound, kInterleaveTol);
  out.CheckResidual("e1_matches_geometric_sum", std::abs(coeff - closed_form), kInterleaveTol);

  InterleavedResult e2 = blockseq::InterleavedApply(sys, {{2, 1.0}}, kInterleaveTol);
  out.Check("e2_maps_to_e2_exactly",
            e2.value.size() == 1 && e2.value.count(2) == 1 && e2.value.at(2) == Complex(1.0, 0.0) &&
                e2.error_bound == 0.0);

  if (std::abs(coeff - 1.0) > kInterleaveTol)
    out.Discrepancy("identity_claim", json_io::ComplexToJson(1.0), json_io::ComplexToJson(coeff),
                    "the multiplier is claimed to be the identity, but the e_1 coefficient "
                    "sums to 1 + sum_k 2^-k; M = Id + P_e1, which is still invertible");

  SymbolProfile p = blockseq::ProfileSymbol(sys);
  out.Value("symbol_profile", ProfileJson(p));
  out.CheckExpect("symbol_bounded", p.bounded(), false);
  for (Side side : {Side::kPhi, Side::kPsi, Side::kMPhi, Side::kMPsi}) {
    SideBounds b = blockseq::SystemFrameBounds(sys, side, 64, tol);
    out.Value(std::string(SideName(side)) + "_bounds", BoundsJson(b));
    const FrameClass expected = side == Side::kMPsi ? FrameClass::kNotBessel : FrameClass::kFrame;
    out.CheckExpect(std::string(SideName(side)) + "_is_" + FrameClassName(expected),
                    b.classification == expected, true);
  }
}

void RunEx53(Builder &out, const BlockSystem &sys, const ToleranceConfig &tol) {
  RunBlockIdentity(out, sys, blockseq::kDefaultHorizon);
  Multiplier M = blockseq::BlockMultiplierObject(sys, 1, tol);

  FiniteFrame phi_c = frames::CanonicalDual(M.phi(), tol);
  FiniteFrame psi_c = frames::CanonicalDual(M.psi(), tol);
  out.CheckResidual("canonical_dual_phi_is_third",
                    MaxColumnError(phi_c.synthesis(), M.phi().synthesis() / 3.0), kDualTol);
  out.CheckResidual("canonical_dual_psi_is_third",
                    MaxColumnError(psi_c.synthesis(), M.psi().synthesis() / 3.0), kDualTol);
  out.CheckResidual("canonical_dual_inversion", multipliers::VerifyCanonicalInversion(M), kDualTol);

  const bool psi_eq = static_cast<bool>(
      frames::EquivalenceOperator(M.phi().Weighted(M.symbol().values()), M.psi(), tol));
  const bool phi_eq = static_cast<bool>(
      frames::EquivalenceOperator(M.psi().Weighted(M.symbol().values().conjugate()), M.phi(), tol));
  out.CheckExpect("psi_equivalent_to_m_phi", psi_eq, false);
  out.CheckExpect("phi_equivalent_to_mbar_psi", phi_eq, false);

  PropQReport q = multipliers::CheckPropQ(M);
  out.Value("eq1_holds", q.eq1_holds);
  out.CheckExpect("psi_dagger_is_canonical", q.psi_dagger_is_canonical, false);
  out.CheckExpect("phi_dagger_is_canonical", q.phi_dagger_is_canonical, false);

  InducedDuals duals = multipliers::ComputeInducedDuals(M);
  out.CheckResidual("psi_dagger_equals_m_phi",
                    MaxColumnError(duals.psi_dagger.synthesis(),
                                   M.phi().Weighted(M.symbol().values()).synthesis()),
                    kDualTol);
  DualCertificate cert = multipliers::CertifyAllDuals(M);
  out.CheckResidual("inverse_via_psi_duals_all", cert.max_residual_minv1, tol.rel_eps);
  out.CheckResidual("inverse_via_phi_duals_all", cert.max_residual_minv2, tol.rel_eps);

  out.CheckExpect("weighted_canonical",
                  multipliers::CheckWeightedCanonical(M.phi(), M.symbol(), tol), false);

  SymbolProfile p = blockseq::ProfileSymbol(sys);
  out.Value("symbol_profile", ProfileJson(p));
  out.CheckExpect("symbol_semi_normalized", p.semi_normalized(), true);
  const double s5 = std::sqrt(5.0);
  out.CheckResidual("symbol_inf_modulus", std::abs(p.inf_modulus - (5 - 2 * s5) / 5), kDualTol);
  out.CheckResidual("symbol_sup_modulus", std::abs(p.sup_modulus - (5 + 2 * s5) / 5), kDualTol);
}

void RunEx5Final(Builder &out, const BlockSystem &sys, const ToleranceConfig &tol) {
  Multiplier M = blockseq::BlockMultiplierObject(sys, 1, tol);
  out.Value("block_multiplier", json_io::MatrixToJson(M.matrix()));
  out.CheckResidual("block_multiplier_is_2",
                    MaxColumnError(M.matrix(), ComplexMatrix::Constant(1, 1, 2.0)), kBlockIdentityTol);
  out.Check("psi_equals_m_phi",
            frames::SameSequence(M.phi().Weighted(M.symbol().values()), M.psi(), tol));
  out.Check("phi_equals_mbar_psi",
            frames::SameSequence(M.psi().Weighted(M.symbol().values().conjugate()), M.phi(), tol));
  ConstantModulusReport c = multipliers::CheckConstantModulus(M);
  out.CheckExpect("invertible_and_eq1", c.invertible_and_eq1, true);
  out.CheckExpect("psi_equivalent_to_m_phi", c.psi_equiv_mphi, true);
  out.CheckExpect("phi_equivalent_to_mbar_psi", c.phi_equiv_mbar_psi, true);
  PropQReport q = multipliers::CheckPropQ(M);
  out.CheckExpect("psi_dagger_is_canonical", q.psi_dagger_is_canonical, true);
  out.CheckExpect("phi_dagger_is_canonical", q.phi_dagger_is_canonical, true);
}

}  // namespace

Builder::Builder(std::string command, const ToleranceConfig &tol) {
  report_["command"] = std::move(command);
  report_["inputs"] = Json{{"sha256", Json::object()}, {"params", Json::object()}};
  report_["findings"] =
      Json{{"checks", Json::object()}, {"values", Json::object()}, {"discrepancies", Json::object()}};
  report_["tolerances"] = Json{{"rel_eps", tol.rel_eps}, {"cond_max", tol.cond_max}};
}

void Builder::Input(const std::string &name, const std::string &bytes) {
  report_["inputs"]["sha256"][name] = Sha256Hex(bytes);
}

void Builder::Param(const std::string &name, Json value) {
  report_["inputs"]["params"][name] = std::move(value);
}

bool Builder::Check(const std::string &name, bool pass) {
  report_["findings"]["checks"][name] = Json{{"pass", pass}};
  failed_ = failed_ || !pass;
  return pass;
}

bool Builder::CheckResidual(const std::string &name, double residual, double tolerance) {
  const bool pass = residual <= tolerance;
  report_["findings"]["checks"][name] =
      Json{{"pass", pass}, {"residual", residual}, {"tolerance", tolerance}};
  failed_ = failed_ || !pass;
  return pass;
}

bool Builder::CheckExpect(const std::string &name, bool actual, bool expected) {
  const bool pass = actual == expected;
  report_["findings"]["checks"][name] =
      Json{{"pass", pass}, {"actual", actual}, {"expected", expected}};
  failed_ = failed_ || !pass;
  return pass;
}

void Builder::Value(const std::string &name, Json value) {
  report_["findings"]["values"][name] = std::move(value);
}

void Builder::Discrepancy(const std::string &name, Json claimed, Json computed,
                          const std::string &note) {
  report_["findings"]["discrepancies"][name] =
      Json{{"claimed", std::move(claimed)}, {"computed", std::move(computed)}, {"note", note}};
  flagged_ = true;
}

Json Builder::Finish() const {
  Json out = report_;
  out["verdict"] = failed_ ? "fail" : (flagged_ ? "flagged" : "pass");
  return out;
}

Json FrameInfo(const std::string &frame_text, const ToleranceConfig &tol,
               std::optional<Json> *canonical_dual) {
  tol.Validate();
  FiniteFrame phi = json_io::FrameFromJson(json_io::Parse(frame_text));
  Builder out("frame-info", tol);
  out.Input("frame", frame_text);
  out.Value("dim", phi.dim());
  out.Value("count", phi.count());
  out.Value("riesz_basis", frames::IsRieszBasis(phi, tol));
  try {
    FrameBounds b = frames::Bounds(phi, tol);
    out.Value("is_frame", true);
    out.Value("frame_bounds", Json{{"lower", b.lower}, {"upper", b.upper}});
    FiniteFrame dual = frames::CanonicalDual(phi, tol);
    out.Check("canonical_dual_is_dual", frames::IsDual(dual, phi, tol));
    const long d = phi.dim();
    out.CheckResidual("canonical_reconstruction",
                      (dual.synthesis() * phi.analysis_matrix() - ComplexMatrix::Identity(d, d)).norm() /
                          std::sqrt(static_cast<double>(d)),
                      tol.rel_eps);
    if (canonical_dual) *canonical_dual = json_io::FrameToJson(dual);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kNotAFrame) throw;
    out.Value("is_frame", false);
    out.Value("frame_bounds", nullptr);
    out.Value("not_a_frame", e.what());
  }
  return out.Finish();
}

Json MultiplierRun(const std::string &symbol_text, const std::string &phi_text,
                   const std::string &psi_text, const MultiplierFlags &flags,
                   const ToleranceConfig &tol, std::optional<std::uint64_t> seed) {
  tol.Validate();
  if (flags.verify_all && !seed)
    throw Error(ErrorCode::kInvalidArgument, "--verify-all samples dual frames; pass --seed");
  Symbol m = json_io::SymbolFromJson(json_io::Parse(symbol_text));
  FiniteFrame phi = json_io::FrameFromJson(json_io::Parse(phi_text));
  FiniteFrame psi = json_io::FrameFromJson(json_io::Parse(psi_text));
  Multiplier M = Multiplier::Build(m, phi, psi, tol);
  if (flags.induced_duals || flags.verify_all) m.Reciprocal();  // ZeroSymbolEntry is an input error

  Builder out("multiplier", tol);
  out.Input("symbol", symbol_text);
  out.Input("phi", phi_text);
  out.Input("psi", psi_text);
  out.Param("invert", flags.invert);
  out.Param("induced_duals", flags.induced_duals);
  out.Param("verify_all", flags.verify_all);
  out.Param("expect_invertible", flags.expect_invertible);
  out.Param("seed", seed ? Json(*seed) : Json(nullptr));

  out.Value("dim", M.dim());
  out.Value("count", M.count());
  out.Value("symbol", Json{{"all_nonzero", m.all_nonzero()},
                           {"inf_modulus", m.inf_modulus()},
                           {"sup_modulus", m.sup_modulus()},
                           {"semi_normalized", m.semi_normalized()},
                           {"constant_modulus", m.constant_modulus(tol)}});
  const bool frames_ok = frames::IsFrame(phi, tol) && frames::IsFrame(psi, tol);
  out.Value("phi_is_frame", frames::IsFrame(phi, tol));
  out.Value("psi_is_frame", frames::IsFrame(psi, tol));
  out.Value("matrix", json_io::MatrixToJson(M.matrix()));
  out.Value("invertible", M.invertible());
  out.Value("sigma_ratio", M.sigma_ratio());
  if (flags.expect_invertible) out.Check("invertible", M.invertible());
  if (!M.invertible()) out.Value("not_invertible", "sigma_min/sigma_max below 1/cond_max");

  const double cond = numerics::ConditionNumber(M.matrix());
  if ((flags.invert || flags.verify_all) && M.invertible()) {
    const long d = M.dim();
    out.Value("inverse", json_io::MatrixToJson(M.inverse()));
    out.CheckResidual("inverse_residual",
                      (M.matrix() * M.inverse() - ComplexMatrix::Identity(d, d)).norm() /
                          std::sqrt(static_cast<double>(d)),
                      tol.rel_eps * cond);
  }
  if ((flags.induced_duals || flags.verify_all) && M.invertible()) {
    InducedDuals duals = multipliers::ComputeInducedDuals(M);
    out.Value("psi_dagger", json_io::FrameToJson(duals.psi_dagger));
    out.Value("phi_dagger", json_io::FrameToJson(duals.phi_dagger));
    if (frames_ok) {
      out.Check("psi_dagger_is_dual_of_psi", frames::IsDual(duals.psi_dagger, psi, tol));
      out.Check("phi_dagger_is_dual_of_phi", frames::IsDual(duals.phi_dagger, phi, tol));
      // A Riesz basis has exactly one dual, so both daggers must be canonical.
      if (frames::IsRieszBasis(phi, tol) && frames::IsRieszBasis(psi, tol)) {
        out.Check("riesz_psi_dagger_is_canonical",
                  frames::SameSequence(duals.psi_dagger, frames::CanonicalDual(psi, tol), tol));
        out.Check("riesz_phi_dagger_is_canonical",
                  frames::SameSequence(duals.phi_dagger, frames::CanonicalDual(phi, tol), tol));
      }
    }
  }
  if (flags.verify_all && frames_ok) {
    if (M.invertible()) {
      DualCertificate cert = multipliers::CertifyAllDuals(M);
      out.Value("dual_family_points", cert.points);
      out.CheckResidual("inverse_via_psi_duals_all", cert.max_residual_minv1, tol.rel_eps);
      out.CheckResidual("inverse_via_phi_duals_all", cert.max_residual_minv2, tol.rel_eps);

      const long samples = M.count() + 1;
      out.Param("dual_samples", samples);
      const long k_phi = multipliers::UniquenessKernel(M, DaggerSide::kPhiDagger, samples, *seed);
      const long k_psi = multipliers::UniquenessKernel(M, DaggerSide::kPsiDagger, samples, *seed);
      out.Value("uniqueness_kernel_phi_dagger", k_phi);
      out.Value("uniqueness_kernel_psi_dagger", k_psi);
      out.Check("phi_dagger_unique", k_phi == 0);
      out.Check("psi_dagger_unique", k_psi == 0);

      const double eq1 = multipliers::VerifyCanonicalInversion(M);
      out.Value("eq1_residual", eq1);
      try {
        PropQReport q = multipliers::CheckPropQ(M);
        out.Value("eq1_holds", q.eq1_holds);
        out.Value("psi_equiv_mphi", q.psi_equiv_mphi);
        out.Value("phi_equiv_mbar_psi", q.phi_equiv_mbar_psi);
        out.Value("psi_dagger_is_canonical", q.psi_dagger_is_canonical);
        out.Value("phi_dagger_is_canonical", q.phi_dagger_is_canonical);
        out.Check("equivalence_implications_consistent", true);
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kImplicationViolated) throw;
        out.Value("implication_violated", e.what());
        out.Check("equivalence_implications_consistent", false);
      }
    }
    out.Value("weighted_canonical_phi", multipliers::CheckWeightedCanonical(phi, m, tol));
    out.Value("weighted_canonical_psi",
              multipliers::CheckWeightedCanonical(psi, m.Conjugate(), tol));
    try {
      WeightedChainReport w = multipliers::CheckWeightedChain(M);
      out.Value("weighted_chain_phi_side_applies", w.phi_side_applies);
      out.Value("weighted_chain_psi_side_applies", w.psi_side_applies);
      out.Check("weighted_chain_consistent", true);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kImplicationViolated) throw;
      out.Check("weighted_chain_consistent", false);
    }
    if (m.constant_modulus(tol)) {
      try {
        ConstantModulusReport c = multipliers::CheckConstantModulus(M);
        out.Value("constant_modulus",
                  Json{{"modulus", c.modulus},
                       {"invertible_and_eq1", c.invertible_and_eq1},
                       {"psi_equiv_mphi", c.psi_equiv_mphi},
                       {"phi_equiv_mbar_psi", c.phi_equiv_mbar_psi}});
        out.Check("constant_modulus_consistent", true);
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kImplicationViolated) throw;
        out.Check("constant_modulus_consistent", false);
      }
    }
  } else if (flags.verify_all) {
    out.Value("verify_all_skipped", "Phi and Psi must both be frames");
  }
  return out.Finish();
}

Json ExampleRun(const std::string &name, const ToleranceConfig &tol) {
  tol.Validate();
  ExampleEntry entry = blockseq::FindExample(name);
  Builder out("examples", tol);
  out.Param("name", entry.name);
  out.Input("system", json_io::SystemToJson(entry.system).dump());
  out.Value("title", entry.title);
  out.Value("annotations", entry.annotations);
  if (name == "ex4_1") RunEx41(out, std::get<BlockSystem>(entry.system), tol);
  else if (name == "ex4_2") RunEx42(out, std::get<InterleavedSystem>(entry.system), tol);
  else if (name == "ex5_3") RunEx53(out, std::get<BlockSystem>(entry.system), tol);
  else if (name == "ex5_final") RunEx5Final(out, std::get<BlockSystem>(entry.system), tol);
  return out.Finish();
}

std::string RenderPretty(const Json &report) {
  std::ostringstream s;
  s << report.value("command", "?") << ": " << report.value("verdict", "?") << "\n";
  const Json &findings = report.at("findings");
  if (!findings.at("checks").empty()) {
    s << "checks:\n";
    for (const auto &[name, c] : findings.at("checks").items()) {
      s << "  [" << (c.value("pass", false) ? " ok " : "FAIL") << "] " << name;
      if (c.contains("residual"))
        s << "  residual=" << c["residual"].get<double>()
          << " tol=" << c["tolerance"].get<double>();
      if (c.contains("expected"))
        s << "  actual=" << c["actual"].dump() << " expected=" << c["expected"].dump();
      s << "\n";
    }
  }
  if (!findings.at("values").empty()) {
    s << "values:\n";
    for (const auto &[name, v] : findings.at("values").items()) s << "  " << name << ": " << v.dump() << "\n";
  }
  if (!findings.at("discrepancies").empty()) {
    s << "discrepancies:\n";
    for (const auto &[name, d] : findings.at("discrepancies").items())
      s << "  " << name << ": claimed " << d["claimed"].dump() << ", computed "
        << d["computed"].dump() << "\n    " << d["note"].get<std::string>() << "\n";
  }
  const Json &tol = report.at("tolerances");
  s << "tolerances: rel_eps=" << tol["rel_eps"].get<double>()
    << " cond_max=" << tol["cond_max"].get<double>() << "\n";
  return s.str();
}

}  // namespace report
}  // namespace framemult
