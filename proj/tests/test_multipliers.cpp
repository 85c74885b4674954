// tests/test_multipliers.cpp

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

#include <doctest.h>

#include "framemult/error.hpp"
#include "support.hpp"

using namespace fmtest;

namespace {

ErrorCode CodeOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

Multiplier RieszDiag23() {
  return Multiplier::Build(Symbol(Vec({2.0, 3.0})), FiniteFrame::OrthonormalBasis(2),
                           FiniteFrame::OrthonormalBasis(2));
}

// Invertible multiplier on random well-conditioned frames.
Multiplier RandomInvertible(std::mt19937_64 &rng, long d, long n) {
  for (;;) {
    FiniteFrame phi = RandomConditionedFrame(d, n, rng);
    FiniteFrame psi = RandomConditionedFrame(d, n, rng);
    Multiplier M = Multiplier::Build(Symbol(RandomSymbolValues(n, rng)), phi, psi);
    if (M.invertible() && Cond(M.matrix()) < 1e4) return M;
  }
}

}  // namespace

TEST_CASE("build examples") {
  Multiplier id = Multiplier::Build(Symbol::Constant(3, 1.0), FiniteFrame::OrthonormalBasis(3),
                                    FiniteFrame::OrthonormalBasis(3));
  CHECK(MaxAbs(id.matrix() - ComplexMatrix::Identity(3, 3)) < 1e-15);
  CHECK(MaxAbs(CounterexampleBlock().matrix() - Mat({{1.0}})) < 1e-14);
  for (long k : {1L, 2L, 7L, 1000L}) {
    const double inv = 1.0 / static_cast<double>(k);
    Multiplier M = Multiplier::Build(Symbol(Vec({1.0, inv, inv})), FiniteFrame(Row({1.0, 1.0, -1.0})),
                                     FiniteFrame(Row({1.0, inv, inv})));
    CHECK(std::abs(M.matrix()(0, 0) - 1.0) < 1e-14);
  }
  CHECK(CodeOf([] {
          Multiplier::Build(Symbol(Vec({1.0, 1.0})), FiniteFrame::OrthonormalBasis(2),
                            FiniteFrame::OrthonormalBasis(3));
        }) == ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([] {
          Multiplier::Build(Symbol(Vec({1.0})), FiniteFrame::OrthonormalBasis(2),
                            FiniteFrame::OrthonormalBasis(2));
        }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("invert examples") {
  Multiplier id = Multiplier::Build(Symbol::Constant(2, 1.0), FiniteFrame::OrthonormalBasis(2),
                                    FiniteFrame::OrthonormalBasis(2));
  CHECK(MaxAbs(multipliers::Invert(id) - ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(MaxAbs(multipliers::Invert(RieszDiag23()) - Mat({{0.5, 0.0}, {0.0, 1.0 / 3}})) < 1e-15);
  Multiplier singular = Multiplier::Build(Symbol(Vec({1.0, 0.0})), FiniteFrame::OrthonormalBasis(2),
                                          FiniteFrame::OrthonormalBasis(2));
  CHECK_FALSE(singular.invertible());
  CHECK_THROWS_AS(multipliers::Invert(singular), NotInvertibleError);
}

TEST_CASE("symbol predicates") {
  Symbol m(Vec({Complex(0, 2), -2.0, 2.0}));
  CHECK(m.constant_modulus());
  CHECK_FALSE(m.constant());
  CHECK(Symbol::Constant(4, Complex(1, 1)).constant());
  CHECK(m.sup_modulus() == doctest::Approx(2.0));
  CHECK(m.Reciprocal()[0] == Complex(0, -0.5));
  CHECK(m.Conjugate()[0] == Complex(0, -2));
  Symbol z(Vec({1.0, 0.0}));
  CHECK_FALSE(z.all_nonzero());
  CHECK_FALSE(z.semi_normalized());
  CHECK(CodeOf([&] { z.Reciprocal(); }) == ErrorCode::kZeroSymbolEntry);
}

TEST_CASE("induced duals examples") {
  Multiplier block = CounterexampleBlock();
  InducedDuals d = multipliers::ComputeInducedDuals(block);
  CHECK(frames::SameSequence(d.psi_dagger, block.phi().Weighted(block.symbol().values())));
  Complex sum = 0.0;
  for (long n = 0; n < 3; ++n) sum += d.psi_dagger.vector(n)(0) * std::conj(block.psi().vector(n)(0));
  CHECK(std::abs(sum - 1.0) < 1e-14);

  InducedDuals r = multipliers::ComputeInducedDuals(RieszDiag23());
  CHECK(frames::SameSequence(r.psi_dagger, FiniteFrame::OrthonormalBasis(2)));
  CHECK(frames::SameSequence(r.phi_dagger, FiniteFrame::OrthonormalBasis(2)));

  std::mt19937_64 rng(41);
  FiniteFrame phi = RandomConditionedFrame(3, 6, rng);
  InducedDuals s = multipliers::ComputeInducedDuals(Multiplier::Build(Symbol::Constant(6, 1.0), phi, phi));
  CHECK(frames::SameSequence(s.psi_dagger, frames::CanonicalDual(phi)));
  CHECK(frames::SameSequence(s.phi_dagger, frames::CanonicalDual(phi)));

  Multiplier zero_entry = Multiplier::Build(Symbol(Vec({1.0, 0.0, 1.0})), FiniteFrame(Row({1.0, 1.0, 1.0})),
                                            FiniteFrame(Row({1.0, 1.0, 1.0})));
  CHECK(CodeOf([&] { multipliers::ComputeInducedDuals(zero_entry); }) == ErrorCode::kZeroSymbolEntry);
  Multiplier singular = Multiplier::Build(Symbol(Vec({1.0, -1.0})), FiniteFrame(Row({1.0, 1.0})),
                                          FiniteFrame(Row({1.0, 1.0})));
  CHECK(CodeOf([&] { multipliers::ComputeInducedDuals(singular); }) == ErrorCode::kNotInvertible);
}

TEST_CASE("reciprocal-symbol identities with single duals") {
  Multiplier block = CounterexampleBlock();
  std::mt19937_64 rng(42);
  CHECK(multipliers::VerifyIdentityMinv1(block, frames::CanonicalDual(block.psi())) < 1e-12);
  CHECK(multipliers::VerifyIdentityMinv2(block, frames::CanonicalDual(block.phi())) < 1e-12);
  for (int i = 0; i < 100; ++i) {
    FiniteFrame psi_d = frames::DualFamily({block.psi(), frames::RandomPerturbation(block.psi(), rng)});
    FiniteFrame phi_d = frames::DualFamily({block.phi(), frames::RandomPerturbation(block.phi(), rng)});
    CHECK(multipliers::VerifyIdentityMinv1(block, psi_d) < 1e-12);
    CHECK(multipliers::VerifyIdentityMinv2(block, phi_d) < 1e-12);
  }
  // Phi-dagger replaced by the canonical dual of Phi: eq. holds in this block.
  ComplexMatrix minv = block.inverse();
  ComplexMatrix with_canonical = multipliers::MultiplierMatrix(
      block.symbol().Reciprocal().values(), frames::CanonicalDual(block.psi()),
      frames::CanonicalDual(block.phi()));
  CHECK(MaxAbs(with_canonical - minv) < 1e-12);

  Multiplier riesz = RieszDiag23();
  CHECK(multipliers::VerifyIdentityMinv1(riesz, frames::CanonicalDual(riesz.psi())) < 1e-14);
  CHECK(multipliers::VerifyIdentityMinv2(riesz, frames::CanonicalDual(riesz.phi())) < 1e-14);

  CHECK(CodeOf([&] { multipliers::VerifyIdentityMinv1(block, FiniteFrame(Row({1.0, 0.0, 0.5}))); }) ==
        ErrorCode::kNotADual);
  CHECK(CodeOf([&] { multipliers::VerifyIdentityMinv2(block, FiniteFrame(Row({1.0, 0.0, 0.5}))); }) ==
        ErrorCode::kNotADual);
}

TEST_CASE("corrupting psi-dagger breaks the identity") {
  std::mt19937_64 rng(43);
  Multiplier M = RandomInvertible(rng, 3, 6);
  InducedDuals d = multipliers::ComputeInducedDuals(M);
  ComplexMatrix corrupted = d.psi_dagger.synthesis();
  corrupted(0, 2) += 1e-6;
  FiniteFrame phi_d = frames::CanonicalDual(M.phi());
  ComplexMatrix rebuilt =
      multipliers::MultiplierMatrix(M.symbol().Reciprocal().values(), FiniteFrame(corrupted), phi_d);
  const double residual = numerics::RelativeResidual(rebuilt, M.inverse(), numerics::Norm(M.inverse()));
  CHECK(residual > 10 * M.tolerance().rel_eps);
  CHECK(multipliers::VerifyIdentityMinv2(M, phi_d) <= M.tolerance().rel_eps);
}

TEST_CASE("uniqueness kernel examples") {
  Multiplier riesz = RieszDiag23();
  CHECK(multipliers::UniquenessKernel(riesz, DaggerSide::kPhiDagger, 3, 1) == 0);
  CHECK(multipliers::UniquenessKernel(riesz, DaggerSide::kPsiDagger, 3, 1) == 0);
  Multiplier block = CounterexampleBlock();
  CHECK(multipliers::UniquenessKernel(block, DaggerSide::kPhiDagger, 6, 7) == 0);
  CHECK(multipliers::UniquenessKernel(block, DaggerSide::kPsiDagger, 6, 7) == 0);
  // One dual alone pins only d of the d*N unknowns.
  CHECK(multipliers::UniquenessKernel(block, DaggerSide::kPhiDagger, 1, 7) == 2);
  CHECK(multipliers::UniquenessKernel(block, DaggerSide::kPsiDagger, 1, 7) == 2);
  Multiplier singular = Multiplier::Build(Symbol(Vec({1.0, -1.0})), FiniteFrame(Row({1.0, 1.0})),
                                          FiniteFrame(Row({1.0, 1.0})));
  CHECK_THROWS_AS(multipliers::UniquenessKernel(singular, DaggerSide::kPhiDagger, 3, 1), NotInvertibleError);
}

TEST_CASE("null multiplier kernel on an orthonormal basis") {
  ToleranceConfig tol;
  std::vector<FiniteFrame> duals{FiniteFrame::OrthonormalBasis(2)};
  CHECK(multipliers::NullMultiplierKernel(Vec({1.0, 1.0}), duals, multipliers::UnknownSlot::kSynthesis, tol) == 0);
  CHECK(multipliers::NullMultiplierKernel(Vec({1.0, 0.0}), duals, multipliers::UnknownSlot::kSynthesis, tol) == 2);
}

TEST_CASE("sampled duals start with the canonical dual and are reproducible") {
  std::mt19937_64 rng(44);
  FiniteFrame phi = RandomConditionedFrame(2, 5, rng);
  ToleranceConfig tol;
  auto a = multipliers::SampleDuals(phi, 4, 99, tol);
  auto b = multipliers::SampleDuals(phi, 4, 99, tol);
  REQUIRE(a.size() == 4);
  CHECK(frames::SameSequence(a[0], frames::CanonicalDual(phi)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].synthesis() == b[i].synthesis());
    CHECK(frames::IsDual(a[i], phi));
  }
}

TEST_CASE("pseudo-dual recovery") {
  Multiplier block = CounterexampleBlock();
  InducedDuals d = multipliers::ComputeInducedDuals(block);
  CHECK(multipliers::RecoverPseudoDualF(block, d.psi_dagger));
  CHECK(multipliers::RecoverPseudoDualF(block, frames::CanonicalDual(block.psi())));
  CHECK(multipliers::RecoverPseudoDualG(block, d.phi_dagger));
  CHECK(multipliers::RecoverPseudoDualG(block, frames::CanonicalDual(block.phi())));
  ComplexMatrix bad = d.psi_dagger.synthesis();
  bad(0, 0) += 0.25;
  CHECK(CodeOf([&] { multipliers::RecoverPseudoDualF(block, FiniteFrame(bad)); }) ==
        ErrorCode::kIdentityDoesNotHold);
  bad = d.phi_dagger.synthesis();
  bad(0, 1) -= 0.25;
  CHECK(CodeOf([&] { multipliers::RecoverPseudoDualG(block, FiniteFrame(bad)); }) ==
        ErrorCode::kIdentityDoesNotHold);
}

TEST_CASE("canonical inversion examples") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 20; ++i) {
    const long d = UniformInt(rng, 1, 6);
    Multiplier M = Multiplier::Build(Symbol(RandomSymbolValues(d, rng)), RandomRieszBasis(d, rng),
                                     RandomRieszBasis(d, rng));
    CHECK(multipliers::VerifyCanonicalInversion(M) < 1e-10);
  }
  CHECK(multipliers::VerifyCanonicalInversion(CounterexampleBlock()) < 1e-12);
  // d = 1, Phi = Psi = (1, 1), m = (1, 2): M = 3 but the canonical formula gives 3/8.
  Multiplier redundant = Multiplier::Build(Symbol(Vec({1.0, 2.0})), FiniteFrame(Row({1.0, 1.0})),
                                           FiniteFrame(Row({1.0, 1.0})));
  CHECK(std::abs(redundant.matrix()(0, 0) - 3.0) < 1e-15);
  const double expected = std::abs(3.0 / 8 - 1.0 / 3) / (1.0 / 3);
  CHECK(multipliers::VerifyCanonicalInversion(redundant) == doctest::Approx(expected));
}

TEST_CASE("equivalence and canonical-dual report") {
  std::mt19937_64 rng(46);
  FiniteFrame phi = RandomConditionedFrame(3, 7, rng);
  PropQReport c = multipliers::CheckPropQ(Multiplier::Build(Symbol::Constant(7, Complex(0.5, 1.5)), phi, phi));
  CHECK(c.constant_symbol);
  CHECK(c.eq1_holds);
  CHECK(c.psi_equiv_mphi);
  CHECK(c.phi_equiv_mbar_psi);
  CHECK(c.psi_dagger_is_canonical);
  CHECK(c.phi_dagger_is_canonical);

  PropQReport b = multipliers::CheckPropQ(CounterexampleBlock());
  CHECK(b.eq1_holds);
  CHECK_FALSE(b.psi_equiv_mphi);
  CHECK_FALSE(b.phi_equiv_mbar_psi);
  CHECK_FALSE(b.psi_dagger_is_canonical);
  CHECK_FALSE(b.phi_dagger_is_canonical);

  PropQReport s = multipliers::CheckPropQ(Multiplier::Build(Symbol(Vec({1.0, -1.0})), FiniteFrame(Row({1.0, 1.0})),
                                                            FiniteFrame(Row({1.0, -1.0}))));
  CHECK(s.psi_equiv_mphi);
  CHECK(s.eq1_holds);
}

TEST_CASE("weighted canonical duals") {
  std::mt19937_64 rng(47);
  FiniteFrame phi = RandomConditionedFrame(3, 6, rng);
  ComplexVector unimodular(6);
  for (long n = 0; n < 6; ++n) unimodular(n) = std::polar(1.7, Uniform(rng, -3.0, 3.0));
  CHECK(multipliers::CheckWeightedCanonical(phi, Symbol(unimodular)));
  CHECK(multipliers::CheckWeightedCanonical(phi, Symbol::Constant(6, 1.0)));
  Multiplier block = CounterexampleBlock();
  CHECK_FALSE(multipliers::CheckWeightedCanonical(block.phi(), block.symbol()));
  // The weighted frame operator of the block is 23/5.
  CHECK(frames::FrameOperator(block.phi().Weighted(block.symbol().values()))(0, 0).real() ==
        doctest::Approx(23.0 / 5));
}

TEST_CASE("constant modulus characterization") {
  ConstantModulusReport yes = multipliers::CheckConstantModulus(Multiplier::Build(
      Symbol(Vec({1.0, -1.0})), FiniteFrame(Row({1.0, 1.0})), FiniteFrame(Row({1.0, -1.0}))));
  CHECK(yes.invertible_and_eq1);
  CHECK(yes.psi_equiv_mphi);
  CHECK(yes.phi_equiv_mbar_psi);

  Multiplier zero = Multiplier::Build(Symbol(Vec({1.0, -1.0})), FiniteFrame(Row({1.0, 1.0})),
                                      FiniteFrame(Row({1.0, 1.0})));
  CHECK(MaxAbs(zero.matrix()) == 0.0);
  ConstantModulusReport no = multipliers::CheckConstantModulus(zero);
  CHECK_FALSE(no.invertible_and_eq1);
  CHECK_FALSE(no.psi_equiv_mphi);
  CHECK_FALSE(no.phi_equiv_mbar_psi);

  ConstantModulusReport onb = multipliers::CheckConstantModulus(Multiplier::Build(
      Symbol::Constant(3, 2.5), FiniteFrame::OrthonormalBasis(3), FiniteFrame::OrthonormalBasis(3)));
  CHECK(onb.invertible_and_eq1);
  CHECK(onb.psi_equiv_mphi);
  CHECK(onb.phi_equiv_mbar_psi);

  CHECK(CodeOf([] { multipliers::CheckConstantModulus(CounterexampleBlock()); }) ==
        ErrorCode::kPreconditionFailed);
}

TEST_CASE("property: matrix action matches the term-by-term sum") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const long d = UniformInt(rng, 1, 8), n = UniformInt(rng, 1, 24);
    ComplexVector m = RandomMatrix(n, 1, rng).col(0);
    FiniteFrame phi = RandomFrame(d, n, rng), psi = RandomFrame(d, n, rng);
    Multiplier M = Multiplier::Build(Symbol(m), phi, psi);
    ComplexVector f = RandomVector(d, rng);
    ComplexVector oracle = BruteForceApply(m, phi.synthesis(), psi.synthesis(), f);
    CHECK((M.Apply(f) - oracle).norm() <= 1e-9 * std::max(oracle.norm(), 1e-300) + 1e-13);
  }
}

TEST_CASE("property: adjoint law") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 6), n = UniformInt(rng, 1, 12);
    ComplexVector m = RandomMatrix(n, 1, rng).col(0);
    FiniteFrame phi = RandomFrame(d, n, rng), psi = RandomFrame(d, n, rng);
    ComplexMatrix a = Multiplier::Build(Symbol(m), phi, psi).matrix().adjoint();
    ComplexMatrix b = Multiplier::Build(Symbol(m.conjugate()), psi, phi).matrix();
    CHECK(numerics::Norm(a - b) <= 1e-14 * (1.0 + numerics::Norm(a)));
  }
}

TEST_CASE("property: induced duals and inversion identities over sampled duals") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Multiplier M = RandomInvertible(rng, UniformInt(rng, 1, 5), UniformInt(rng, 5, 10));
    InducedDuals d = multipliers::ComputeInducedDuals(M);
    CHECK(frames::IsDual(d.psi_dagger, M.psi()));
    CHECK(frames::IsDual(d.phi_dagger, M.phi()));
    const double eps = M.tolerance().rel_eps;
    CHECK(multipliers::VerifyIdentityMinv1(M, frames::CanonicalDual(M.psi())) <= eps);
    CHECK(multipliers::VerifyIdentityMinv2(M, frames::CanonicalDual(M.phi())) <= eps);
    for (int i = 0; i < 100; ++i) {
      FiniteFrame psi_d = frames::DualFamily({M.psi(), frames::RandomPerturbation(M.psi(), rng)});
      FiniteFrame phi_d = frames::DualFamily({M.phi(), frames::RandomPerturbation(M.phi(), rng)});
      CHECK(multipliers::VerifyIdentityMinv1(M, psi_d) <= eps);
      CHECK(multipliers::VerifyIdentityMinv2(M, phi_d) <= eps);
    }
  }
}

TEST_CASE("property: equivalence implies invertibility") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 5), n = UniformInt(rng, d, 10);
    FiniteFrame phi = RandomConditionedFrame(d, n, rng);
    ComplexVector m = RandomSymbolValues(n, rng);
    FiniteFrame psi(RandomWellConditioned(d, rng) * phi.synthesis() * m.asDiagonal());
    Multiplier M = Multiplier::Build(Symbol(m), phi, psi);
    REQUIRE(frames::EquivalenceOperator(phi.Weighted(m), psi));
    CHECK(M.invertible());
  }
}

TEST_CASE("property: full column rank of sampled analysis matrices gives kernel 0") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    Multiplier M = RandomInvertible(rng, UniformInt(rng, 1, 4), UniformInt(rng, 4, 8));
    const long samples = M.count() + 1;
    auto duals = multipliers::SampleDuals(M.phi(), samples, 1000 + trial, M.tolerance());
    // Rows of the stacked synthesis matrices span the analysis ranges jointly.
    ComplexMatrix stacked(M.dim() * samples, M.count());
    for (long s = 0; s < samples; ++s)
      stacked.middleRows(s * M.dim(), M.dim()) = duals[static_cast<std::size_t>(s)].synthesis();
    if (numerics::Rank(stacked, M.tolerance()) == M.count())
      CHECK(multipliers::UniquenessKernel(M, DaggerSide::kPsiDagger, samples, 1000 + trial) == 0);
  }
}

TEST_CASE("property: report implications never contradict on random instances") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 500; ++trial) {
    const long d = UniformInt(rng, 1, 4), n = UniformInt(rng, d, 8);
    Multiplier M = Multiplier::Build(Symbol(RandomSymbolValues(n, rng)), RandomConditionedFrame(d, n, rng),
                                     RandomConditionedFrame(d, n, rng));
    if (!M.invertible()) continue;
    CHECK_NOTHROW(multipliers::CheckPropQ(M));
    CHECK_NOTHROW(multipliers::CheckWeightedChain(M));
  }
}
