// tests/test_frames.cpp

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

// {(1,0), (0,1), (1,1)} in C^2.
FiniteFrame Mercedes3() { return FiniteFrame(Mat({{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}})); }

bool Near(const ComplexMatrix &a, const ComplexMatrix &b, double tol = 1e-12) {
  return a.rows() == b.rows() && a.cols() == b.cols() && MaxAbs(a - b) <= tol;
}

}  // namespace

TEST_CASE("analysis coefficients") {
  CHECK(Near(frames::Analysis(FiniteFrame::OrthonormalBasis(2), Vec({3.0, Complex(0, 4)})),
             Vec({3.0, Complex(0, 4)})));
  CHECK(Near(frames::Analysis(Mercedes3(), Vec({1.0, 2.0})), Vec({1.0, 2.0, 3.0})));
  CHECK(frames::Analysis(Mercedes3(), ComplexVector::Zero(2)).isZero(0.0));
  // conjugate-linear in the frame vector
  CHECK(Near(frames::Analysis(FiniteFrame(Mat({{Complex(0, 1)}})), Vec({1.0})), Vec({Complex(0, -1)})));
}

TEST_CASE("synthesis sums") {
  CHECK(Near(frames::Synthesis(FiniteFrame::OrthonormalBasis(2), Vec({1.0, 1.0})), Vec({1.0, 1.0})));
  CHECK(Near(frames::Synthesis(Mercedes3(), Vec({1.0, 1.0, 1.0})), Vec({2.0, 2.0})));
  CHECK(Near(frames::Synthesis(Mercedes3(), Vec({1.0, 0.0, 0.0})), Mercedes3().vector(0)));
}

TEST_CASE("frame operator") {
  CHECK(Near(frames::FrameOperator(Mercedes3()), Mat({{2.0, 1.0}, {1.0, 2.0}})));
  CHECK(Near(frames::FrameOperator(FiniteFrame::OrthonormalBasis(3)), ComplexMatrix::Identity(3, 3)));
  CHECK(Near(frames::FrameOperator(FiniteFrame(Row({1.0, 1.0, -1.0}))), Mat({{3.0}})));
}

TEST_CASE("frame bounds") {
  FrameBounds b = frames::Bounds(Mercedes3());
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(3.0));
  b = frames::Bounds(FiniteFrame::OrthonormalBasis(4));
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));
  FiniteFrame degenerate(Mat({{1.0, 2.0}, {0.0, 0.0}}));
  CHECK_FALSE(frames::IsFrame(degenerate));
  try {
    frames::Bounds(degenerate);
    FAIL("expected NotAFrame");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kNotAFrame);
  }
}

TEST_CASE("canonical duals of the scalar templates are one third") {
  CHECK(Near(frames::CanonicalDual(FiniteFrame(Row({1.0, 1.0, -1.0}))).synthesis(),
             Row({1.0 / 3, 1.0 / 3, -1.0 / 3})));
  CHECK(Near(frames::CanonicalDual(FiniteFrame(Row({1.0, 1.0, 1.0}))).synthesis(),
             Row({1.0 / 3, 1.0 / 3, 1.0 / 3})));
  CHECK(Near(frames::CanonicalDual(FiniteFrame::OrthonormalBasis(3)).synthesis(),
             ComplexMatrix::Identity(3, 3)));
}

TEST_CASE("duality predicates") {
  FiniteFrame phi = Mercedes3();
  CHECK(frames::IsDual(frames::CanonicalDual(phi), phi));
  FiniteFrame onb = FiniteFrame::OrthonormalBasis(3);
  CHECK(frames::IsDual(onb, onb));
  // sum f_n conj(phi_n) = 1/3 + 1/3 - 1/3 = 1/3
  CHECK_FALSE(frames::IsDual(FiniteFrame(Row({1.0 / 3, 1.0 / 3, 1.0 / 3})), FiniteFrame(Row({1.0, 1.0, -1.0}))));
}

TEST_CASE("pseudo-dual predicates") {
  FiniteFrame phi = Mercedes3();
  FiniteFrame dual = frames::CanonicalDual(phi);
  CHECK(frames::IsAPseudoDual(dual, phi));
  CHECK(frames::IsSPseudoDual(dual, phi));

  std::mt19937_64 rng(21);
  FiniteFrame riesz = RandomRieszBasis(3, rng);
  ComplexMatrix cut = frames::CanonicalDual(riesz).synthesis();
  cut.col(1).setZero();
  CHECK_FALSE(frames::IsAPseudoDual(FiniteFrame(cut), riesz));
  CHECK_FALSE(frames::IsSPseudoDual(FiniteFrame(cut), riesz));

  // In C^1 with Phi = (1, 1) and F = (1, 0): sum <f, phi_n> f_n = f.
  CHECK(frames::IsSPseudoDual(FiniteFrame(Row({1.0, 0.0})), FiniteFrame(Row({1.0, 1.0}))));
}

TEST_CASE("dual family special cases") {
  FiniteFrame phi = Mercedes3();
  FiniteFrame zero = frames::DualFamily({phi, ComplexMatrix::Zero(2, 3)});
  CHECK(Near(zero.synthesis(), frames::CanonicalDual(phi).synthesis()));

  std::mt19937_64 rng(22);
  FiniteFrame onb = FiniteFrame::OrthonormalBasis(3);
  FiniteFrame collapsed = frames::DualFamily({onb, RandomMatrix(3, 3, rng)});
  CHECK(Near(collapsed.synthesis(), ComplexMatrix::Identity(3, 3)));

  CHECK_THROWS_AS(frames::DualFamily({phi, ComplexMatrix::Zero(3, 3)}), Error);
}

TEST_CASE("equivalence operator") {
  std::mt19937_64 rng(23);
  FiniteFrame phi = RandomFrame(3, 5, rng);
  Equivalence same = frames::EquivalenceOperator(phi, phi);
  REQUIRE(same);
  CHECK(Near(*same.op, ComplexMatrix::Identity(3, 3), 1e-10));

  Equivalence scalar = frames::EquivalenceOperator(FiniteFrame(Row({1.0, 1.0})), FiniteFrame(Row({1.0, -1.0})));
  CHECK_FALSE(scalar);
  CHECK(scalar.failure == EquivalenceFailure::kNoLinearMap);

  Multiplier block = CounterexampleBlock();
  CHECK_FALSE(frames::EquivalenceOperator(block.phi().Weighted(block.symbol().values()), block.psi()));

  ComplexMatrix l = RandomWellConditioned(3, rng);
  Equivalence mapped = frames::EquivalenceOperator(phi, FiniteFrame(l * phi.synthesis()));
  REQUIRE(mapped);
  CHECK(Near(*mapped.op, l, 1e-10));
}

TEST_CASE("riesz basis test") {
  CHECK(frames::IsRieszBasis(FiniteFrame::OrthonormalBasis(2)));
  CHECK_FALSE(frames::IsRieszBasis(Mercedes3()));
  CHECK(frames::IsRieszBasis(FiniteFrame(Mat({{1.0, 1.0}, {1.0, -1.0}}))));
  CHECK_FALSE(frames::IsRieszBasis(FiniteFrame(Mat({{1.0, 2.0}, {1.0, 2.0}}))));
}

TEST_CASE("same-sequence comparison is ordered") {
  FiniteFrame a(Row({1.0, 2.0}));
  CHECK(frames::SameSequence(a, FiniteFrame(Row({1.0, 2.0 + 1e-12}))));
  CHECK_FALSE(frames::SameSequence(a, FiniteFrame(Row({2.0, 1.0}))));
}

TEST_CASE("invalid frame construction") {
  CHECK_THROWS_AS((void)FiniteFrame(ComplexMatrix(0, 0)), Error);
  ComplexMatrix nan = ComplexMatrix::Ones(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS((void)FiniteFrame(nan), Error);
}

TEST_CASE("property: analysis matrix is the adjoint of synthesis") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteFrame phi = RandomFrame(UniformInt(rng, 1, 6), UniformInt(rng, 1, 10), rng);
    ComplexVector f = RandomVector(phi.dim(), rng);
    ComplexVector c(phi.count());
    for (long n = 0; n < phi.count(); ++n) c(n) = Inner(f, phi.vector(n));
    CHECK(MaxAbs(frames::Analysis(phi, f) - c) <= 1e-12 * (1.0 + MaxAbs(c)));
  }
}

TEST_CASE("property: frame operator is hermitian, positive and matches rank-one sums") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 6);
    FiniteFrame phi = RandomConditionedFrame(d, UniformInt(rng, d, 12), rng);
    ComplexMatrix s = frames::FrameOperator(phi);
    CHECK(numerics::Norm(s - s.adjoint()) <= 1e-12 * numerics::Norm(s));
    CHECK(numerics::Norm(s - BruteForceFrameOperator(phi.synthesis())) <= 1e-12 * numerics::Norm(s));
    CHECK(numerics::SpectrumHermitian(s)(0) >= -1e-12 * numerics::Norm(s));
  }
}

TEST_CASE("property: canonical dual is an involution and matches the LU oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 8);
    FiniteFrame phi = RandomConditionedFrame(d, UniformInt(rng, d, 16), rng);
    FiniteFrame dual = frames::CanonicalDual(phi);
    const double scale = Cond(phi.synthesis()) * Cond(phi.synthesis());
    CHECK(MaxAbs(dual.synthesis() - OracleCanonicalDual(phi.synthesis())) <=
          1e-11 * scale * MaxAbs(dual.synthesis()));
    CHECK(frames::SameSequence(frames::CanonicalDual(dual), phi));
  }
}

TEST_CASE("property: dual family draws are duals") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 8);
    FiniteFrame phi = RandomConditionedFrame(d, UniformInt(rng, d, 16), rng);
    FiniteFrame dual = frames::DualFamily({phi, frames::RandomPerturbation(phi, rng)});
    CHECK(frames::IsDual(dual, phi));
  }
}

TEST_CASE("property: equivalence is symmetric with inverse operators") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const long d = UniformInt(rng, 1, 6);
    FiniteFrame phi = RandomConditionedFrame(d, UniformInt(rng, d, 10), rng);
    FiniteFrame psi(RandomWellConditioned(d, rng) * phi.synthesis());
    Equivalence fwd = frames::EquivalenceOperator(phi, psi);
    Equivalence back = frames::EquivalenceOperator(psi, phi);
    REQUIRE(fwd);
    REQUIRE(back);
    CHECK(numerics::Norm(*fwd.op * *back.op - ComplexMatrix::Identity(d, d)) <= 1e-9);
  }
}

TEST_CASE("property: a riesz basis has only the canonical dual") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteFrame phi = RandomRieszBasis(UniformInt(rng, 1, 8), rng);
    FiniteFrame dual = frames::DualFamily({phi, RandomMatrix(phi.dim(), phi.count(), rng)});
    CHECK(frames::SameSequence(dual, frames::CanonicalDual(phi)));
  }
}
