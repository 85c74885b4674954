// tests/support.hpp

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

// Random instance generators and independent oracles shared by the test
// binaries. The oracles deliberately avoid the library's code paths: sums are
// explicit loops and inverses go through LU instead of SVD.

#pragma once

#include <cmath>
#include <random>

#include "framemult/blockseq.hpp"

namespace fmtest {

using namespace framemult;

inline Complex Gaussian(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  return {n(rng), n(rng)};
}

inline double Uniform(std::mt19937_64 &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline long UniformInt(std::mt19937_64 &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline ComplexMatrix RandomMatrix(long rows, long cols, std::mt19937_64 &rng) {
  ComplexMatrix a(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) a(i, j) = Gaussian(rng);
  return a;
}

inline ComplexMatrix RandomUnitary(long d, std::mt19937_64 &rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(RandomMatrix(d, d, rng));
  return qr.householderQ() * ComplexMatrix::Identity(d, d);
}

/// U diag(s) V* with singular values drawn from [lo, hi].
inline ComplexMatrix RandomWellConditioned(long d, std::mt19937_64 &rng, double lo = 0.5,
                                           double hi = 2.0) {
  ComplexVector s(d);
  for (long i = 0; i < d; ++i) s(i) = Uniform(rng, lo, hi);
  return RandomUnitary(d, rng) * s.asDiagonal() * RandomUnitary(d, rng).adjoint();
}

inline FiniteFrame RandomFrame(long d, long n, std::mt19937_64 &rng) {
  return FiniteFrame(RandomMatrix(d, n, rng));
}

/// d x N synthesis matrix U diag(s) W with orthonormal rows W and singular
/// values in [lo, hi]; keeps frame bounds inside [lo^2, hi^2].
inline FiniteFrame RandomConditionedFrame(long d, long n, std::mt19937_64 &rng, double lo = 0.5,
                                          double hi = 2.0) {
  ComplexVector s(d);
  for (long i = 0; i < d; ++i) s(i) = Uniform(rng, lo, hi);
  ComplexMatrix w = RandomUnitary(n, rng).topRows(d);
  return FiniteFrame(RandomUnitary(d, rng) * s.asDiagonal() * w);
}

inline FiniteFrame RandomRieszBasis(long d, std::mt19937_64 &rng) {
  return FiniteFrame(RandomWellConditioned(d, rng));
}

/// Moduli uniform in [lo, hi], phases uniform.
inline ComplexVector RandomSymbolValues(long n, std::mt19937_64 &rng, double lo = 0.5,
                                        double hi = 2.0) {
  ComplexVector m(n);
  for (long i = 0; i < n; ++i) m(i) = std::polar(Uniform(rng, lo, hi), Uniform(rng, -M_PI, M_PI));
  return m;
}

inline ComplexVector RandomVector(long d, std::mt19937_64 &rng) {
  return RandomMatrix(d, 1, rng).col(0);
}

// <f, g> = sum_k f_k conj(g_k), written out.
inline Complex Inner(const ComplexVector &f, const ComplexVector &g) {
  Complex s = 0.0;
  for (long k = 0; k < f.size(); ++k) s += f(k) * std::conj(g(k));
  return s;
}

/// sum_n m_n <f, psi_n> phi_n, term by term.
inline ComplexVector BruteForceApply(const ComplexVector &m, const ComplexMatrix &phi,
                                     const ComplexMatrix &psi, const ComplexVector &f) {
  ComplexVector out = ComplexVector::Zero(phi.rows());
  for (long n = 0; n < m.size(); ++n) {
    const Complex c = m(n) * Inner(f, psi.col(n));
    for (long i = 0; i < phi.rows(); ++i) out(i) += c * phi(i, n);
  }
  return out;
}

/// Matrix of the multiplier obtained by applying it to each basis vector.
inline ComplexMatrix BruteForceMultiplier(const ComplexVector &m, const ComplexMatrix &phi,
                                          const ComplexMatrix &psi) {
  const long d = phi.rows();
  ComplexMatrix out(d, d);
  for (long j = 0; j < d; ++j) {
    ComplexVector e = ComplexVector::Zero(d);
    e(j) = 1.0;
    out.col(j) = BruteForceApply(m, phi, psi, e);
  }
  return out;
}

inline ComplexMatrix BruteForceFrameOperator(const ComplexMatrix &phi) {
  return BruteForceMultiplier(ComplexVector::Ones(phi.cols()), phi, phi);
}

inline ComplexMatrix LuInverse(const ComplexMatrix &a) {
  return Eigen::FullPivLU<ComplexMatrix>(a).inverse();
}

inline ComplexMatrix OracleCanonicalDual(const ComplexMatrix &phi) {
  return LuInverse(BruteForceFrameOperator(phi)) * phi;
}

inline double MaxAbs(const ComplexMatrix &a) { return a.cwiseAbs().maxCoeff(); }

inline double Cond(const ComplexMatrix &a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto &s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

inline ComplexMatrix Row(std::initializer_list<Complex> v) {
  ComplexMatrix r(1, static_cast<long>(v.size()));
  long i = 0;
  for (Complex x : v) r(0, i++) = x;
  return r;
}

inline ComplexVector Vec(std::initializer_list<Complex> v) {
  ComplexVector r(static_cast<long>(v.size()));
  long i = 0;
  for (Complex x : v) r(i++) = x;
  return r;
}

inline ComplexMatrix Mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const long r = static_cast<long>(rows.size());
  const long c = static_cast<long>(rows.begin()->size());
  ComplexMatrix a(r, c);
  long i = 0;
  for (const auto &row : rows) {
    long j = 0;
    for (Complex x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

/// The constant-template counterexample block in C^1:
/// Phi = (1, 1, -1), Psi = (1, 1, 1), m = ((5+2 sqrt5)/5, (5-2 sqrt5)/5, 1).
inline Multiplier CounterexampleBlock() {
  const double s5 = std::sqrt(5.0);
  return Multiplier::Build(Symbol(Vec({(5 + 2 * s5) / 5, (5 - 2 * s5) / 5, 1.0})),
                           FiniteFrame(Row({1.0, 1.0, -1.0})), FiniteFrame(Row({1.0, 1.0, 1.0})));
}

}  // namespace fmtest
