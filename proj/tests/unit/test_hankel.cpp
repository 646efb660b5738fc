/*
   Copyright 2026 The hankellab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "core/hankel.hpp"
#include "core/linalg.hpp"
#include "oracles.hpp"

using namespace hankellab;

TEST_CASE("assemble reproduces the scalar layout") {
  OperatorSymbol phi = OperatorSymbol::scalar({1.0, 2.0, 3.0, 4.0});
  HankelSection s = HankelSection::assemble(phi, 2);
  Matrix expected(3, 3);
  expected << 1, 2, 3, 2, 3, 4, 3, 4, 0;
  CHECK((s.flat() - expected).cwiseAbs().maxCoeff() == 0.0);

  // Hankel symmetry along anti-diagonals with unit weights.
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      for (int mp = 0; mp < 3; ++mp) {
        int np = m + n - mp;
        if (np < 0 || np > 2) continue;
        CHECK(s.flat()(m, n) == s.flat()(mp, np));
      }
}

TEST_CASE("apply on explicit symbols") {
  OperatorSymbol phi = OperatorSymbol::scalar({1.0, 1.0, 1.0});
  VectorPolynomial one = VectorPolynomial::scalar({1.0});
  VectorPolynomial image = HankelSection::assemble(phi, 4).apply(one);
  CHECK(image.coeff(0)(0) == Complex(1.0, 0.0));
  CHECK(image.coeff(1)(0) == Complex(1.0, 0.0));
  CHECK(image.coeff(2)(0) == Complex(1.0, 0.0));
  CHECK(image.coeff(3)(0) == Complex(0.0, 0.0));

  // constant identity coefficient: projection onto the constant term
  OperatorSymbol proj = OperatorSymbol::constant(Matrix::Identity(2, 2));
  Rng rng(31);
  VectorPolynomial f = oracles::random_vector_poly(rng, 2, 3);
  VectorPolynomial projected = HankelSection::assemble(proj, 3).apply(f);
  CHECK((projected.coeff(0) - f.coeff(0)).cwiseAbs().maxCoeff() == 0.0);
  for (int n = 1; n <= 3; ++n) CHECK(projected.coeff(n).cwiseAbs().maxCoeff() == 0.0);

  // z^k flips monomials: z^j -> z^(k-j) for j <= k, else 0
  const int k = 3;
  std::vector<Complex> zk(static_cast<std::size_t>(k) + 1, 0.0);
  zk.back() = 1.0;
  HankelSection flip = HankelSection::assemble(OperatorSymbol::scalar(zk), 5);
  for (int j = 0; j <= 5; ++j) {
    VectorPolynomial image2 = flip.apply(VectorPolynomial::monomial(1, j));
    for (int n = 0; n <= 5; ++n) {
      Complex expected = (j <= k && n == k - j) ? 1.0 : 0.0;
      CHECK(image2.coeff(n)(0) == expected);
    }
  }
}

TEST_CASE("apply agrees with the truncated double sum and left weight scales rows") {
  Rng rng(32);
  OperatorSymbol phi = oracles::random_symbol(rng, 3, 6);
  VectorPolynomial f = oracles::random_vector_poly(rng, 3, 6);
  const int n_trunc = 8;

  VectorPolynomial via_section = HankelSection::assemble(phi, n_trunc).apply(f);
  VectorPolynomial via_sum = oracles::hankel_apply_sum(phi, f, n_trunc);
  for (int n = 0; n <= n_trunc; ++n)
    CHECK((via_section.coeff(n) - via_sum.coeff(n)).cwiseAbs().maxCoeff() <= 1e-13);

  HankelSection weighted = HankelSection::assemble(
      OperatorSymbol::scalar({0.0, 1.0}), 2, DiagonalWeight::power(1.0),
      DiagonalWeight::identity());
  CHECK(weighted.flat()(1, 0) == Complex(2.0, 0.0));  // (1+1) phi_hat(1)

  CHECK_THROWS_AS(
      HankelSection::assemble(phi, 2).apply(oracles::random_vector_poly(rng, 2, 1)),
      DimensionError);
  CHECK_THROWS_AS(
      HankelSection::assemble(phi, 2).apply(oracles::random_vector_poly(rng, 3, 5)),
      DimensionError);
}

TEST_CASE("weighted section norms: plateau beyond the degree, monotone below") {
  Rng rng(33);
  OperatorSymbol phi = oracles::random_symbol(rng, 2, 5);
  DiagonalWeight left = DiagonalWeight::power(0.7);

  double at_degree = sigma_max(HankelSection::assemble(phi, 5, left).flat()).value;
  double beyond = sigma_max(HankelSection::assemble(phi, 13, left).flat()).value;
  CHECK(beyond == doctest::Approx(at_degree).epsilon(1e-12));

  double prev = 0.0;
  for (int n = 0; n <= 5; ++n) {
    double cur = sigma_max(HankelSection::assemble(phi, n, left).flat()).value;
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("adjoint_residual is numerical zero") {
  Rng rng(34);
  CHECK(adjoint_residual(OperatorSymbol::scalar({1.0, -2.0, 0.5}), FracOrder(1.0), 8) <= 1e-13);
  CHECK(adjoint_residual(oracles::random_symbol(rng, 3, 6), FracOrder(0.7), 16) <= 1e-13);
  CHECK(adjoint_residual(OperatorSymbol::zero(2, 3), FracOrder(2.0), 5) == 0.0);
}

TEST_CASE("leibniz_residual is numerical zero") {
  Rng rng(35);
  CHECK(leibniz_residual(OperatorSymbol::scalar({0.0, 0.0, 1.0}), 4) <= 1e-14);
  CHECK(leibniz_residual(oracles::random_symbol(rng, 4, 6), 10) <= 1e-13);
  CHECK(leibniz_residual(OperatorSymbol::constant(Matrix::Identity(3, 3)), 6) == 0.0);
}
