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

#include "core/coefficients.hpp"
#include "oracles.hpp"

using namespace hankellab;

TEST_CASE("conjugate_symbol on explicit coefficients") {
  Matrix id = Matrix::Identity(2, 2);
  OperatorSymbol phi = OperatorSymbol::constant(id);
  CHECK((conjugate_symbol(phi).coeff(0) - id).cwiseAbs().maxCoeff() == 0.0);

  Matrix nilpotent = Matrix::Zero(2, 2);
  nilpotent(0, 1) = 1.0;
  OperatorSymbol psi(2, {Matrix::Zero(2, 2), nilpotent});
  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 0) = 1.0;
  CHECK((conjugate_symbol(psi).coeff(1) - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conjugate_symbol is an isometric involution") {
  Rng rng(11);
  OperatorSymbol phi = oracles::random_symbol(rng, 3, 4);
  OperatorSymbol twice = conjugate_symbol(conjugate_symbol(phi));
  for (int n = 0; n <= phi.degree(); ++n) {
    CHECK((twice.coeff(n) - phi.coeff(n)).cwiseAbs().maxCoeff() == 0.0);
    // operator norms of the coefficients are preserved
    Eigen::JacobiSVD<Matrix> a(phi.coeff(n));
    Eigen::JacobiSVD<Matrix> b(conjugate_symbol(phi).coeff(n));
    CHECK(a.singularValues()(0) == doctest::Approx(b.singularValues()(0)).epsilon(1e-14));
  }
}

TEST_CASE("hardy_norm explicit values") {
  CHECK(VectorPolynomial::monomial(4, 3, 0).hardy_norm() == 1.0);

  CVector c0(2), c1(2);
  c0 << Complex(3.0, 0.0), Complex(0.0, 0.0);
  c1 << Complex(0.0, 0.0), Complex(4.0, 0.0);
  VectorPolynomial f(2, {c0, c1});
  CHECK(f.hardy_norm() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("hardy_norm matches boundary quadrature and survives conjugation") {
  Rng rng(12);
  VectorPolynomial f = oracles::random_vector_poly(rng, 3, 9);
  double direct = f.hardy_norm();
  CHECK(direct * direct == doctest::Approx(oracles::hardy_norm_sq_boundary(f)).epsilon(1e-10));
  CHECK(conjugate_coefficients(f).hardy_norm() == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("normalized lands on the unit sphere") {
  Rng rng(13);
  VectorPolynomial f = oracles::random_vector_poly(rng, 2, 6);
  CHECK(std::abs(f.normalized().hardy_norm() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(VectorPolynomial::zero(2, 3).normalized(), std::invalid_argument);
}

TEST_CASE("evaluate: base point, geometric sum, oracle match, linearity") {
  Rng rng(14);
  OperatorSymbol phi = oracles::random_symbol(rng, 2, 5);
  CHECK((phi.evaluate(Complex(0, 0)) - phi.coeff(0)).cwiseAbs().maxCoeff() == 0.0);

  OperatorSymbol geo = OperatorSymbol::scalar({1.0, 1.0, 1.0});
  CHECK(std::abs(geo.evaluate(Complex(1.0, 0.0))(0, 0) - Complex(3.0, 0.0)) <= 1e-15);

  Complex z(0.0, 0.5);
  CHECK((phi.evaluate(z) - oracles::evaluate_sum(phi, z)).cwiseAbs().maxCoeff() <= 1e-13);

  OperatorSymbol chi = oracles::random_symbol(rng, 2, 5);
  Complex a(0.3, -0.2), b(-1.1, 0.4);
  std::vector<Matrix> mixed;
  for (int n = 0; n <= 5; ++n) mixed.push_back(a * phi.coeff(n) + b * chi.coeff(n));
  OperatorSymbol lin(2, mixed);
  CHECK((lin.evaluate(z) - (a * phi.evaluate(z) + b * chi.evaluate(z))).cwiseAbs().maxCoeff() <=
        1e-12);

  CHECK_THROWS_AS(phi.evaluate(Complex(1.1, 0.0)), std::invalid_argument);
}

TEST_CASE("FracOrder validation") {
  CHECK_THROWS_AS(FracOrder(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(FracOrder::strictly_positive(0.0), std::invalid_argument);
  CHECK(FracOrder::strictly_positive(0.5).alpha == 0.5);
  CHECK(FracOrder(-2.0).alpha == -2.0);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(OperatorSymbol(2, {Matrix::Zero(3, 3)}), DimensionError);
  CHECK_THROWS_AS(VectorPolynomial(2, {CVector::Zero(3)}), DimensionError);
}
