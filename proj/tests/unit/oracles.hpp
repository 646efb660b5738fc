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

// Independent oracles used by the test-suite only. Everything here computes
// through brute force (term-by-term sums, explicit quadrature, golden-section
// search) and stays deliberately independent of the library's own
// coefficient-side shortcuts.

#ifndef HANKELLAB_TESTS_ORACLES_HPP
#define HANKELLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "core/coefficients.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"

namespace hankellab::oracles {

inline constexpr double kPi = std::numbers::pi;

inline OperatorSymbol random_symbol(Rng& rng, int dim, int degree) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = rng.next_complex_normal();
    coeffs.push_back(std::move(m));
  }
  return OperatorSymbol(dim, std::move(coeffs));
}

inline VectorPolynomial random_vector_poly(Rng& rng, int dim, int degree) {
  std::vector<CVector> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    CVector v(dim);
    for (int r = 0; r < dim; ++r) v(r) = rng.next_complex_normal();
    coeffs.push_back(std::move(v));
  }
  return VectorPolynomial(dim, std::move(coeffs));
}

/// Boundary quadrature (1/2pi) int ||f(e^{i t})||^2 dt by the trapezoid rule
/// on a uniform grid; exact for trigonometric polynomials once the grid
/// exceeds twice the degree.
inline double hardy_norm_sq_boundary(const VectorPolynomial& f, int points = 0) {
  const int n = points > 0 ? points : std::max(4, 4 * f.degree());
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    double t = 2.0 * kPi * j / n;
    acc += f.evaluate(Complex(std::cos(t), std::sin(t))).squaredNorm();
  }
  return acc / n;
}

/// Term-by-term (non-Horner) evaluation.
inline Matrix evaluate_sum(const OperatorSymbol& phi, Complex z) {
  Matrix acc = Matrix::Zero(phi.dim(), phi.dim());
  Complex p(1.0, 0.0);
  for (int n = 0; n <= phi.degree(); ++n) {
    acc += phi.coeff(n) * p;
    p *= z;
  }
  return acc;
}

/// Truncated double sum of the Hankel action: coefficient n of the output is
/// sum_{m <= N} w_l(n) phi_hat(n+m) w_r(m) f_hat(m).
inline VectorPolynomial hankel_apply_sum(const OperatorSymbol& phi, const VectorPolynomial& f,
                                         int n_trunc, double left_exponent = 0.0,
                                         double right_exponent = 0.0) {
  std::vector<CVector> out(static_cast<std::size_t>(n_trunc) + 1, CVector::Zero(phi.dim()));
  for (int n = 0; n <= n_trunc; ++n)
    for (int m = 0; m <= n_trunc; ++m) {
      if (n + m > phi.degree() || m > f.degree()) continue;
      out[static_cast<std::size_t>(n)] += std::pow(1.0 + n, left_exponent) *
                                          std::pow(1.0 + m, right_exponent) *
                                          (phi.coeff(n + m) * f.coeff(m));
    }
  return VectorPolynomial(phi.dim(), std::move(out));
}

/// Weighted area quadrature of int ||psi(z) g(conj z or z)||^2 (1-|z|^2) dA.
/// Gauss-Legendre in u = r^2 (polynomial integrand, exact with enough nodes)
/// and a uniform angular grid (trigonometric polynomial, exact).
inline double embedding_integral(const OperatorSymbol& psi, const VectorPolynomial& f,
                                 bool conjugate_argument) {
  const int total_degree = psi.degree() + f.degree();
  const int radial_nodes = total_degree + 6;
  const int angular = 4 * total_degree + 8;
  const QuadratureRule rule = gauss_legendre_01(radial_nodes);

  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i];
    const double r = std::sqrt(u);
    double ring = 0.0;
    for (int j = 0; j < angular; ++j) {
      double t = 2.0 * kPi * j / angular;
      Complex z = r * Complex(std::cos(t), std::sin(t));
      Complex arg = conjugate_argument ? std::conj(z) : z;
      ring += (psi.evaluate(z) * f.evaluate(arg)).squaredNorm();
    }
    acc += rule.weights[i] * (ring / angular) * (1.0 - u);
  }
  return kPi * acc;  // dA = pi du after the angular average in u = r^2
}

/// Golden-section maximiser for smooth unimodal profiles; used to pin the
/// Bloch norm of radially symmetric examples.
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace hankellab::oracles

#endif
