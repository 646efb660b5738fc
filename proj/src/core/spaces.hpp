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

#ifndef HANKELLAB_CORE_SPACES_HPP
#define HANKELLAB_CORE_SPACES_HPP

#include <vector>

#include "core/coefficients.hpp"

namespace hankellab {

enum class WeightFlavor { Standard, Logarithmic };

/// Weighted Bergman space parameters over the unit disc. The measure is
/// dA_beta = ((1+beta)/pi) (1-|z|^2)^beta dA for the standard flavor and
/// dA_{beta,log} = ((1+beta)/pi) (log 1/|z|^2)^beta dA for the logarithmic
/// one; both are probability measures.
struct WeightSpec {
  double beta;
  WeightFlavor flavor;
  int p;  // 1 or 2

  WeightSpec(double beta_, WeightFlavor flavor_, int p_);
};

/// Finite atomic measure on the open disc.
struct GridMeasure {
  struct Atom {
    Complex point;
    double mass;
  };
  std::vector<Atom> atoms;

  explicit GridMeasure(std::vector<Atom> atoms_);
};

struct QuadratureSpec {
  int radial_nodes = 16;  // Gauss-Legendre nodes per geometric panel
  int angular_points = 0;  // 0: choose 8 * (degree + 1) automatically
};

/// Exact coefficient-side norm for p = 2. Logarithmic flavor:
/// Gamma(2+beta) sum ||f_hat(k)||^2 / (1+k)^(1+beta); standard flavor uses the
/// inverse generalized binomial coefficients.
double bergman_norm_parseval(const VectorPolynomial& f, const WeightSpec& w);

/// Numerical norm for p in {1, 2}. For p = 2 the angular integral is reduced
/// exactly by monomial orthogonality and only the radial variable is
/// quadratured; for p = 1 a uniform angular grid is used, which must have at
/// least 8 * (degree + 1) points.
double bergman_norm_quadrature(const VectorPolynomial& f, const WeightSpec& w,
                               const QuadratureSpec& q = QuadratureSpec{});

/// Closed form ||z^M||_{A^1_{alpha-1,log}} = 2^alpha Gamma(1+alpha) / (2+M)^alpha,
/// alpha > 0, evaluated through log-gamma.
double monomial_a1log_norm(int monomial_degree, double alpha);

/// Weighted Bergman projection of phi times the coefficient-conjugated test
/// function: coefficient n of the result is sum_m c(m, n) phi_hat(m+n) f_hat(m)
/// with the flavor-dependent kernel coefficients. Requires p = 2.
VectorPolynomial bergman_project(const OperatorSymbol& phi, const VectorPolynomial& f,
                                 const WeightSpec& w);

struct BlochEstimate {
  double value = 0.0;
  Complex argmax{0.0, 0.0};
};

/// sup over the disc of (1-|z|^2) sigma_max((D phi)(z)) via a polar grid with
/// local refinement rounds around the best cell (x8 subdivision per round).
BlochEstimate bloch_norm(const OperatorSymbol& phi, int radial_levels = 64,
                         int angular_points = 128, int refine_rounds = 2);

/// Truncated reproducing kernel of H^2 at w: coefficients conj(w)^n, n <= N.
VectorPolynomial reproducing_kernel(Complex w, int n_trunc);

/// Carleson box intensity sup_I mu(S(I)) / m(I) over the dyadic arc family of
/// levels 1..levels plus arcs centred at each atom argument, plus the full
/// circle. Boxes are S(I) = { w : 1 - m(I) < |w| < 1, w/|w| in I }.
double carleson_intensity(const GridMeasure& mu, int levels);

}  // namespace hankellab

#endif
