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

#ifndef HANKELLAB_CORE_FUNCTIONALS_HPP
#define HANKELLAB_CORE_FUNCTIONALS_HPP

#include <array>
#include <vector>

#include "core/coefficients.hpp"

namespace hankellab {

/// Hermitian Gram matrix of the quadratic form
///   f  |->  int_D || psi(z) f(conj z) ||^2 (1 - |z|^2) dA(z)
/// over test functions of degree <= n_trunc, reduced by monomial
/// orthogonality: int z^a conj(z)^b (1-|z|^2) dA = delta_ab pi/((a+1)(a+2)).
/// Blocks: M(m', m) = sum_{j - j' = m - m'} psi_hat(j')^* psi_hat(j)
///                    * pi / ((j + m' + 1)(j + m' + 2)).
Matrix embedding_gram(const OperatorSymbol& psi, int n_trunc);

/// Largest eigenvalue of embedding_gram: the exact supremum of the integral
/// above over unit-Hardy-norm test functions of degree <= n_trunc. The Gram
/// entries are closed-form, so the only approximation is the truncation of
/// the test-function ball. Strictly increasing in n_trunc in general.
double gram_embedding_value(const OperatorSymbol& psi, int n_trunc);

/// Analytic counterpart: sup of int ||psi(z) f(z)||^2 (1-|z|^2) dA over the
/// same truncated ball. For scalar symbols it equals gram_embedding_value
/// exactly (coefficient conjugation is a bijection of the ball).
double analytic_embedding_value(const OperatorSymbol& psi, int n_trunc);

struct PairRatio {
  int numerator;    // 1-based value index
  int denominator;  // 1-based value index
  double ratio;
};

/// The six comparable operator norms attached to a symbol phi and an order
/// alpha > 0, plus bookkeeping. All six are positively homogeneous in phi and
/// independent of the truncation once it reaches the symbol degree; the
/// report records the effective truncation used.
struct NormChainReport {
  double alpha = 0.0;
  double beta = 0.0;  // auxiliary exponent, fixed to max(2, 1+alpha) + 1
  int n_requested = 0;
  int n_used = 0;
  int dim = 0;
  int degree = 0;
  std::array<double, 6> values{};  // ||phi||_{k,alpha}, k = 1..6
  double raw_anti_embedding = 0.0;  // sqrt of the unnormalised value-6 integral
  double eq2_conversion = 0.0;      // sqrt(pi/2): raw = conversion * values[5]
  std::vector<PairRatio> ratios;    // 15 pairwise ratios values[i]/values[j], i < j
};

NormChainReport norm_chain(const OperatorSymbol& phi, double alpha, int n_trunc);

/// Evaluation grid over the open disc used by the kernel-test functionals:
/// the given radii times equispaced angles, with local refinement rounds
/// around the maximiser.
struct DiscGrid {
  std::vector<double> radii;
  int angles = 32;
  int refine_rounds = 1;

  static DiscGrid standard();
};

/// Weak kernel condition: sup over grid points w and unit vectors x of
/// (1 - |w|^2) * int || (D^{1+alpha} phi)(z) (k_w f)(conj z) x ||^2 ... i.e.
/// the embedding form tested on f = k_w x and maximised exactly over x as a
/// largest eigenvalue. Requires alpha > 0.
double weak_bmoa_value(const OperatorSymbol& phi, double alpha, const DiscGrid& grid,
                       int n_trunc);

struct RkThesisValues {
  double embedding_variant = 0.0;  // kernel-tested embedding form, order 1 + alpha
  double section_variant = 0.0;    // sup_w (1-|w|^2) ||D^alpha Gamma_phi (k_w x)||^2 over unit x
};

/// Reproducing-kernel-thesis functionals; alpha >= 0. Both variants are
/// reported, no comparability between them is asserted.
RkThesisValues rk_thesis_value(const OperatorSymbol& phi, double alpha, const DiscGrid& grid,
                               int n_trunc);

}  // namespace hankellab

#endif
