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

#ifndef HANKELLAB_CORE_COUNTEREXAMPLES_HPP
#define HANKELLAB_CORE_COUNTEREXAMPLES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/coefficients.hpp"

namespace hankellab {

/// Rank-one-valued symbol z -> sum_n beta_n e_0 (x) e_n^* z^n truncated at
/// degree N, with the ambient dimension tied to the truncation (d = N + 1).
struct Dp1Config {
  enum class BetaRule {
    Default,   // beta_n = (1+n)^(-alpha - 1/2)
    PowerLaw,  // beta_n = (1+n)^(-q)
    Zero,
  };

  double alpha = 1.0;  // > 0
  int n_trunc = 0;
  BetaRule rule = BetaRule::Default;
  double power_exponent = 0.0;  // used by PowerLaw

  std::vector<double> beta(int count) const;
};

struct Dp1ClosedForm {
  double right_norm = 0.0;   // sigma_max(X D^alpha) = sup_n (1+n)^alpha gamma_n
  double left_lower = 0.0;   // column bound for sigma_max(D^alpha X)
  double right_tail_bound = 0.0;  // bound on the dropped tail of gamma_n^2
  int right_argmax = 0;
  int left_argmax = 0;
  std::vector<double> gamma_sq;           // gamma_n^2 = sum_{k >= n} beta_k^2 (truncated)
  std::vector<double> weighted_gamma_sq;  // (1+n)^{2 alpha} gamma_n^2
  std::vector<double> column_sums;        // sum_{n <= N-k} (1+n)^{2 alpha} beta_{n+k}^2
};

/// Exact evaluation of the two closed forms on the truncated range.
Dp1ClosedForm dp1_closed_form(const Dp1Config& cfg);

struct Dp1SectionNorms {
  int n_trunc = 0;
  double sigma_dx = 0.0;  // largest singular value of D^alpha X_N
  double sigma_xd = 0.0;  // largest singular value of X_N D^alpha
  bool converged = true;
};

/// Assembles the weighted sections of the rank-one-valued symbol (as the
/// matrix X = [beta_{m+n} e_{m+n}] acting from scalar Hardy space) and
/// computes largest singular values numerically. Matrix-free: the section is
/// never exploited as a diagonal Gram, only applied entry by entry.
std::vector<Dp1SectionNorms> dp1_section_norms(const Dp1Config& base,
                                               std::span<const int> n_list);

/// Entrywise product.
Matrix schur_product(const Matrix& a, const Matrix& b);

/// (N+1)x(N+1) matrix with entries ((1+m)/(1+m+n))^alpha, alpha > 0.
Matrix dp2_schur_matrix(double alpha, int n_trunc);

struct SchurWitness {
  std::string id;
  Matrix matrix;
};

/// Test family: all-ones, 32 seeded unit-norm complex Gaussian draws, the
/// Hankel-Hilbert matrix [1/(1+m+n)] and the upper-triangular all-ones
/// matrix, the latter two normalised to unit operator norm.
std::vector<SchurWitness> dp2_witness_family(int n_trunc, std::uint64_t seed,
                                             int gaussian_draws = 32);

struct SchurBound {
  double value = 0.0;       // certified lower bound for the multiplier norm
  std::string witness;      // id of the maximising family member
  std::vector<std::pair<std::string, double>> ratios;  // per-member ratios
};

/// max over the family of sigma_max(B o A) / sigma_max(A).
SchurBound schur_lower_bound(const Matrix& b, std::span<const SchurWitness> family,
                             double tol = 1e-9);

/// Operator symbol phi(z) = diag(z^k) A diag(z^l): coefficient n is
/// A_n = sum_{k+l=n} a_kl E_kl; dimension N+1, degree 2N.
OperatorSymbol dp2_symbol_from_matrix(const Matrix& a);

/// Max entry magnitude of V^* (section of D^alpha Gamma_{D^-alpha phi}) V - B o A,
/// where V e_n = e_n z^n and phi = dp2_symbol_from_matrix(a). Exact identity,
/// so the result is floating-point noise.
double dp2_compression_check(const Matrix& a, double alpha);

struct OrderControlResult {
  double sigma = 0.0;
  double bloch = 0.0;
  double ratio = 0.0;  // sigma / (l * bloch)
};

/// sigma_max of the section of D^alpha Gamma_{D^{-alpha-l} psi} D^l divided by
/// l times the Bloch norm of psi. Requires alpha > 0, l >= 1 and a nonzero
/// Bloch norm.
OrderControlResult order_control_ratio(const OperatorSymbol& psi, double alpha, int l,
                                       int n_trunc);

struct PrimitiveNormCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_gap = 0.0;
};

/// Sharpness identity for the primitive bound on monomials h = z^N:
/// lhs = (1+N)^{-l} ||z^N||_{A^1_{alpha-1,log}},
/// rhs = Gamma(1+alpha)/(2^l Gamma(1+alpha+l)) ((2+N)/(1+N))^l ||z^N||_{A^1_{alpha+l-1,log}}.
/// Equality is exact; rel_gap records the floating-point defect.
PrimitiveNormCheck primitive_norm_check(double alpha, int l, int n_zero);

/// Scalar lacunary Bloch function sum_{k <= top_level} z^(2^k).
OperatorSymbol lacunary_symbol(int top_level = 8);

}  // namespace hankellab

#endif
