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

#ifndef HANKELLAB_CORE_COEFFICIENTS_HPP
#define HANKELLAB_CORE_COEFFICIENTS_HPP

#include <vector>

#include "core/errors.hpp"
#include "core/types.hpp"

namespace hankellab {

/// Exponent of the diagonal coefficient multiplier D^alpha. A plain strong
/// type: any finite real is a valid exponent; operations that require a
/// strictly positive order validate at the call site via strictly_positive().
struct FracOrder {
  double alpha;

  explicit FracOrder(double a);
  static FracOrder strictly_positive(double a);
};

/// Truncated Taylor expansion of an operator-valued analytic function on the
/// unit disc: coefficients are dim x dim complex matrices, indices 0..degree.
/// Immutable after construction. The scalar case is dim == 1.
class OperatorSymbol {
 public:
  OperatorSymbol(int dim, std::vector<Matrix> coeffs, bool rank_one_hint = false);

  static OperatorSymbol zero(int dim, int degree);
  static OperatorSymbol scalar(const std::vector<Complex>& taylor);
  static OperatorSymbol constant(const Matrix& value);

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Matrix& coeff(int n) const;
  Matrix coeff_or_zero(int n) const;
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  /// True when the symbol was constructed as rank-one-valued. Advisory only.
  bool rank_one_hint() const { return rank_one_hint_; }

  /// Horner evaluation of sum phi_hat(n) z^n; requires |z| <= 1 + 1e-12.
  Matrix evaluate(Complex z) const;

 private:
  int dim_;
  std::vector<Matrix> coeffs_;
  bool rank_one_hint_;
};

/// Truncated Taylor expansion of a vector-valued analytic test function.
class VectorPolynomial {
 public:
  VectorPolynomial(int dim, std::vector<CVector> coeffs);

  static VectorPolynomial zero(int dim, int degree);
  static VectorPolynomial scalar(const std::vector<Complex>& taylor);
  /// z^power times the basis direction e_direction.
  static VectorPolynomial monomial(int dim, int power, int direction = 0);

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coeff(int n) const;
  CVector coeff_or_zero(int n) const;
  const std::vector<CVector>& coeffs() const { return coeffs_; }

  CVector evaluate(Complex z) const;

  double hardy_norm() const;
  /// Rescales to unit Hardy norm; rejects the zero function.
  VectorPolynomial normalized() const;

 private:
  int dim_;
  std::vector<CVector> coeffs_;
};

/// Coefficient conjugation phi#: every Taylor coefficient replaced by its
/// Hilbert-space adjoint, phi#(z) = phi(conj z)^*.
OperatorSymbol conjugate_symbol(const OperatorSymbol& phi);

/// Entrywise coefficient conjugation for test functions.
VectorPolynomial conjugate_coefficients(const VectorPolynomial& f);

double hardy_norm(const VectorPolynomial& f);

}  // namespace hankellab

#endif
