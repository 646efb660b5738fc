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

#ifndef HANKELLAB_CORE_HANKEL_HPP
#define HANKELLAB_CORE_HANKEL_HPP

#include <cmath>

#include "core/coefficients.hpp"

namespace hankellab {

/// Diagonal weight applied to block rows or columns of a section: either the
/// identity or n -> (1+n)^alpha. These are the only two compositions used.
class DiagonalWeight {
 public:
  static DiagonalWeight identity() { return DiagonalWeight(false, 0.0); }
  static DiagonalWeight power(double alpha) { return DiagonalWeight(true, alpha); }

  double operator()(int n) const {
    return is_power_ ? std::pow(1.0 + n, exponent_) : 1.0;
  }
  bool is_identity() const { return !is_power_; }
  double exponent() const { return exponent_; }

 private:
  DiagonalWeight(bool is_power, double exponent) : is_power_(is_power), exponent_(exponent) {}
  bool is_power_;
  double exponent_;
};

/// Finite section of a (possibly weighted) vector-valued Hankel operator:
/// block (m, n) = w_left(m) phi_hat(m+n) w_right(n), stored as one dense
/// (N+1)d x (N+1)d matrix. Blocks beyond the symbol degree are zero.
class HankelSection {
 public:
  static HankelSection assemble(const OperatorSymbol& phi, int n_trunc,
                                DiagonalWeight left = DiagonalWeight::identity(),
                                DiagonalWeight right = DiagonalWeight::identity());

  int dim() const { return dim_; }
  int block_count() const { return size_; }  // N + 1
  int symbol_degree() const { return symbol_degree_; }
  const Matrix& flat() const { return flat_; }
  Eigen::Block<const Matrix> block(int m, int n) const;

  /// Truncated Hankel action: coefficient n of the output is
  /// sum_m block(n, m) f_hat(m). Requires dim(f) == dim and degree(f) <= N.
  VectorPolynomial apply(const VectorPolynomial& f) const;

 private:
  HankelSection(int dim, int size, int symbol_degree, Matrix flat);
  int dim_;
  int size_;
  int symbol_degree_;
  Matrix flat_;
};

/// Max block-entry difference between the section of Gamma_phi D^alpha and the
/// adjoint of the section of D^alpha Gamma_{phi#}. The identity is exact, so
/// the result is numerical noise only.
double adjoint_residual(const OperatorSymbol& phi, FracOrder alpha, int n_trunc);

/// Max block-entry magnitude of Gamma_{D phi} - D Gamma_phi - (D Gamma_{phi#})^* + Gamma_phi
/// on the (N+1)-section. Exact identity: (1+m) + (1+n) - 1 = 1 + m + n.
double leibniz_residual(const OperatorSymbol& phi, int n_trunc);

}  // namespace hankellab

#endif
