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

#include "core/hankel.hpp"

#include <utility>

#include "core/multipliers.hpp"
#include "core/parallel.hpp"

namespace hankellab {

HankelSection::HankelSection(int dim, int size, int symbol_degree, Matrix flat)
    : dim_(dim), size_(size), symbol_degree_(symbol_degree), flat_(std::move(flat)) {}

HankelSection HankelSection::assemble(const OperatorSymbol& phi, int n_trunc,
                                      DiagonalWeight left, DiagonalWeight right) {
  if (n_trunc < 0) throw std::invalid_argument("HankelSection: truncation must be >= 0");
  const int d = phi.dim();
  const int size = n_trunc + 1;
  Matrix flat = Matrix::Zero(static_cast<Eigen::Index>(size) * d,
                             static_cast<Eigen::Index>(size) * d);

  parallel_for(static_cast<std::size_t>(size), [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    const double wl = left(m);
    const int n_max = std::min(n_trunc, phi.degree() - m);
    for (int n = 0; n <= n_max; ++n) {
      flat.block(static_cast<Eigen::Index>(m) * d, static_cast<Eigen::Index>(n) * d, d, d) =
          (wl * right(n)) * phi.coeff(m + n);
    }
  });
  return HankelSection(d, size, phi.degree(), std::move(flat));
}

Eigen::Block<const Matrix> HankelSection::block(int m, int n) const {
  if (m < 0 || m >= size_ || n < 0 || n >= size_)
    throw std::out_of_range("HankelSection::block: index out of range");
  return flat_.block(static_cast<Eigen::Index>(m) * dim_, static_cast<Eigen::Index>(n) * dim_,
                     dim_, dim_);
}

VectorPolynomial HankelSection::apply(const VectorPolynomial& f) const {
  if (f.dim() != dim_) throw DimensionError("HankelSection::apply: dimension mismatch");
  if (f.degree() > size_ - 1)
    throw DimensionError("HankelSection::apply: test function degree exceeds the section");

  CVector packed = CVector::Zero(static_cast<Eigen::Index>(size_) * dim_);
  for (int n = 0; n <= f.degree(); ++n)
    packed.segment(static_cast<Eigen::Index>(n) * dim_, dim_) = f.coeff(n);

  CVector out = flat_ * packed;
  std::vector<CVector> coeffs(static_cast<std::size_t>(size_));
  for (int n = 0; n < size_; ++n)
    coeffs[static_cast<std::size_t>(n)] = out.segment(static_cast<Eigen::Index>(n) * dim_, dim_);
  return VectorPolynomial(dim_, std::move(coeffs));
}

double adjoint_residual(const OperatorSymbol& phi, FracOrder alpha, int n_trunc) {
  HankelSection lhs =
      HankelSection::assemble(phi, n_trunc, DiagonalWeight::identity(),
                              DiagonalWeight::power(alpha.alpha));
  HankelSection rhs =
      HankelSection::assemble(conjugate_symbol(phi), n_trunc, DiagonalWeight::power(alpha.alpha),
                              DiagonalWeight::identity());
  return (lhs.flat() - Matrix(rhs.flat().adjoint())).cwiseAbs().maxCoeff();
}

double leibniz_residual(const OperatorSymbol& phi, int n_trunc) {
  const FracOrder one(1.0);
  HankelSection gamma_dphi = HankelSection::assemble(apply_D(one, phi), n_trunc);
  HankelSection d_gamma =
      HankelSection::assemble(phi, n_trunc, DiagonalWeight::power(1.0), DiagonalWeight::identity());
  HankelSection d_gamma_sharp =
      HankelSection::assemble(conjugate_symbol(phi), n_trunc, DiagonalWeight::power(1.0),
                              DiagonalWeight::identity());
  HankelSection gamma = HankelSection::assemble(phi, n_trunc);

  Matrix resid = gamma_dphi.flat() - d_gamma.flat() -
                 Matrix(d_gamma_sharp.flat().adjoint()) + gamma.flat();
  return resid.cwiseAbs().maxCoeff();
}

}  // namespace hankellab
