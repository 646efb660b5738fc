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

#include "core/coefficients.hpp"

#include <cmath>
#include <utility>

namespace hankellab {

namespace {
constexpr double kDiscSlack = 1e-12;

void check_in_disc(Complex z) {
  if (std::abs(z) > 1.0 + kDiscSlack)
    throw std::invalid_argument("evaluate: point lies outside the closed unit disc");
}
}  // namespace

FracOrder::FracOrder(double a) : alpha(a) {
  if (!std::isfinite(a)) throw std::invalid_argument("FracOrder: exponent must be finite");
}

FracOrder FracOrder::strictly_positive(double a) {
  FracOrder o(a);
  if (a <= 0.0) throw std::invalid_argument("FracOrder: exponent must be strictly positive here");
  return o;
}

OperatorSymbol::OperatorSymbol(int dim, std::vector<Matrix> coeffs, bool rank_one_hint)
    : dim_(dim), coeffs_(std::move(coeffs)), rank_one_hint_(rank_one_hint) {
  if (dim_ <= 0) throw std::invalid_argument("OperatorSymbol: dim must be positive");
  if (coeffs_.empty()) throw std::invalid_argument("OperatorSymbol: needs at least one coefficient");
  for (const Matrix& c : coeffs_) {
    if (c.rows() != dim_ || c.cols() != dim_)
      throw DimensionError("OperatorSymbol: coefficient is not dim x dim");
    if (!c.allFinite()) throw std::invalid_argument("OperatorSymbol: non-finite coefficient");
  }
}

OperatorSymbol OperatorSymbol::zero(int dim, int degree) {
  if (degree < 0) throw std::invalid_argument("OperatorSymbol::zero: degree must be >= 0");
  std::vector<Matrix> coeffs(degree + 1, Matrix::Zero(dim, dim));
  return OperatorSymbol(dim, std::move(coeffs));
}

OperatorSymbol OperatorSymbol::scalar(const std::vector<Complex>& taylor) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(taylor.size());
  for (Complex c : taylor) {
    Matrix m(1, 1);
    m(0, 0) = c;
    coeffs.push_back(m);
  }
  return OperatorSymbol(1, std::move(coeffs));
}

OperatorSymbol OperatorSymbol::constant(const Matrix& value) {
  if (value.rows() != value.cols()) throw DimensionError("constant symbol: matrix must be square");
  return OperatorSymbol(static_cast<int>(value.rows()), {value});
}

const Matrix& OperatorSymbol::coeff(int n) const {
  if (n < 0 || n > degree()) throw std::out_of_range("OperatorSymbol::coeff: index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

Matrix OperatorSymbol::coeff_or_zero(int n) const {
  if (n < 0 || n > degree()) return Matrix::Zero(dim_, dim_);
  return coeffs_[static_cast<std::size_t>(n)];
}

Matrix OperatorSymbol::evaluate(Complex z) const {
  check_in_disc(z);
  Matrix acc = coeffs_.back();
  for (int n = degree() - 1; n >= 0; --n) acc = coeffs_[static_cast<std::size_t>(n)] + z * acc;
  return acc;
}

VectorPolynomial::VectorPolynomial(int dim, std::vector<CVector> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  if (dim_ <= 0) throw std::invalid_argument("VectorPolynomial: dim must be positive");
  if (coeffs_.empty())
    throw std::invalid_argument("VectorPolynomial: needs at least one coefficient");
  for (const CVector& c : coeffs_) {
    if (c.size() != dim_) throw DimensionError("VectorPolynomial: coefficient has wrong length");
    if (!c.allFinite()) throw std::invalid_argument("VectorPolynomial: non-finite coefficient");
  }
}

VectorPolynomial VectorPolynomial::zero(int dim, int degree) {
  if (degree < 0) throw std::invalid_argument("VectorPolynomial::zero: degree must be >= 0");
  std::vector<CVector> coeffs(degree + 1, CVector::Zero(dim));
  return VectorPolynomial(dim, std::move(coeffs));
}

VectorPolynomial VectorPolynomial::scalar(const std::vector<Complex>& taylor) {
  std::vector<CVector> coeffs;
  coeffs.reserve(taylor.size());
  for (Complex c : taylor) {
    CVector v(1);
    v(0) = c;
    coeffs.push_back(v);
  }
  return VectorPolynomial(1, std::move(coeffs));
}

VectorPolynomial VectorPolynomial::monomial(int dim, int power, int direction) {
  if (power < 0) throw std::invalid_argument("monomial: power must be >= 0");
  if (direction < 0 || direction >= dim)
    throw std::invalid_argument("monomial: direction out of range");
  VectorPolynomial f = zero(dim, power);
  std::vector<CVector> coeffs = f.coeffs_;
  coeffs[static_cast<std::size_t>(power)](direction) = Complex(1.0, 0.0);
  return VectorPolynomial(dim, std::move(coeffs));
}

const CVector& VectorPolynomial::coeff(int n) const {
  if (n < 0 || n > degree()) throw std::out_of_range("VectorPolynomial::coeff: index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

CVector VectorPolynomial::coeff_or_zero(int n) const {
  if (n < 0 || n > degree()) return CVector::Zero(dim_);
  return coeffs_[static_cast<std::size_t>(n)];
}

CVector VectorPolynomial::evaluate(Complex z) const {
  check_in_disc(z);
  CVector acc = coeffs_.back();
  for (int n = degree() - 1; n >= 0; --n) acc = coeffs_[static_cast<std::size_t>(n)] + z * acc;
  return acc;
}

double VectorPolynomial::hardy_norm() const {
  double sum = 0.0;
  for (const CVector& c : coeffs_) sum += c.squaredNorm();
  return std::sqrt(sum);
}

VectorPolynomial VectorPolynomial::normalized() const {
  double n = hardy_norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero test function");
  std::vector<CVector> coeffs = coeffs_;
  for (CVector& c : coeffs) c /= n;
  return VectorPolynomial(dim_, std::move(coeffs));
}

OperatorSymbol conjugate_symbol(const OperatorSymbol& phi) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(phi.degree()) + 1);
  for (const Matrix& c : phi.coeffs()) coeffs.push_back(c.adjoint());
  return OperatorSymbol(phi.dim(), std::move(coeffs), phi.rank_one_hint());
}

VectorPolynomial conjugate_coefficients(const VectorPolynomial& f) {
  std::vector<CVector> coeffs;
  coeffs.reserve(static_cast<std::size_t>(f.degree()) + 1);
  for (const CVector& c : f.coeffs()) coeffs.push_back(c.conjugate());
  return VectorPolynomial(f.dim(), std::move(coeffs));
}

double hardy_norm(const VectorPolynomial& f) { return f.hardy_norm(); }

}  // namespace hankellab
