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

#ifndef HANKELLAB_CORE_MULTIPLIERS_HPP
#define HANKELLAB_CORE_MULTIPLIERS_HPP

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "core/coefficients.hpp"

namespace hankellab {

/// Factors (1+n)^alpha for n = 0..count-1. Cached per exponent; the returned
/// vector may be longer than requested. Safe for concurrent callers.
std::shared_ptr<const std::vector<double>> power_weights(double alpha, int count);

/// Factors Gamma(1+n+alpha)/Gamma(1+n), alpha > 0, evaluated in log space so
/// large n does not overflow. Cached like power_weights.
std::shared_ptr<const std::vector<double>> gamma_ratio_weights(double alpha, int count);

/// Fractional differentiation: coefficient n multiplied by (1+n)^alpha.
OperatorSymbol apply_D(FracOrder alpha, const OperatorSymbol& s);
VectorPolynomial apply_D(FracOrder alpha, const VectorPolynomial& f);

/// Gamma-ratio variant; requires alpha > 0. Coincides with apply_D at alpha = 1.
OperatorSymbol apply_D_tilde(FracOrder alpha, const OperatorSymbol& s);
VectorPolynomial apply_D_tilde(FracOrder alpha, const VectorPolynomial& f);

/// Smallness constant sup_n (1+n)|lambda_n| over the whole sequence.
double smallness_constant(std::span<const Complex> lambda);

/// Generic diagonal multiplier. lambda must cover every coefficient index of
/// the argument; second member of the result is the smallness constant of the
/// full provided sequence.
std::pair<OperatorSymbol, double> apply_small_multiplier(std::span<const Complex> lambda,
                                                         const OperatorSymbol& s);
std::pair<VectorPolynomial, double> apply_small_multiplier(std::span<const Complex> lambda,
                                                           const VectorPolynomial& f);

}  // namespace hankellab

#endif
