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

#include "core/multipliers.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>

namespace hankellab {

namespace {

struct WeightCache {
  std::mutex mutex;
  std::map<std::uint64_t, std::shared_ptr<std::vector<double>>> table;

  std::shared_ptr<const std::vector<double>> get(double alpha, int count,
                                                 double (*factor)(double, int)) {
    const std::uint64_t key = std::bit_cast<std::uint64_t>(alpha);
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = table[key];
    if (!slot || static_cast<int>(slot->size()) < count) {
      int grow = std::max(count, slot ? static_cast<int>(slot->size()) * 2 : 64);
      auto fresh = std::make_shared<std::vector<double>>();
      fresh->reserve(static_cast<std::size_t>(grow));
      for (int n = 0; n < grow; ++n) fresh->push_back(factor(alpha, n));
      slot = std::move(fresh);
    }
    return slot;
  }
};

double power_factor(double alpha, int n) { return std::pow(1.0 + n, alpha); }

double gamma_ratio_factor(double alpha, int n) {
  return std::exp(std::lgamma(1.0 + n + alpha) - std::lgamma(1.0 + n));
}

WeightCache& power_cache() {
  static WeightCache cache;
  return cache;
}

WeightCache& gamma_cache() {
  static WeightCache cache;
  return cache;
}

template <typename T, typename Coeff>
T remultiplied(const T& s, const std::vector<double>& factors) {
  std::vector<Coeff> coeffs = s.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] *= factors[n];
  return T(s.dim(), std::move(coeffs));
}

}  // namespace

std::shared_ptr<const std::vector<double>> power_weights(double alpha, int count) {
  if (count < 0) throw std::invalid_argument("power_weights: count must be >= 0");
  return power_cache().get(alpha, count, power_factor);
}

std::shared_ptr<const std::vector<double>> gamma_ratio_weights(double alpha, int count) {
  if (count < 0) throw std::invalid_argument("gamma_ratio_weights: count must be >= 0");
  FracOrder::strictly_positive(alpha);
  return gamma_cache().get(alpha, count, gamma_ratio_factor);
}

OperatorSymbol apply_D(FracOrder alpha, const OperatorSymbol& s) {
  auto w = power_weights(alpha.alpha, s.degree() + 1);
  return remultiplied<OperatorSymbol, Matrix>(s, *w);
}

VectorPolynomial apply_D(FracOrder alpha, const VectorPolynomial& f) {
  auto w = power_weights(alpha.alpha, f.degree() + 1);
  return remultiplied<VectorPolynomial, CVector>(f, *w);
}

OperatorSymbol apply_D_tilde(FracOrder alpha, const OperatorSymbol& s) {
  auto w = gamma_ratio_weights(alpha.alpha, s.degree() + 1);
  return remultiplied<OperatorSymbol, Matrix>(s, *w);
}

VectorPolynomial apply_D_tilde(FracOrder alpha, const VectorPolynomial& f) {
  auto w = gamma_ratio_weights(alpha.alpha, f.degree() + 1);
  return remultiplied<VectorPolynomial, CVector>(f, *w);
}

double smallness_constant(std::span<const Complex> lambda) {
  double sup = 0.0;
  for (std::size_t n = 0; n < lambda.size(); ++n)
    sup = std::max(sup, (1.0 + static_cast<double>(n)) * std::abs(lambda[n]));
  return sup;
}

namespace {
template <typename T, typename Coeff>
std::pair<T, double> multiplied_with_constant(std::span<const Complex> lambda, const T& s) {
  if (static_cast<int>(lambda.size()) < s.degree() + 1)
    throw DimensionError("apply_small_multiplier: sequence shorter than coefficient range");
  std::vector<Coeff> coeffs = s.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] *= lambda[n];
  return {T(s.dim(), std::move(coeffs)), smallness_constant(lambda)};
}
}  // namespace

std::pair<OperatorSymbol, double> apply_small_multiplier(std::span<const Complex> lambda,
                                                         const OperatorSymbol& s) {
  return multiplied_with_constant<OperatorSymbol, Matrix>(lambda, s);
}

std::pair<VectorPolynomial, double> apply_small_multiplier(std::span<const Complex> lambda,
                                                           const VectorPolynomial& f) {
  return multiplied_with_constant<VectorPolynomial, CVector>(lambda, f);
}

}  // namespace hankellab
