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

#include "core/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hankellab {

namespace {

QuadratureRule build_gauss_legendre_01(int n) {
  // Golub-Welsch on the symmetric Jacobi matrix for Legendre polynomials,
  // then the affine map [-1, 1] -> [0, 1].
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k - 1, k) = b;
    jac(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double w = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (x + 1.0);
    rule.weights[static_cast<std::size_t>(i)] = 0.5 * w;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre_01(int n) {
  if (n <= 0) throw std::invalid_argument("gauss_legendre_01: n must be positive");
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre_01(n)).first;
  return it->second;
}

double radial_integral(const std::function<double(double, double)>& f, RadialWeight weight,
                       double beta, int nodes_per_panel) {
  if (beta <= -1.0) throw std::invalid_argument("radial_integral: beta must exceed -1");
  if (nodes_per_panel < 2) throw std::invalid_argument("radial_integral: too few nodes");

  const QuadratureRule rule = gauss_legendre_01(nodes_per_panel);
  const int k_levels = 80;  // panels down to 2^-81; endpoint tails are then negligible

  auto weight_at = [&](double /*u*/, double one_minus_u) {
    switch (weight) {
      case RadialWeight::OneMinusU:
        return std::pow(one_minus_u, beta);
      case RadialWeight::LogOneOverU:
        // log(1/u) = -log(1 - (1-u)); log1p keeps precision near u = 1.
        return std::pow(-std::log1p(-one_minus_u), beta);
    }
    return 0.0;
  };

  // Panel [a, b] parametrised either by u directly (left half) or by the
  // distance s = 1-u (right half) so the weight singularity at u = 1 is
  // evaluated without cancellation.
  double total = 0.0;
  auto add_panel_left = [&](double a, double b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double u = a + (b - a) * rule.nodes[i];
      acc += rule.weights[i] * f(u, 1.0 - u) * weight_at(u, 1.0 - u);
    }
    total += (b - a) * acc;
  };
  auto add_panel_right = [&](double sa, double sb) {  // s in [sa, sb], u = 1-s
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double s = sa + (sb - sa) * rule.nodes[i];
      acc += rule.weights[i] * f(1.0 - s, s) * weight_at(1.0 - s, s);
    }
    total += (sb - sa) * acc;
  };

  for (int k = 1; k <= k_levels; ++k) {
    double hi = std::ldexp(1.0, -k);       // 2^-k
    double lo = std::ldexp(1.0, -(k + 1));
    add_panel_left(lo, hi);   // u in [2^-(k+1), 2^-k]
    add_panel_right(lo, hi);  // u in [1 - 2^-k, 1 - 2^-(k+1)]
  }
  return total;
}

}  // namespace hankellab
