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

#ifndef HANKELLAB_CORE_QUADRATURE_HPP
#define HANKELLAB_CORE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace hankellab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [0, 1] (Golub-Welsch). Deterministic.
QuadratureRule gauss_legendre_01(int n);

enum class RadialWeight { OneMinusU, LogOneOverU };  // (1-u)^beta vs (log 1/u)^beta

/// Computes int_0^1 f(u) w(u) du where w(u) = (1-u)^beta or (log(1/u))^beta,
/// beta > -1. Geometrically graded panels toward both endpoints with a fixed
/// Gauss-Legendre rule per panel, so integrable endpoint singularities of the
/// weight are resolved to near machine precision. f is sampled through
/// f(u, one_minus_u); the second argument stays accurate when u is close to 1.
double radial_integral(const std::function<double(double, double)>& f, RadialWeight weight,
                       double beta, int nodes_per_panel = 16);

}  // namespace hankellab

#endif
