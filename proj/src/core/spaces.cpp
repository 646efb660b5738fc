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

#include "core/spaces.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/multipliers.hpp"
#include "core/quadrature.hpp"

namespace hankellab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double operator_norm_at(const OperatorSymbol& sym, Complex z) {
  Matrix value = sym.evaluate(z);
  if (value.rows() == 1) return std::abs(value(0, 0));
  Eigen::JacobiSVD<Matrix> svd(value);
  return svd.singularValues()(0);
}

RadialWeight radial_weight_of(WeightFlavor flavor) {
  return flavor == WeightFlavor::Standard ? RadialWeight::OneMinusU : RadialWeight::LogOneOverU;
}

double wrap_unit(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace

WeightSpec::WeightSpec(double beta_, WeightFlavor flavor_, int p_)
    : beta(beta_), flavor(flavor_), p(p_) {
  if (!(beta > -1.0)) throw std::invalid_argument("WeightSpec: beta must exceed -1");
  if (p != 1 && p != 2) throw std::invalid_argument("WeightSpec: p must be 1 or 2");
}

GridMeasure::GridMeasure(std::vector<Atom> atoms_) : atoms(std::move(atoms_)) {
  for (const Atom& a : atoms) {
    if (!(std::abs(a.point) < 1.0))
      throw std::invalid_argument("GridMeasure: atoms must lie in the open disc");
    if (!(a.mass >= 0.0)) throw std::invalid_argument("GridMeasure: masses must be >= 0");
  }
}

double bergman_norm_parseval(const VectorPolynomial& f, const WeightSpec& w) {
  if (w.p != 2) throw std::invalid_argument("bergman_norm_parseval: defined for p = 2 only");
  double sum = 0.0;
  if (w.flavor == WeightFlavor::Logarithmic) {
    const double gamma2b = std::exp(std::lgamma(2.0 + w.beta));
    for (int k = 0; k <= f.degree(); ++k)
      sum += gamma2b * f.coeff(k).squaredNorm() / std::pow(1.0 + k, 1.0 + w.beta);
  } else {
    for (int k = 0; k <= f.degree(); ++k) {
      double inv_binom = std::exp(std::lgamma(2.0 + w.beta) + std::lgamma(1.0 + k) -
                                  std::lgamma(2.0 + w.beta + k));
      sum += inv_binom * f.coeff(k).squaredNorm();
    }
  }
  return std::sqrt(sum);
}

double bergman_norm_quadrature(const VectorPolynomial& f, const WeightSpec& w,
                               const QuadratureSpec& q) {
  const RadialWeight rw = radial_weight_of(w.flavor);
  if (w.p == 2) {
    // Angular integration is exact by monomial orthogonality; only the radial
    // profile sum_k ||f_hat(k)||^2 u^k is quadratured.
    std::vector<double> sq(static_cast<std::size_t>(f.degree()) + 1);
    for (int k = 0; k <= f.degree(); ++k)
      sq[static_cast<std::size_t>(k)] = f.coeff(k).squaredNorm();
    auto profile = [&sq](double u, double) {
      double acc = 0.0;
      for (std::size_t k = sq.size(); k-- > 0;) acc = sq[k] + u * acc;
      return acc;
    };
    double integral = (1.0 + w.beta) * radial_integral(profile, rw, w.beta, q.radial_nodes);
    return std::sqrt(std::max(integral, 0.0));
  }

  const int needed = 8 * (f.degree() + 1);
  const int angular = q.angular_points == 0 ? needed : q.angular_points;
  if (angular < needed)
    throw std::invalid_argument("bergman_norm_quadrature: insufficient angular nodes for p = 1");

  std::vector<Complex> phases(static_cast<std::size_t>(angular));
  for (int j = 0; j < angular; ++j) {
    double t = kTwoPi * j / angular;
    phases[static_cast<std::size_t>(j)] = Complex(std::cos(t), std::sin(t));
  }
  auto profile = [&](double u, double) {
    double r = std::sqrt(std::min(u, 1.0));
    double acc = 0.0;
    for (const Complex& e : phases) acc += f.evaluate(r * e).norm();
    return acc / angular;
  };
  return (1.0 + w.beta) * radial_integral(profile, rw, w.beta, q.radial_nodes);
}

double monomial_a1log_norm(int monomial_degree, double alpha) {
  if (monomial_degree < 0) throw std::invalid_argument("monomial_a1log_norm: degree must be >= 0");
  FracOrder::strictly_positive(alpha);
  return std::exp(alpha * std::numbers::ln2 + std::lgamma(1.0 + alpha) -
                  alpha * std::log(2.0 + monomial_degree));
}

VectorPolynomial bergman_project(const OperatorSymbol& phi, const VectorPolynomial& f,
                                 const WeightSpec& w) {
  if (w.p != 2) throw std::invalid_argument("bergman_project: defined for p = 2 only");
  if (phi.dim() != f.dim()) throw DimensionError("bergman_project: dimension mismatch");

  const int out_degree = phi.degree();
  std::vector<CVector> coeffs(static_cast<std::size_t>(out_degree) + 1,
                              CVector::Zero(phi.dim()));
  for (int n = 0; n <= out_degree; ++n) {
    for (int m = 0; m <= f.degree() && m + n <= phi.degree(); ++m) {
      double c;
      if (w.flavor == WeightFlavor::Logarithmic) {
        c = std::pow((1.0 + n) / (1.0 + m + n), 1.0 + w.beta);
      } else {
        c = std::exp(std::lgamma(1.0 + m + n) + std::lgamma(2.0 + w.beta + n) -
                     std::lgamma(2.0 + w.beta + m + n) - std::lgamma(1.0 + n));
      }
      coeffs[static_cast<std::size_t>(n)] += c * (phi.coeff(m + n) * f.coeff(m));
    }
  }
  return VectorPolynomial(phi.dim(), std::move(coeffs));
}

BlochEstimate bloch_norm(const OperatorSymbol& phi, int radial_levels, int angular_points,
                         int refine_rounds) {
  if (radial_levels < 2 || angular_points < 4)
    throw std::invalid_argument("bloch_norm: grid too coarse");

  const OperatorSymbol dphi = apply_D(FracOrder(1.0), phi);
  BlochEstimate best;
  double best_r = 0.0, best_t = 0.0;

  auto consider = [&](double r, double t) {
    if (r < 0.0) r = 0.0;
    if (r > 1.0) r = 1.0;
    Complex z = r * Complex(std::cos(t), std::sin(t));
    double v = (1.0 - r * r) * operator_norm_at(dphi, z);
    if (v > best.value) {
      best.value = v;
      best.argmax = z;
      best_r = r;
      best_t = t;
    }
  };

  for (int i = 0; i < radial_levels; ++i)
    for (int j = 0; j < angular_points; ++j)
      consider(static_cast<double>(i) / radial_levels, kTwoPi * j / angular_points);

  double hr = 1.0 / radial_levels;
  double ht = kTwoPi / angular_points;
  for (int round = 0; round < refine_rounds; ++round) {
    const double r0 = best_r, t0 = best_t;
    for (int i = -8; i <= 8; ++i)
      for (int j = -8; j <= 8; ++j)
        consider(r0 + hr * i / 8.0, t0 + ht * j / 8.0);
    hr /= 8.0;
    ht /= 8.0;
  }
  return best;
}

VectorPolynomial reproducing_kernel(Complex w, int n_trunc) {
  if (!(std::abs(w) < 1.0))
    throw std::invalid_argument("reproducing_kernel: point must lie in the open disc");
  if (n_trunc < 0) throw std::invalid_argument("reproducing_kernel: truncation must be >= 0");
  std::vector<Complex> coeffs(static_cast<std::size_t>(n_trunc) + 1);
  Complex wc = std::conj(w);
  Complex p(1.0, 0.0);
  for (int n = 0; n <= n_trunc; ++n) {
    coeffs[static_cast<std::size_t>(n)] = p;
    p *= wc;
  }
  return VectorPolynomial::scalar(coeffs);
}

double carleson_intensity(const GridMeasure& mu, int levels) {
  if (levels < 4) throw std::invalid_argument("carleson_intensity: arc resolution must be >= 4");
  if (mu.atoms.empty()) return 0.0;

  struct Polar {
    double radius;
    double angle_frac;  // arg / 2pi in [0, 1); meaningless when radius == 0
    double mass;
  };
  std::vector<Polar> atoms;
  atoms.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms)
    atoms.push_back({std::abs(a.point), wrap_unit(std::arg(a.point) / kTwoPi), a.mass});

  double best = 0.0;

  // Full circle: the box is the punctured disc.
  {
    double mass = 0.0;
    for (const Polar& a : atoms)
      if (a.radius > 0.0) mass += a.mass;
    best = std::max(best, mass);
  }

  for (int k = 1; k <= levels; ++k) {
    const double len = std::ldexp(1.0, -k);
    const double inner = 1.0 - len;

    // Dyadic positions: bucket atoms by arc index.
    std::vector<double> bucket(static_cast<std::size_t>(1) << k, 0.0);
    for (const Polar& a : atoms) {
      if (!(a.radius > inner)) continue;
      auto idx = static_cast<std::size_t>(a.angle_frac / len);
      if (idx >= bucket.size()) idx = bucket.size() - 1;
      bucket[idx] += a.mass;
    }
    for (double mass : bucket) best = std::max(best, mass / len);

    // Arcs of the same length centred at each atom argument.
    for (const Polar& centre : atoms) {
      if (centre.radius == 0.0) continue;
      const double start = wrap_unit(centre.angle_frac - 0.5 * len);
      double mass = 0.0;
      for (const Polar& a : atoms) {
        if (!(a.radius > inner)) continue;
        double rel = a.angle_frac - start;
        if (rel < 0.0) rel += 1.0;
        if (rel < len) mass += a.mass;
      }
      best = std::max(best, mass / len);
    }
  }
  return best;
}

}  // namespace hankellab
