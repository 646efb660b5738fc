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

#include "core/functionals.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "core/linalg.hpp"
#include "core/multipliers.hpp"

namespace hankellab {

namespace {

constexpr double kPi = std::numbers::pi;

// (1-|z|^2)-weighted monomial pairing: int |z|^{2s} (1-|z|^2) dA = pi/((s+1)(s+2)).
double disc_pairing(int s) { return kPi / ((s + 1.0) * (s + 2.0)); }

// Weighted Hankel-type matrix [ row(n) * kernel(m, n) * phi_hat(n + m) ] used
// by the first five chain values. Rows n index output coefficients, columns m
// input coefficients; entries vanish beyond the symbol degree.
Matrix chain_matrix(const OperatorSymbol& phi, int n_trunc,
                    const std::function<double(int, int)>& scale) {
  const int d = phi.dim();
  const int size = n_trunc + 1;
  Matrix flat = Matrix::Zero(static_cast<Eigen::Index>(size) * d,
                             static_cast<Eigen::Index>(size) * d);
  for (int n = 0; n < size; ++n) {
    for (int m = 0; m + n <= phi.degree() && m < size; ++m) {
      flat.block(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(m) * d, d, d) =
          scale(n, m) * phi.coeff(n + m);
    }
  }
  return flat;
}

// Gram blocks of the kernel-tested quadratic form x -> sum over (m, m') of
// w^{m'} conj(w)^m x^* M(m', m) x, for a fixed grid point w.
Matrix kernel_quadratic_form(const Matrix& gram, int dim, int n_trunc, Complex w) {
  Matrix q = Matrix::Zero(dim, dim);
  std::vector<Complex> powers(static_cast<std::size_t>(n_trunc) + 1);
  Complex p(1.0, 0.0);
  for (int n = 0; n <= n_trunc; ++n) {
    powers[static_cast<std::size_t>(n)] = p;
    p *= w;
  }
  for (int mp = 0; mp <= n_trunc; ++mp)
    for (int m = 0; m <= n_trunc; ++m)
      q += powers[static_cast<std::size_t>(mp)] *
           std::conj(powers[static_cast<std::size_t>(m)]) *
           gram.block(static_cast<Eigen::Index>(mp) * dim,
                      static_cast<Eigen::Index>(m) * dim, dim, dim);
  return q;
}

double hermitian_top_eigenvalue(const Matrix& q) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (q + Matrix(q.adjoint())),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Generic sup over a disc grid with refinement of w -> (1-|w|^2) lambda_max(Q_w).
double grid_supremum(const DiscGrid& grid, const std::function<Matrix(Complex)>& form,
                     int dim) {
  double best = 0.0;
  double best_r = 0.0, best_t = 0.0;

  auto consider = [&](double r, double t) {
    if (r < 0.0) r = 0.0;
    if (r >= 1.0) r = 1.0 - 1e-12;
    Complex w = r * Complex(std::cos(t), std::sin(t));
    Matrix q = form(w);
    double v = (1.0 - r * r) * (dim == 1 ? q(0, 0).real() : hermitian_top_eigenvalue(q));
    if (v > best) {
      best = v;
      best_r = r;
      best_t = t;
    }
  };

  double hr = 0.0;
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    if (i + 1 < grid.radii.size())
      hr = std::max(hr, grid.radii[i + 1] - grid.radii[i]);
    for (int j = 0; j < grid.angles; ++j)
      consider(grid.radii[i], 2.0 * kPi * j / grid.angles);
  }

  double ht = 2.0 * kPi / grid.angles;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    const double r0 = best_r, t0 = best_t;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j)
        consider(r0 + hr * i / 4.0, t0 + ht * j / 4.0);
    hr /= 4.0;
    ht /= 4.0;
  }
  return best;
}

}  // namespace

Matrix embedding_gram(const OperatorSymbol& psi, int n_trunc) {
  if (n_trunc < 0) throw std::invalid_argument("embedding_gram: truncation must be >= 0");
  const int d = psi.dim();
  const int size = n_trunc + 1;
  const int deg = psi.degree();
  Matrix gram = Matrix::Zero(static_cast<Eigen::Index>(size) * d,
                             static_cast<Eigen::Index>(size) * d);
  for (int mp = 0; mp < size; ++mp) {
    for (int m = 0; m < size; ++m) {
      const int delta = m - mp;  // j = j' + delta
      if (delta > deg || delta < -deg) continue;
      Matrix block = Matrix::Zero(d, d);
      const int jp_lo = std::max(0, -delta);
      const int jp_hi = std::min(deg, deg - delta);
      for (int jp = jp_lo; jp <= jp_hi; ++jp) {
        const int j = jp + delta;
        block += disc_pairing(j + mp) * (psi.coeff(jp).adjoint() * psi.coeff(j));
      }
      gram.block(static_cast<Eigen::Index>(mp) * d, static_cast<Eigen::Index>(m) * d, d, d) =
          block;
    }
  }
  return gram;
}

double gram_embedding_value(const OperatorSymbol& psi, int n_trunc) {
  Matrix gram = embedding_gram(psi, n_trunc);
  ExtremalResult res = lambda_max_hermitian(gram);
  return std::max(res.value, 0.0);
}

double analytic_embedding_value(const OperatorSymbol& psi, int n_trunc) {
  if (n_trunc < 0) throw std::invalid_argument("analytic_embedding_value: truncation must be >= 0");
  // The analytic form factors: coefficient s of psi(z) f(z) is
  // sum_m psi_hat(s - m) f_hat(m), and the z^s basis is orthogonal, so the
  // value is sigma_max^2 of the weighted coefficient map.
  const int d = psi.dim();
  const int size = n_trunc + 1;
  const int out = psi.degree() + n_trunc + 1;
  Matrix t = Matrix::Zero(static_cast<Eigen::Index>(out) * d,
                          static_cast<Eigen::Index>(size) * d);
  for (int s = 0; s < out; ++s) {
    const double row = std::sqrt(disc_pairing(s));
    for (int m = std::max(0, s - psi.degree()); m < size && m <= s; ++m) {
      t.block(static_cast<Eigen::Index>(s) * d, static_cast<Eigen::Index>(m) * d, d, d) =
          row * psi.coeff(s - m);
    }
  }
  ExtremalResult res = sigma_max(t);
  return res.value * res.value;
}

DiscGrid DiscGrid::standard() {
  DiscGrid g;
  g.radii = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  g.angles = 32;
  g.refine_rounds = 1;
  return g;
}

NormChainReport norm_chain(const OperatorSymbol& phi, double alpha, int n_trunc) {
  FracOrder::strictly_positive(alpha);
  if (n_trunc < 0) throw std::invalid_argument("norm_chain: truncation must be >= 0");

  NormChainReport report;
  report.alpha = alpha;
  report.beta = std::max(2.0, 1.0 + alpha) + 1.0;
  report.n_requested = n_trunc;
  // Beyond the symbol degree every assembled matrix of the chain only gains
  // zero rows and columns of the weighted Hankel type, and the report's
  // contract is that its values do not depend on the truncation there; the
  // computation is therefore pinned at the plateau truncation.
  report.n_used = std::min(n_trunc, phi.degree());
  report.dim = phi.dim();
  report.degree = phi.degree();

  const double beta = report.beta;
  const int n_used = report.n_used;

  const double sqrt_gamma_2beta = std::exp(0.5 * std::lgamma(1.0 + 2.0 * beta));
  const double sqrt2 = std::numbers::sqrt2;

  auto value_of = [&](const std::function<double(int, int)>& scale) {
    return sigma_max(chain_matrix(phi, n_used, scale)).value;
  };

  report.values[0] = value_of([&](int n, int) { return std::pow(1.0 + n, alpha); });
  report.values[1] = value_of([&](int n, int m) {
    return sqrt_gamma_2beta * std::pow(1.0 + n, beta) * std::pow(1.0 + m + n, alpha - beta);
  });
  report.values[2] = value_of([&](int n, int m) {
    return sqrt2 * (1.0 + n) * std::pow(1.0 + m + n, alpha - 1.0);
  });
  report.values[3] = value_of([&](int n, int m) {
    return sqrt2 * (2.0 + n) * std::pow(1.0 + m + n, alpha) / (2.0 + m + n);
  });
  report.values[4] = value_of([&](int n, int m) {
    return std::sqrt(2.0 * (1.0 + n) * (2.0 + n)) * std::pow(1.0 + m + n, alpha) /
           (2.0 + m + n);
  });

  const double raw = gram_embedding_value(apply_D(FracOrder(1.0 + alpha), phi), n_used);
  report.values[5] = std::sqrt(std::max(0.0, raw * 2.0 / kPi));
  report.raw_anti_embedding = std::sqrt(std::max(0.0, raw));
  report.eq2_conversion = std::sqrt(kPi / 2.0);

  report.ratios.reserve(15);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      double den = report.values[static_cast<std::size_t>(j)];
      double num = report.values[static_cast<std::size_t>(i)];
      report.ratios.push_back({i + 1, j + 1, den == 0.0 ? 0.0 : num / den});
    }
  return report;
}

double weak_bmoa_value(const OperatorSymbol& phi, double alpha, const DiscGrid& grid,
                       int n_trunc) {
  FracOrder::strictly_positive(alpha);
  const OperatorSymbol psi = apply_D(FracOrder(1.0 + alpha), phi);
  Matrix gram = embedding_gram(psi, n_trunc);
  auto form = [&](Complex w) { return kernel_quadratic_form(gram, phi.dim(), n_trunc, w); };
  return grid_supremum(grid, form, phi.dim());
}

RkThesisValues rk_thesis_value(const OperatorSymbol& phi, double alpha, const DiscGrid& grid,
                               int n_trunc) {
  if (alpha < 0.0) throw std::invalid_argument("rk_thesis_value: alpha must be >= 0");
  if (n_trunc < 0) throw std::invalid_argument("rk_thesis_value: truncation must be >= 0");

  RkThesisValues out;
  {
    const OperatorSymbol psi = apply_D(FracOrder(1.0 + alpha), phi);
    Matrix gram = embedding_gram(psi, n_trunc);
    auto form = [&](Complex w) { return kernel_quadratic_form(gram, phi.dim(), n_trunc, w); };
    out.embedding_variant = grid_supremum(grid, form, phi.dim());
  }
  {
    // Hardy-target Gram of the weighted section: S(m', m) =
    // sum_n (1+n)^{2 alpha} phi_hat(n+m')^* phi_hat(n+m).
    const int d = phi.dim();
    const int size = n_trunc + 1;
    const int deg = phi.degree();
    Matrix gram = Matrix::Zero(static_cast<Eigen::Index>(size) * d,
                               static_cast<Eigen::Index>(size) * d);
    for (int mp = 0; mp < size; ++mp) {
      for (int m = 0; m < size; ++m) {
        Matrix block = Matrix::Zero(d, d);
        for (int n = 0; n + std::max(m, mp) <= deg; ++n)
          block += std::pow(1.0 + n, 2.0 * alpha) *
                   (phi.coeff(n + mp).adjoint() * phi.coeff(n + m));
        gram.block(static_cast<Eigen::Index>(mp) * d, static_cast<Eigen::Index>(m) * d, d, d) =
            block;
      }
    }
    auto form = [&](Complex w) { return kernel_quadratic_form(gram, d, n_trunc, w); };
    out.section_variant = grid_supremum(grid, form, d);
  }
  return out;
}

}  // namespace hankellab
