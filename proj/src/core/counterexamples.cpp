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

#include "core/counterexamples.hpp"

#include <cmath>
#include <numbers>

#include "core/hankel.hpp"
#include "core/linalg.hpp"
#include "core/multipliers.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"
#include "core/spaces.hpp"

namespace hankellab {

std::vector<double> Dp1Config::beta(int count) const {
  FracOrder::strictly_positive(alpha);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    switch (rule) {
      case BetaRule::Default:
        out[static_cast<std::size_t>(n)] = std::pow(1.0 + n, -alpha - 0.5);
        break;
      case BetaRule::PowerLaw:
        out[static_cast<std::size_t>(n)] = std::pow(1.0 + n, -power_exponent);
        break;
      case BetaRule::Zero:
        out[static_cast<std::size_t>(n)] = 0.0;
        break;
    }
  }
  return out;
}

Dp1ClosedForm dp1_closed_form(const Dp1Config& cfg) {
  const int n = cfg.n_trunc;
  const std::vector<double> beta = cfg.beta(n + 1);

  Dp1ClosedForm out;
  out.gamma_sq.resize(static_cast<std::size_t>(n) + 1);
  out.weighted_gamma_sq.resize(static_cast<std::size_t>(n) + 1);
  out.column_sums.resize(static_cast<std::size_t>(n) + 1);

  // gamma_n^2 accumulated back to front for accuracy.
  double acc = 0.0;
  for (int k = n; k >= 0; --k) {
    acc += beta[static_cast<std::size_t>(k)] * beta[static_cast<std::size_t>(k)];
    out.gamma_sq[static_cast<std::size_t>(k)] = acc;
  }
  double best_right = -1.0;
  for (int k = 0; k <= n; ++k) {
    double v = std::pow(1.0 + k, 2.0 * cfg.alpha) * out.gamma_sq[static_cast<std::size_t>(k)];
    out.weighted_gamma_sq[static_cast<std::size_t>(k)] = v;
    if (v > best_right) {
      best_right = v;
      out.right_argmax = k;
    }
  }
  out.right_norm = std::sqrt(std::max(best_right, 0.0));

  // Integral comparison for the dropped tail of gamma_0^2 under the default
  // power-law rule: sum_{k > N} (1+k)^(-2 alpha - 1) <= (1+N)^(-2 alpha)/(2 alpha).
  if (cfg.rule == Dp1Config::BetaRule::Default) {
    out.right_tail_bound = std::pow(1.0 + n, -2.0 * cfg.alpha) / (2.0 * cfg.alpha);
  } else if (cfg.rule == Dp1Config::BetaRule::PowerLaw && cfg.power_exponent > 0.5) {
    double q = 2.0 * cfg.power_exponent - 1.0;
    out.right_tail_bound = std::pow(1.0 + n, -q) / q;
  }

  double best_left = -1.0;
  for (int k = 0; k <= n; ++k) {
    double sum = 0.0;
    for (int j = n - k; j >= 0; --j)
      sum += std::pow(1.0 + j, 2.0 * cfg.alpha) * beta[static_cast<std::size_t>(j + k)] *
             beta[static_cast<std::size_t>(j + k)];
    out.column_sums[static_cast<std::size_t>(k)] = sum;
    if (sum > best_left) {
      best_left = sum;
      out.left_argmax = k;
    }
  }
  out.left_lower = std::sqrt(std::max(best_left, 0.0));
  return out;
}

namespace {

// X = [beta_{m+n} e_{m+n}] from scalar Hardy space into the vector-valued one,
// truncated with d = N + 1. Rows are packed over the pairs (m, j) with
// m <= j <= N (every other row is identically zero); column of the single
// nonzero in row (m, j) is n = j - m. Weight rules multiply (1+m)^wl on the
// left and (1+n)^wr on the right.
struct Dp1SectionMap {
  int n_trunc;
  std::vector<double> beta;
  double left_exponent;
  double right_exponent;

  Eigen::Index packed_rows() const {
    auto n = static_cast<Eigen::Index>(n_trunc) + 1;
    return n * (n + 1) / 2;
  }
  Eigen::Index row_offset(int m) const {
    auto nn = static_cast<Eigen::Index>(n_trunc) + 1;
    auto mm = static_cast<Eigen::Index>(m);
    return mm * nn - mm * (mm - 1) / 2;
  }

  LinearMap map(std::shared_ptr<const std::vector<double>> wl,
                std::shared_ptr<const std::vector<double>> wr) const {
    LinearMap lm;
    lm.rows = packed_rows();
    lm.cols = n_trunc + 1;
    const int n = n_trunc;
    const auto* b = &beta;
    lm.apply = [this, n, b, wl, wr](const CVector& v, CVector& out) {
      out.setZero();
      for (int m = 0; m <= n; ++m) {
        const Eigen::Index base = row_offset(m);
        const double wlm = (*wl)[static_cast<std::size_t>(m)];
        for (int j = m; j <= n; ++j)
          out(base + (j - m)) = wlm * (*b)[static_cast<std::size_t>(j)] *
                                (*wr)[static_cast<std::size_t>(j - m)] * v(j - m);
      }
    };
    lm.apply_adjoint = [this, n, b, wl, wr](const CVector& y, CVector& out) {
      out.setZero();
      for (int m = 0; m <= n; ++m) {
        const Eigen::Index base = row_offset(m);
        const double wlm = (*wl)[static_cast<std::size_t>(m)];
        for (int j = m; j <= n; ++j)
          out(j - m) += wlm * (*b)[static_cast<std::size_t>(j)] *
                        (*wr)[static_cast<std::size_t>(j - m)] * y(base + (j - m));
      }
    };
    return lm;
  }
};

}  // namespace

std::vector<Dp1SectionNorms> dp1_section_norms(const Dp1Config& base,
                                               std::span<const int> n_list) {
  std::vector<Dp1SectionNorms> rows(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const int n = n_list[i];
    if (n < 0) throw std::invalid_argument("dp1_section_norms: truncation must be >= 0");
    Dp1Config cfg = base;
    cfg.n_trunc = n;

    Dp1SectionMap section;
    section.n_trunc = n;
    section.beta = cfg.beta(n + 1);

    auto unit = power_weights(0.0, n + 1);
    auto powered = power_weights(cfg.alpha, n + 1);

    ExtremalResult xd = sigma_max(section.map(unit, powered));
    ExtremalResult dx = sigma_max(section.map(powered, unit));

    rows[i].n_trunc = n;
    rows[i].sigma_xd = xd.value;
    rows[i].sigma_dx = dx.value;
    rows[i].converged = xd.converged && dx.converged;
  }
  return rows;
}

Matrix schur_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("schur_product: shape mismatch");
  return a.cwiseProduct(b);
}

Matrix dp2_schur_matrix(double alpha, int n_trunc) {
  FracOrder::strictly_positive(alpha);
  if (n_trunc < 0) throw std::invalid_argument("dp2_schur_matrix: truncation must be >= 0");
  const int size = n_trunc + 1;
  Matrix b(size, size);
  for (int m = 0; m < size; ++m)
    for (int n = 0; n < size; ++n)
      b(m, n) = std::pow((1.0 + m) / (1.0 + m + n), alpha);
  return b;
}

std::vector<SchurWitness> dp2_witness_family(int n_trunc, std::uint64_t seed,
                                             int gaussian_draws) {
  const int size = n_trunc + 1;
  std::vector<SchurWitness> family;
  family.reserve(static_cast<std::size_t>(gaussian_draws) + 3);

  family.push_back({"ones", Matrix::Constant(size, size, Complex(1.0, 0.0))});

  Matrix hilbert(size, size);
  for (int m = 0; m < size; ++m)
    for (int n = 0; n < size; ++n) hilbert(m, n) = 1.0 / (1.0 + m + n);
  family.push_back({"hilbert", hilbert});

  Matrix upper = Matrix::Zero(size, size);
  for (int m = 0; m < size; ++m)
    for (int n = m; n < size; ++n) upper(m, n) = 1.0;
  family.push_back({"uppertri", upper});

  std::vector<Matrix> draws(static_cast<std::size_t>(gaussian_draws));
  parallel_for(static_cast<std::size_t>(gaussian_draws), [&](std::size_t k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n_trunc), k + 1));
    Matrix g(size, size);
    for (int m = 0; m < size; ++m)
      for (int n = 0; n < size; ++n) g(m, n) = rng.next_complex_normal();
    draws[k] = std::move(g);
  });
  for (int k = 0; k < gaussian_draws; ++k)
    family.push_back({"gauss[" + std::to_string(k) + "]",
                      std::move(draws[static_cast<std::size_t>(k)])});

  // Normalise to unit operator norm. Ratios are scale-invariant; this keeps
  // the emitted witnesses directly comparable.
  for (SchurWitness& w : family) {
    double s = sigma_max(w.matrix, 1e-9).value;
    if (s > 0.0) w.matrix /= s;
  }
  return family;
}

SchurBound schur_lower_bound(const Matrix& b, std::span<const SchurWitness> family,
                             double tol) {
  if (family.empty()) throw std::invalid_argument("schur_lower_bound: empty family");
  SchurBound out;
  out.ratios.resize(family.size());
  std::vector<double> values(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    const SchurWitness& w = family[i];
    double denom = sigma_max(w.matrix, tol).value;
    double numer = sigma_max(schur_product(b, w.matrix), tol).value;
    values[i] = denom == 0.0 ? 0.0 : numer / denom;
  });
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.ratios[i] = {family[i].id, values[i]};
    if (values[i] > out.value) {
      out.value = values[i];
      out.witness = family[i].id;
    }
  }
  return out;
}

OperatorSymbol dp2_symbol_from_matrix(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("dp2_symbol_from_matrix: matrix must be square");
  const int size = static_cast<int>(a.rows());
  const int degree = 2 * (size - 1);
  std::vector<Matrix> coeffs(static_cast<std::size_t>(degree) + 1, Matrix::Zero(size, size));
  for (int k = 0; k < size; ++k)
    for (int l = 0; l < size; ++l) coeffs[static_cast<std::size_t>(k + l)](k, l) = a(k, l);
  return OperatorSymbol(size, std::move(coeffs));
}

double dp2_compression_check(const Matrix& a, double alpha) {
  FracOrder::strictly_positive(alpha);
  const int n = static_cast<int>(a.rows()) - 1;
  const OperatorSymbol phi = dp2_symbol_from_matrix(a);
  const OperatorSymbol damped = apply_D(FracOrder(-alpha), phi);
  const HankelSection section = HankelSection::assemble(
      damped, n, DiagonalWeight::power(alpha), DiagonalWeight::identity());

  const Matrix b = dp2_schur_matrix(alpha, n);
  const int d = phi.dim();
  double residual = 0.0;
  for (int m = 0; m <= n; ++m)
    for (int nn = 0; nn <= n; ++nn) {
      Complex compressed = section.flat()(static_cast<Eigen::Index>(m) * d + m,
                                          static_cast<Eigen::Index>(nn) * d + nn);
      residual = std::max(residual, std::abs(compressed - b(m, nn) * a(m, nn)));
    }
  return residual;
}

OrderControlResult order_control_ratio(const OperatorSymbol& psi, double alpha, int l,
                                       int n_trunc) {
  FracOrder::strictly_positive(alpha);
  if (l < 1) throw std::invalid_argument("order_control_ratio: shift order must be >= 1");

  OrderControlResult out;
  out.bloch = bloch_norm(psi).value;
  if (out.bloch == 0.0) throw std::invalid_argument("order_control_ratio: zero Bloch norm");

  const OperatorSymbol damped = apply_D(FracOrder(-alpha - l), psi);
  const HankelSection section = HankelSection::assemble(
      damped, n_trunc, DiagonalWeight::power(alpha), DiagonalWeight::power(static_cast<double>(l)));
  out.sigma = sigma_max(section.flat()).value;
  out.ratio = out.sigma / (l * out.bloch);
  return out;
}

PrimitiveNormCheck primitive_norm_check(double alpha, int l, int n_zero) {
  FracOrder::strictly_positive(alpha);
  if (l < 1) throw std::invalid_argument("primitive_norm_check: shift order must be >= 1");
  if (n_zero < 0) throw std::invalid_argument("primitive_norm_check: zero order must be >= 0");

  PrimitiveNormCheck out;
  out.lhs = std::pow(1.0 + n_zero, -static_cast<double>(l)) *
            monomial_a1log_norm(n_zero, alpha);
  const double prefactor = std::exp(std::lgamma(1.0 + alpha) - l * std::numbers::ln2 -
                                    std::lgamma(1.0 + alpha + l));
  out.rhs = prefactor * std::pow((2.0 + n_zero) / (1.0 + n_zero), static_cast<double>(l)) *
            monomial_a1log_norm(n_zero, alpha + l);
  const double scale = std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
  out.rel_gap = std::abs(out.lhs - out.rhs) / scale;
  return out;
}

OperatorSymbol lacunary_symbol(int top_level) {
  if (top_level < 0) throw std::invalid_argument("lacunary_symbol: level must be >= 0");
  const int degree = 1 << top_level;
  std::vector<Complex> taylor(static_cast<std::size_t>(degree) + 1, Complex(0.0, 0.0));
  for (int k = 0; k <= top_level; ++k) taylor[static_cast<std::size_t>(1 << k)] = 1.0;
  return OperatorSymbol::scalar(taylor);
}

}  // namespace hankellab
