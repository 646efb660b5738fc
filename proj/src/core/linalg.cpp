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

#include "core/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace hankellab {

namespace {

constexpr std::uint64_t kRestartSeed = 0x68616e6b656c6cULL;

CVector ones_start(Eigen::Index n) {
  CVector v = CVector::Constant(n, Complex(1.0, 0.0));
  v /= v.norm();
  return v;
}

CVector random_start(Eigen::Index n) {
  Rng rng(mix_seed(kRestartSeed, static_cast<std::uint64_t>(n)));
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.next_complex_normal();
  double nv = v.norm();
  if (nv == 0.0) return ones_start(n);
  return v / nv;
}

// Power iteration for the largest eigenvalue of M*M, expressed through the
// map's apply/apply_adjoint. v stays unit-norm in the domain.
ExtremalResult power_iterate_gram(const LinearMap& m, CVector v, double tol, int max_iters) {
  ExtremalResult res;
  CVector y(m.rows);
  CVector z(m.cols);
  double lambda = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    res.iterations = it;
    m.apply(v, y);
    lambda = y.squaredNorm();
    if (lambda == 0.0) {
      res.value = 0.0;
      res.residual = 0.0;
      res.converged = true;
      return res;
    }
    m.apply_adjoint(y, z);
    res.residual = (z - lambda * v).norm() / lambda;
    res.value = std::sqrt(lambda);
    if (res.residual <= tol) {
      res.converged = true;
      return res;
    }
    double nz = z.norm();
    if (nz == 0.0) {
      res.converged = true;
      return res;
    }
    v = z / nz;
  }
  return res;
}

ExtremalResult best_of_two(const ExtremalResult& a, const ExtremalResult& b) {
  if (a.converged != b.converged) {
    // Prefer a converged run unless the other one found something clearly larger.
    const ExtremalResult& conv = a.converged ? a : b;
    const ExtremalResult& other = a.converged ? b : a;
    return other.value > conv.value * (1.0 + 10.0 * conv.residual) ? other : conv;
  }
  return b.value > a.value ? b : a;
}

LinearMap dense_map(const Matrix& m) {
  LinearMap map;
  map.rows = m.rows();
  map.cols = m.cols();
  map.apply = [&m](const CVector& v, CVector& out) { out.noalias() = m * v; };
  map.apply_adjoint = [&m](const CVector& y, CVector& out) { out.noalias() = m.adjoint() * y; };
  return map;
}

}  // namespace

ExtremalResult sigma_max(const LinearMap& m, double tol, int max_iters) {
  if (tol <= 0.0) throw std::invalid_argument("sigma_max: tol must be positive");
  if (m.rows == 0 || m.cols == 0) {
    ExtremalResult res;
    res.converged = true;
    return res;
  }
  ExtremalResult a = power_iterate_gram(m, ones_start(m.cols), tol, max_iters);
  ExtremalResult b = power_iterate_gram(m, random_start(m.cols), tol, max_iters);
  return best_of_two(a, b);
}

ExtremalResult sigma_max(const Matrix& m, double tol, int max_iters) {
  ExtremalResult res = sigma_max(dense_map(m), tol, max_iters);
  if (!res.converged && std::max(m.rows(), m.cols()) <= 256) {
    Eigen::BDCSVD<Matrix> svd(m);
    res.value = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    res.residual = 0.0;
    res.converged = true;
    res.used_dense_fallback = true;
  }
  return res;
}

ExtremalResult lambda_max_hermitian(const Matrix& m, double tol, int max_iters) {
  if (tol <= 0.0) throw std::invalid_argument("lambda_max_hermitian: tol must be positive");
  if (m.rows() != m.cols()) throw std::invalid_argument("lambda_max_hermitian: matrix not square");
  if (m.rows() == 0) {
    ExtremalResult res;
    res.converged = true;
    return res;
  }
  double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-9) throw std::invalid_argument("lambda_max_hermitian: input is not Hermitian");

  Matrix h = 0.5 * (m + Matrix(m.adjoint()));

  auto iterate = [&](CVector v) {
    ExtremalResult res;
    CVector y(h.rows());
    double lambda = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
      res.iterations = it;
      y.noalias() = h * v;
      lambda = v.dot(y).real();
      double ny = y.norm();
      if (ny == 0.0) {
        res.value = 0.0;
        res.residual = 0.0;
        res.converged = true;
        return res;
      }
      res.residual = (y - lambda * v).norm() / std::max(std::abs(lambda), 1e-300);
      res.value = lambda;
      if (res.residual <= tol) {
        res.converged = true;
        return res;
      }
      v = y / ny;
    }
    return res;
  };

  ExtremalResult a = iterate(ones_start(h.cols()));
  ExtremalResult b = iterate(random_start(h.cols()));
  ExtremalResult res = best_of_two(a, b);
  if (!res.converged && h.rows() <= 256) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    res.value = es.eigenvalues().maxCoeff();
    res.residual = 0.0;
    res.converged = true;
    res.used_dense_fallback = true;
  }
  return res;
}

double sigma_max_value(const Matrix& m, double tol, int max_iters) {
  return sigma_max(m, tol, max_iters).value;
}

double lambda_max_value(const Matrix& m, double tol, int max_iters) {
  return lambda_max_hermitian(m, tol, max_iters).value;
}

}  // namespace hankellab
