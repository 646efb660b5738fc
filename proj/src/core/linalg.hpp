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

#ifndef HANKELLAB_CORE_LINALG_HPP
#define HANKELLAB_CORE_LINALG_HPP

#include <functional>

#include "core/types.hpp"

namespace hankellab {

struct ExtremalResult {
  double value = 0.0;      // sigma_max or lambda_max
  double residual = 0.0;   // ||M*M v - lambda v|| / lambda (resp. Hermitian analogue)
  int iterations = 0;
  bool converged = false;
  bool used_dense_fallback = false;
};

/// Matrix-free linear map. apply writes M*v into out (sized rows), apply_adjoint
/// writes M^* y into out (sized cols). Used where a section is too large to
/// materialise densely.
struct LinearMap {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::function<void(const CVector&, CVector&)> apply;
  std::function<void(const CVector&, CVector&)> apply_adjoint;
};

/// Largest singular value by power iteration on M*M. Two deterministic starts
/// (normalised all-ones, then one fixed seeded restart); the larger result
/// wins. Falls back to a dense SVD when the iteration has not met tol and
/// max(rows, cols) <= 256. Non-convergence beyond that size is non-fatal and
/// reported through the flags.
ExtremalResult sigma_max(const Matrix& m, double tol = 1e-11, int max_iters = 20000);
ExtremalResult sigma_max(const LinearMap& m, double tol = 1e-11, int max_iters = 20000);

/// Largest eigenvalue of a Hermitian (expected PSD) matrix, same determinism
/// contract as sigma_max. Inputs further than 1e-9 from Hermitian are rejected;
/// smaller asymmetries are symmetrised away before iterating.
ExtremalResult lambda_max_hermitian(const Matrix& m, double tol = 1e-11, int max_iters = 20000);

/// Convenience accessors.
double sigma_max_value(const Matrix& m, double tol = 1e-11, int max_iters = 20000);
double lambda_max_value(const Matrix& m, double tol = 1e-11, int max_iters = 20000);

}  // namespace hankellab

#endif
