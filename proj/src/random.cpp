// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/random.hpp"

#include <cmath>

#include "qcs/errors.hpp"

namespace qcs {

double Prng::uniform() {
  // Top 53 bits of the 64-bit word, scaled into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ComplexMatrix Prng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = gaussian();
      const double im = gaussian();
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m) {
  if (m.cols() > m.rows()) {
    throw ShapeError("orthonormalize_columns: more columns than rows");
  }
  ComplexMatrix q = m;
  const std::size_t rows = q.rows();
  const std::size_t cols = q.cols();
  for (std::size_t j = 0; j < cols; ++j) {
    // Two projection passes for numerical orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot(0.0, 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
          dot += std::conj(q(i, k)) * q(i, j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
          q(i, j) -= dot * q(i, k);
        }
      }
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < rows; ++i) norm_sq += std::norm(q(i, j));
    const double norm = std::sqrt(norm_sq);
    if (norm < 1e-12) {
      throw ValidationError(
          "orthonormalize_columns: column is numerically rank deficient");
    }
    for (std::size_t i = 0; i < rows; ++i) q(i, j) = q(i, j) * (1.0 / norm);
  }
  return q;
}

ComplexMatrix random_density(Prng& rng, std::size_t dim) {
  const ComplexMatrix g = rng.gaussian_matrix(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  return rho * Complex(1.0 / tr, 0.0);
}

ComplexMatrix random_pure_density(Prng& rng, std::size_t dim) {
  const ComplexMatrix v = rng.gaussian_matrix(dim, 1);
  ComplexMatrix rho = v * v.adjoint();
  const double tr = rho.trace().real();
  return rho * Complex(1.0 / tr, 0.0);
}

}  // namespace qcs
