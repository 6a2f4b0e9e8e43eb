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

#pragma once

#include <cstdint>
#include <random>

#include "qcs/complex_matrix.hpp"

namespace qcs {

/// Deterministic random source. mt19937_64 supplies the bit stream; the
/// uniform and Gaussian transforms are written out here because the
/// distribution adapters in <random> are implementation defined, and the
/// test fixtures must be byte-identical across standard libraries.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform();

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Matrix of iid complex entries, real and imaginary parts standard
  /// normal. Drawn in row-major order, real part first.
  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Modified Gram-Schmidt on the columns. Requires full column rank
/// (columns <= rows and no degenerate column); throws ValidationError if a
/// column collapses. Returns a matrix with orthonormal columns spanning the
/// same space.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m);

/// Random density operator of the given dimension: G G^dagger normalized,
/// G square Gaussian. Full rank with probability one.
ComplexMatrix random_density(Prng& rng, std::size_t dim);

/// Random rank-one density operator (a Haar-like random pure state).
ComplexMatrix random_pure_density(Prng& rng, std::size_t dim);

}  // namespace qcs
