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

#include <cstddef>
#include <vector>

#include "qcs/complex_matrix.hpp"

namespace qcs {

/// Numerical thresholds used by validation and spectral routines. Every
/// checking routine takes one of these so callers can tighten or relax
/// per call; the defaults suit dimensions up to a few hundred.
struct Tolerances {
  /// Max allowed |M - M^dagger| entry for a matrix to count as Hermitian.
  double hermiticity = 1e-10;
  /// Eigenvalues above -psd * max|eig| (with an absolute floor) count as
  /// nonnegative.
  double psd = 1e-9;
  /// Absolute floor for the PSD test, guards the all-zero spectrum case.
  double psd_floor = 1e-12;
  /// Max allowed reconstruction error for spectral round trips.
  double reconstruction = 1e-10;
  /// Max allowed |Tr - expected| for trace checks.
  double trace = 1e-10;
  /// Eigenvalues above support_cutoff * max|eig| belong to the support.
  double support_cutoff = 1e-9;
};

/// Result of a Hermitian eigendecomposition: A = V diag(values) V^dagger
/// with eigenvalues ascending and V unitary (columns are eigenvectors).
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian eigendecomposition by cyclic Jacobi rotations. Dependency
/// free and accurate to near machine precision for the moderate dimensions
/// used here. Throws NotHermitianError if |A - A^dagger| exceeds tol.
EigenDecomposition herm_eig(const ComplexMatrix& a,
                            const Tolerances& tol = Tolerances{});

/// Largest |eigenvalue| given a spectrum (0 for an empty spectrum).
double spectral_max_abs(const std::vector<double>& values);

/// Checks A Hermitian and all eigenvalues >= -threshold where threshold is
/// max(tol.psd * max|eig|, tol.psd_floor). Throws NotPsdError otherwise.
/// Returns the decomposition so callers can reuse it.
EigenDecomposition require_psd(const ComplexMatrix& a,
                               const Tolerances& tol = Tolerances{});

/// f(A) = V diag(f(eig)) V^dagger for Hermitian A.
ComplexMatrix hermitian_function(const EigenDecomposition& eig,
                                 const std::vector<double>& mapped);

/// Principal square root of a PSD matrix. Negative dust below the PSD
/// threshold is clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& a,
                       const Tolerances& tol = Tolerances{});

/// Inverse square root on the support: eigenvalues above
/// tol.support_cutoff * max|eig| map to 1/sqrt, the rest to 0.
ComplexMatrix psd_inv_sqrt_on_support(const ComplexMatrix& a,
                                      const Tolerances& tol = Tolerances{});

/// Moore-Penrose inverse restricted to the support of a PSD matrix.
ComplexMatrix psd_pinv(const ComplexMatrix& a,
                       const Tolerances& tol = Tolerances{});

/// Projector onto the support (span of eigenvectors with eigenvalue above
/// the support cutoff) of a PSD matrix.
ComplexMatrix support_projector(const ComplexMatrix& a,
                                const Tolerances& tol = Tolerances{});

/// Tensor-factor helpers treat a dim-prod(dims) square matrix as an
/// operator on factor spaces of the given dimensions, index 0 slowest
/// (leftmost Kronecker factor).

/// Trace out the factors listed in `traced` (indices into dims).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& traced);

/// Transpose only the factors listed in `transposed`.
ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& transposed);

/// Reorder tensor factors: perm[k] is the old position of the factor that
/// lands at new position k.
ComplexMatrix permute_tensor_factors(const ComplexMatrix& m,
                                     const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& perm);

/// max |M - M^dagger| over entries.
double hermiticity_residual(const ComplexMatrix& m);

/// Throws NotHermitianError if the residual exceeds tol.hermiticity.
void require_hermitian(const ComplexMatrix& m,
                       const Tolerances& tol = Tolerances{});

}  // namespace qcs
