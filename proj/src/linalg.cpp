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

#include "qcs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<std::size_t>());
}

void check_factor_shape(const ComplexMatrix& m,
                        const std::vector<std::size_t>& dims,
                        const char* op) {
  for (std::size_t d : dims) {
    if (d == 0) throw ShapeError(std::string(op) + ": zero factor dimension");
  }
  if (m.rows() != m.cols() || m.rows() != product(dims)) {
    throw ShapeError(std::string(op) + ": matrix is " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but factors multiply to " + std::to_string(product(dims)));
  }
}

/// Row-major strides: stride[k] = product of dims after k.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    s[k - 1] = s[k] * dims[k];
  }
  return s;
}

void unpack_index(std::size_t flat, const std::vector<std::size_t>& dims,
                  std::vector<std::size_t>& out) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = flat % dims[k];
    flat /= dims[k];
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  double r = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return r;
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  const double r = hermiticity_residual(m);
  if (r > tol.hermiticity) {
    throw NotHermitianError(
        "matrix is not Hermitian (residual " + std::to_string(r) + ")", r);
  }
}

EigenDecomposition herm_eig(const ComplexMatrix& a, const Tolerances& tol) {
  require_hermitian(a, tol);
  const std::size_t n = a.dim();

  // Work on the Hermitian average so tiny asymmetries cannot drift.
  ComplexMatrix work(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      work(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  ComplexMatrix vectors = ComplexMatrix::identity(n);

  const double scale = std::max(work.max_abs(), 1.0);
  const double stop = 1e-14 * scale;
  const int max_sweeps = 128;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off = std::max(off, std::abs(work(p, q)));
      }
    }
    if (off <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = work(p, q);
        const double r = std::abs(g);
        if (r <= stop * 1e-2) continue;

        // Unitary 2x2 rotation that zeros the (p,q) entry. phase carries
        // the complex direction of g; the real rotation angle follows the
        // classic Jacobi choice of the smaller root.
        const Complex phase = g / r;
        const double alpha = work(p, p).real();
        const double beta = work(q, q).real();
        const double zeta = (alpha - beta) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sigma = s * std::conj(phase);

        // Columns: M <- M U with U = [[c, -conj(sigma)], [sigma, c]] acting
        // on columns (p,q).
        for (std::size_t i = 0; i < n; ++i) {
          const Complex mip = work(i, p);
          const Complex miq = work(i, q);
          work(i, p) = c * mip + sigma * miq;
          work(i, q) = -std::conj(sigma) * mip + c * miq;
        }
        // Rows: M <- U^dagger M.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex mpj = work(p, j);
          const Complex mqj = work(q, j);
          work(p, j) = c * mpj + std::conj(sigma) * mqj;
          work(q, j) = -sigma * mpj + c * mqj;
        }
        // Accumulate eigenvectors.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = vectors(i, p);
          const Complex viq = vectors(i, q);
          vectors(i, p) = c * vip + sigma * viq;
          vectors(i, q) = -std::conj(sigma) * vip + c * viq;
        }
        work(p, q) = Complex(0.0, 0.0);
        work(q, p) = Complex(0.0, 0.0);
      }
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = work(i, i).real();

  // Sort ascending, permuting eigenvector columns in step.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return out.values[x] < out.values[y];
  });
  std::vector<double> sorted_values(n);
  ComplexMatrix sorted_vectors(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted_values[k] = out.values[order[k]];
    for (std::size_t i = 0; i < n; ++i) {
      sorted_vectors(i, k) = vectors(i, order[k]);
    }
  }
  out.values = std::move(sorted_values);
  out.vectors = std::move(sorted_vectors);
  return out;
}

double spectral_max_abs(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

EigenDecomposition require_psd(const ComplexMatrix& a, const Tolerances& tol) {
  EigenDecomposition eig = herm_eig(a, tol);
  const double threshold =
      std::max(tol.psd * spectral_max_abs(eig.values), tol.psd_floor);
  for (double v : eig.values) {
    if (v < -threshold) {
      throw NotPsdError("matrix is not positive semidefinite (eigenvalue " +
                            std::to_string(v) + ")",
                        v);
    }
  }
  return eig;
}

ComplexMatrix hermitian_function(const EigenDecomposition& eig,
                                 const std::vector<double>& mapped) {
  const std::size_t n = eig.vectors.dim();
  if (mapped.size() != n) {
    throw ShapeError("hermitian_function: mapped spectrum size mismatch");
  }
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (mapped[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k);
      if (vik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += mapped[k] * vik * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerances& tol) {
  EigenDecomposition eig = require_psd(a, tol);
  std::vector<double> mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = eig.values[k] > 0.0 ? std::sqrt(eig.values[k]) : 0.0;
  }
  return hermitian_function(eig, mapped);
}

ComplexMatrix psd_inv_sqrt_on_support(const ComplexMatrix& a,
                                      const Tolerances& tol) {
  EigenDecomposition eig = require_psd(a, tol);
  const double cutoff = tol.support_cutoff * spectral_max_abs(eig.values);
  std::vector<double> mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = eig.values[k] > cutoff ? 1.0 / std::sqrt(eig.values[k]) : 0.0;
  }
  return hermitian_function(eig, mapped);
}

ComplexMatrix psd_pinv(const ComplexMatrix& a, const Tolerances& tol) {
  EigenDecomposition eig = require_psd(a, tol);
  const double cutoff = tol.support_cutoff * spectral_max_abs(eig.values);
  std::vector<double> mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = eig.values[k] > cutoff ? 1.0 / eig.values[k] : 0.0;
  }
  return hermitian_function(eig, mapped);
}

ComplexMatrix support_projector(const ComplexMatrix& a, const Tolerances& tol) {
  EigenDecomposition eig = require_psd(a, tol);
  const double cutoff = tol.support_cutoff * spectral_max_abs(eig.values);
  std::vector<double> mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = eig.values[k] > cutoff ? 1.0 : 0.0;
  }
  return hermitian_function(eig, mapped);
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& traced) {
  check_factor_shape(m, dims, "partial_trace");
  std::vector<bool> is_traced(dims.size(), false);
  for (std::size_t t : traced) {
    if (t >= dims.size()) {
      throw ShapeError("partial_trace: factor index out of range");
    }
    if (is_traced[t]) throw ShapeError("partial_trace: duplicate factor index");
    is_traced[t] = true;
  }

  std::vector<std::size_t> kept_dims;
  std::vector<std::size_t> traced_dims;
  std::vector<std::size_t> kept_idx;
  std::vector<std::size_t> traced_idx;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (is_traced[k]) {
      traced_dims.push_back(dims[k]);
      traced_idx.push_back(k);
    } else {
      kept_dims.push_back(dims[k]);
      kept_idx.push_back(k);
    }
  }

  const std::size_t out_dim = product(kept_dims);
  const std::size_t tr_dim = product(traced_dims);
  const std::vector<std::size_t> strides = strides_of(dims);

  ComplexMatrix out(out_dim, out_dim);
  std::vector<std::size_t> kept_multi(kept_dims.size());
  std::vector<std::size_t> kept_multi2(kept_dims.size());
  std::vector<std::size_t> tr_multi(traced_dims.size());

  for (std::size_t r = 0; r < out_dim; ++r) {
    unpack_index(r, kept_dims, kept_multi);
    for (std::size_t c = 0; c < out_dim; ++c) {
      unpack_index(c, kept_dims, kept_multi2);
      Complex sum(0.0, 0.0);
      for (std::size_t t = 0; t < tr_dim; ++t) {
        unpack_index(t, traced_dims, tr_multi);
        std::size_t row = 0;
        std::size_t col = 0;
        for (std::size_t k = 0; k < kept_idx.size(); ++k) {
          row += kept_multi[k] * strides[kept_idx[k]];
          col += kept_multi2[k] * strides[kept_idx[k]];
        }
        for (std::size_t k = 0; k < traced_idx.size(); ++k) {
          row += tr_multi[k] * strides[traced_idx[k]];
          col += tr_multi[k] * strides[traced_idx[k]];
        }
        sum += m(row, col);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& transposed) {
  check_factor_shape(m, dims, "partial_transpose");
  std::vector<bool> flip(dims.size(), false);
  for (std::size_t t : transposed) {
    if (t >= dims.size()) {
      throw ShapeError("partial_transpose: factor index out of range");
    }
    flip[t] = true;
  }

  const std::size_t total = product(dims);
  const std::vector<std::size_t> strides = strides_of(dims);
  ComplexMatrix out(total, total);
  std::vector<std::size_t> row_multi(dims.size());
  std::vector<std::size_t> col_multi(dims.size());

  for (std::size_t r = 0; r < total; ++r) {
    unpack_index(r, dims, row_multi);
    for (std::size_t c = 0; c < total; ++c) {
      unpack_index(c, dims, col_multi);
      std::size_t src_row = 0;
      std::size_t src_col = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (flip[k]) {
          src_row += col_multi[k] * strides[k];
          src_col += row_multi[k] * strides[k];
        } else {
          src_row += row_multi[k] * strides[k];
          src_col += col_multi[k] * strides[k];
        }
      }
      out(r, c) = m(src_row, src_col);
    }
  }
  return out;
}

ComplexMatrix permute_tensor_factors(const ComplexMatrix& m,
                                     const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& perm) {
  check_factor_shape(m, dims, "permute_tensor_factors");
  if (perm.size() != dims.size()) {
    throw ShapeError("permute_tensor_factors: permutation size mismatch");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t p : perm) {
    if (p >= dims.size() || seen[p]) {
      throw ShapeError("permute_tensor_factors: invalid permutation");
    }
    seen[p] = true;
  }

  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[perm[k]];

  const std::size_t total = product(dims);
  const std::vector<std::size_t> old_strides = strides_of(dims);
  ComplexMatrix out(total, total);
  std::vector<std::size_t> row_multi(dims.size());
  std::vector<std::size_t> col_multi(dims.size());

  for (std::size_t r = 0; r < total; ++r) {
    unpack_index(r, new_dims, row_multi);
    for (std::size_t c = 0; c < total; ++c) {
      unpack_index(c, new_dims, col_multi);
      std::size_t src_row = 0;
      std::size_t src_col = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        src_row += row_multi[k] * old_strides[perm[k]];
        src_col += col_multi[k] * old_strides[perm[k]];
      }
      out(r, c) = m(src_row, src_col);
    }
  }
  return out;
}

}  // namespace qcs
