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

#include "qcs/regions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

void RegionSpec::validate() const {
  if (label.empty()) throw RegionError("region label must be nonempty");
  if (dim == 0) throw RegionError("region '" + label + "' has dimension 0");
  if (!basis_labels.empty()) {
    if (basis_labels.size() != dim) {
      throw RegionError("region '" + label + "': " +
                        std::to_string(basis_labels.size()) +
                        " basis labels for dimension " + std::to_string(dim));
    }
    std::set<std::string> seen;
    for (const std::string& b : basis_labels) {
      if (b.empty() || !seen.insert(b).second) {
        throw RegionError("region '" + label +
                          "': basis labels must be nonempty and distinct");
      }
    }
  }
}

std::vector<std::string> RegionSpec::effective_basis_labels() const {
  if (!basis_labels.empty()) return basis_labels;
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(std::to_string(i));
  return out;
}

bool RegionSpec::operator==(const RegionSpec& other) const {
  return label == other.label && dim == other.dim && kind == other.kind &&
         basis_labels == other.basis_labels;
}

CompositeRegion::CompositeRegion(std::vector<RegionSpec> factors)
    : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const RegionSpec& f : factors_) {
    f.validate();
    if (!seen.insert(f.label).second) {
      throw RegionError("duplicate region label '" + f.label + "'");
    }
  }
}

std::size_t CompositeRegion::total_dim() const {
  std::size_t d = 1;
  for (const RegionSpec& f : factors_) d *= f.dim;
  return d;
}

std::vector<std::size_t> CompositeRegion::dims() const {
  std::vector<std::size_t> d;
  d.reserve(factors_.size());
  for (const RegionSpec& f : factors_) d.push_back(f.dim);
  return d;
}

std::vector<std::string> CompositeRegion::labels() const {
  std::vector<std::string> l;
  l.reserve(factors_.size());
  for (const RegionSpec& f : factors_) l.push_back(f.label);
  return l;
}

bool CompositeRegion::contains(const std::string& label) const {
  for (const RegionSpec& f : factors_) {
    if (f.label == label) return true;
  }
  return false;
}

std::size_t CompositeRegion::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].label == label) return k;
  }
  throw RegionError("region '" + label + "' not found in composite");
}

bool CompositeRegion::contains_all(const CompositeRegion& other) const {
  for (const RegionSpec& f : other.factors_) {
    if (!contains(f.label)) return false;
  }
  return true;
}

CompositeRegion CompositeRegion::sorted() const {
  std::vector<RegionSpec> f = factors_;
  std::sort(f.begin(), f.end(), [](const RegionSpec& a, const RegionSpec& b) {
    return a.label < b.label;
  });
  return CompositeRegion(std::move(f));
}

bool CompositeRegion::is_sorted() const {
  for (std::size_t k = 0; k + 1 < factors_.size(); ++k) {
    if (!(factors_[k].label < factors_[k + 1].label)) return false;
  }
  return true;
}

CompositeRegion CompositeRegion::select(
    const std::vector<std::string>& labels) const {
  std::vector<RegionSpec> f;
  for (const RegionSpec& spec : factors_) {
    if (std::find(labels.begin(), labels.end(), spec.label) != labels.end()) {
      f.push_back(spec);
    }
  }
  if (f.size() != labels.size()) {
    throw RegionError("select: some labels are absent from the composite");
  }
  return CompositeRegion(std::move(f));
}

CompositeRegion CompositeRegion::drop(
    const std::vector<std::string>& labels) const {
  for (const std::string& l : labels) {
    if (!contains(l)) {
      throw RegionError("drop: region '" + l + "' not found in composite");
    }
  }
  std::vector<RegionSpec> f;
  for (const RegionSpec& spec : factors_) {
    if (std::find(labels.begin(), labels.end(), spec.label) == labels.end()) {
      f.push_back(spec);
    }
  }
  return CompositeRegion(std::move(f));
}

bool CompositeRegion::operator==(const CompositeRegion& other) const {
  return factors_ == other.factors_;
}

CompositeRegion disjoint_union(const CompositeRegion& a,
                               const CompositeRegion& b) {
  std::vector<RegionSpec> f = a.factors();
  for (const RegionSpec& spec : b.factors()) {
    if (a.contains(spec.label)) {
      throw RegionError("disjoint_union: label '" + spec.label +
                        "' appears on both sides");
    }
    f.push_back(spec);
  }
  return CompositeRegion(std::move(f)).sorted();
}

CompositeRegion merge_regions(const CompositeRegion& a,
                              const CompositeRegion& b) {
  std::vector<RegionSpec> f = a.factors();
  for (const RegionSpec& spec : b.factors()) {
    if (a.contains(spec.label)) {
      if (!(a.factor(a.index_of(spec.label)) == spec)) {
        throw RegionError("region '" + spec.label +
                          "' has conflicting definitions");
      }
    } else {
      f.push_back(spec);
    }
  }
  return CompositeRegion(std::move(f)).sorted();
}

LabeledOperator::LabeledOperator(CompositeRegion r, ComplexMatrix m)
    : region(std::move(r)), matrix(std::move(m)) {
  if (matrix.rows() != region.total_dim() ||
      matrix.cols() != region.total_dim()) {
    throw ShapeError("LabeledOperator: matrix is " +
                     std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + " but region dimension is " +
                     std::to_string(region.total_dim()));
  }
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<RegionSpec> f = a.region.factors();
  for (const RegionSpec& spec : b.region.factors()) f.push_back(spec);
  return LabeledOperator(CompositeRegion(std::move(f)),
                         kron(a.matrix, b.matrix));
}

LabeledOperator permute_factors(const LabeledOperator& op,
                                const std::vector<std::string>& label_order) {
  if (label_order.size() != op.region.size()) {
    throw RegionError("permute_factors: label count mismatch");
  }
  std::vector<std::size_t> perm;
  perm.reserve(label_order.size());
  std::vector<RegionSpec> new_factors;
  for (const std::string& l : label_order) {
    const std::size_t idx = op.region.index_of(l);
    if (std::find(perm.begin(), perm.end(), idx) != perm.end()) {
      throw RegionError("permute_factors: duplicate label '" + l + "'");
    }
    perm.push_back(idx);
    new_factors.push_back(op.region.factor(idx));
  }
  return LabeledOperator(
      CompositeRegion(std::move(new_factors)),
      permute_tensor_factors(op.matrix, op.region.dims(), perm));
}

LabeledOperator lift(const LabeledOperator& op, const CompositeRegion& target) {
  if (!target.contains_all(op.region)) {
    throw RegionError("lift: target region does not contain all factors");
  }
  for (const RegionSpec& spec : op.region.factors()) {
    const RegionSpec& t = target.factor(target.index_of(spec.label));
    if (t.dim != spec.dim) {
      throw RegionError("lift: dimension mismatch on region '" + spec.label +
                        "'");
    }
  }
  // Tensor identity on the missing factors, then permute to target order.
  std::vector<RegionSpec> extended = op.region.factors();
  ComplexMatrix m = op.matrix;
  for (const RegionSpec& spec : target.factors()) {
    if (!op.region.contains(spec.label)) {
      extended.push_back(spec);
      m = kron(m, ComplexMatrix::identity(spec.dim));
    }
  }
  LabeledOperator widened(CompositeRegion(std::move(extended)), std::move(m));
  return permute_factors(widened, target.labels());
}

LabeledOperator trace_out(const LabeledOperator& op,
                          const std::vector<std::string>& labels) {
  std::vector<std::size_t> traced;
  traced.reserve(labels.size());
  for (const std::string& l : labels) traced.push_back(op.region.index_of(l));
  return LabeledOperator(op.region.drop(labels),
                         partial_trace(op.matrix, op.region.dims(), traced));
}

LabeledOperator transpose_factors(const LabeledOperator& op,
                                  const std::vector<std::string>& labels) {
  std::vector<std::size_t> flipped;
  flipped.reserve(labels.size());
  for (const std::string& l : labels) flipped.push_back(op.region.index_of(l));
  return LabeledOperator(
      op.region, partial_transpose(op.matrix, op.region.dims(), flipped));
}

LabeledOperator to_sorted_order(const LabeledOperator& op) {
  if (op.region.is_sorted()) return op;
  return permute_factors(op, op.region.sorted().labels());
}

LabeledOperator aligned_product(const LabeledOperator& a,
                                const LabeledOperator& b) {
  if (!(a.region.contains_all(b.region) && b.region.contains_all(a.region))) {
    throw RegionError("aligned_product: operators live on different regions");
  }
  const LabeledOperator b_aligned = permute_factors(b, a.region.labels());
  return LabeledOperator(a.region, a.matrix * b_aligned.matrix);
}

void require_classical_diagonal(const LabeledOperator& op,
                                const Tolerances& tol) {
  const std::vector<std::size_t> dims = op.region.dims();
  const std::size_t total = op.region.total_dim();

  // Row/column multi-indices; an entry may be nonzero only if every
  // classical factor has equal row and column sub-index.
  for (std::size_t k = 0; k < op.region.size(); ++k) {
    if (op.region.factor(k).kind != RegionKind::Classical) continue;
    for (std::size_t r = 0; r < total; ++r) {
      for (std::size_t c = 0; c < total; ++c) {
        std::size_t rr = r;
        std::size_t cc = c;
        std::size_t row_sub = 0;
        std::size_t col_sub = 0;
        for (std::size_t f = dims.size(); f-- > 0;) {
          const std::size_t rm = rr % dims[f];
          const std::size_t cm = cc % dims[f];
          rr /= dims[f];
          cc /= dims[f];
          if (f == k) {
            row_sub = rm;
            col_sub = cm;
          }
        }
        if (row_sub != col_sub && std::abs(op.matrix(r, c)) > tol.hermiticity) {
          throw ValidationError(
              "classical region '" + op.region.factor(k).label +
              "' has off-diagonal coherence of magnitude " +
              std::to_string(std::abs(op.matrix(r, c))));
        }
      }
    }
  }
}

}  // namespace qcs
