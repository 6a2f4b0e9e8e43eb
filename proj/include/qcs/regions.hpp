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
#include <string>
#include <vector>

#include "qcs/complex_matrix.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

/// A region is a labeled Hilbert-space factor. Classical regions are
/// quantum regions whose operators are kept diagonal in a preferred basis;
/// the basis labels name the classical outcomes.
enum class RegionKind { Quantum, Classical };

struct RegionSpec {
  std::string label;
  std::size_t dim = 0;
  RegionKind kind = RegionKind::Quantum;
  /// Outcome names for classical regions; defaults to "0", "1", ... when
  /// empty. Quantum regions leave this empty.
  std::vector<std::string> basis_labels;

  /// Validates label nonempty, dim >= 1, and basis_labels (when present)
  /// matching dim with distinct names.
  void validate() const;

  /// basis_labels when set, else "0".."dim-1".
  std::vector<std::string> effective_basis_labels() const;

  bool operator==(const RegionSpec& other) const;
};

/// Ordered list of distinct labeled factors. Order is the tensor order of
/// the stored matrix; index 0 is the slowest (leftmost Kronecker) factor.
class CompositeRegion {
 public:
  CompositeRegion() = default;
  explicit CompositeRegion(std::vector<RegionSpec> factors);

  const std::vector<RegionSpec>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const RegionSpec& factor(std::size_t k) const { return factors_[k]; }
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  std::vector<std::string> labels() const;

  bool contains(const std::string& label) const;
  /// Index of the factor with this label; throws RegionError if absent.
  std::size_t index_of(const std::string& label) const;

  /// True if every label in `other` appears here.
  bool contains_all(const CompositeRegion& other) const;

  /// Factors sorted ascending by label. This is the canonical order used
  /// whenever two operators must live on the same composite region.
  CompositeRegion sorted() const;
  bool is_sorted() const;

  /// Sub-region keeping only the named labels, in this region's order.
  CompositeRegion select(const std::vector<std::string>& labels) const;
  /// Sub-region dropping the named labels.
  CompositeRegion drop(const std::vector<std::string>& labels) const;

  bool operator==(const CompositeRegion& other) const;

 private:
  std::vector<RegionSpec> factors_;
};

/// Union of two disjoint composite regions, result sorted by label.
/// Throws RegionError on label overlap.
CompositeRegion disjoint_union(const CompositeRegion& a,
                               const CompositeRegion& b);

/// Union of two composite regions that may share factors; shared labels
/// must agree exactly (dimension, kind, basis). Result sorted by label.
CompositeRegion merge_regions(const CompositeRegion& a,
                              const CompositeRegion& b);

/// A square matrix together with the composite region it acts on. The
/// matrix dimension always equals the region's total dimension.
struct LabeledOperator {
  CompositeRegion region;
  ComplexMatrix matrix;

  LabeledOperator() = default;
  LabeledOperator(CompositeRegion r, ComplexMatrix m);
};

/// Tensor product; factor labels must be disjoint. The result keeps a's
/// factors then b's factors in order.
LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);

/// Reorder the factors of `op` to the given label order (a permutation of
/// its current labels).
LabeledOperator permute_factors(const LabeledOperator& op,
                                const std::vector<std::string>& label_order);

/// Embed `op` into the larger region `target` (which must contain all of
/// op's labels), tensoring identity on the missing factors and permuting
/// into target's factor order.
LabeledOperator lift(const LabeledOperator& op, const CompositeRegion& target);

/// Trace out the named factors. Remaining factors keep their order.
LabeledOperator trace_out(const LabeledOperator& op,
                          const std::vector<std::string>& labels);

/// Transpose only the named factors.
LabeledOperator transpose_factors(const LabeledOperator& op,
                                  const std::vector<std::string>& labels);

/// Reorder factors into ascending label order.
LabeledOperator to_sorted_order(const LabeledOperator& op);

/// Product of two operators on identical regions (after reordering b to
/// a's factor order).
LabeledOperator aligned_product(const LabeledOperator& a,
                                const LabeledOperator& b);

/// Checks that classical factors are diagonal in the preferred basis:
/// every off-diagonal entry coupling distinct basis states of a classical
/// factor must be below tol.hermiticity. Throws ValidationError otherwise.
void require_classical_diagonal(const LabeledOperator& op,
                                const Tolerances& tol = Tolerances{});

}  // namespace qcs
