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

#include "qcs/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

KrausChannel::KrausChannel(std::string in_label_arg, std::string out_label_arg,
                           std::size_t in_dim_arg, std::size_t out_dim_arg,
                           std::vector<ComplexMatrix> kraus_arg)
    : in_label(std::move(in_label_arg)),
      out_label(std::move(out_label_arg)),
      in_dim(in_dim_arg),
      out_dim(out_dim_arg),
      kraus(std::move(kraus_arg)) {
  if (in_label.empty() || out_label.empty()) {
    throw RegionError("channel region labels must be nonempty");
  }
  if (in_label == out_label) {
    throw RegionError(
        "channel input and output regions must carry distinct labels; an "
        "evolution relates two regions");
  }
  if (in_dim == 0 || out_dim == 0) {
    throw ShapeError("channel dimensions must be positive");
  }
  if (kraus.empty()) {
    throw ShapeError("channel needs at least one Kraus block");
  }
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != out_dim || k.cols() != in_dim) {
      throw ShapeError("Kraus block is " + std::to_string(k.rows()) + "x" +
                       std::to_string(k.cols()) + ", expected " +
                       std::to_string(out_dim) + "x" + std::to_string(in_dim));
    }
  }
}

double KrausChannel::trace_preservation_deviation() const {
  ComplexMatrix sum(in_dim, in_dim);
  for (const ComplexMatrix& k : kraus) {
    sum += k.adjoint() * k;
  }
  return max_abs_diff(sum, ComplexMatrix::identity(in_dim));
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& sigma) {
  if (sigma.rows() != channel.in_dim || sigma.cols() != channel.in_dim) {
    throw ShapeError("apply: input is " + std::to_string(sigma.rows()) + "x" +
                     std::to_string(sigma.cols()) + ", expected " +
                     std::to_string(channel.in_dim) + " square");
  }
  ComplexMatrix out(channel.out_dim, channel.out_dim);
  for (const ComplexMatrix& k : channel.kraus) {
    out += k * sigma * k.adjoint();
  }
  return out;
}

KrausChannel identity_channel(const std::string& in_label,
                              const std::string& out_label, std::size_t dim) {
  return KrausChannel(in_label, out_label, dim, dim,
                      {ComplexMatrix::identity(dim)});
}

ChoiState::ChoiState(RegionSpec in, RegionSpec out, ComplexMatrix matrix,
                     ChoiConvention convention)
    : in_(std::move(in)),
      out_(std::move(out)),
      matrix_(std::move(matrix)),
      convention_(convention) {
  in_.validate();
  out_.validate();
  if (in_.label == out_.label) {
    throw RegionError("channel state: in and out labels must differ");
  }
  const std::size_t expected = in_.dim * out_.dim;
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    throw ShapeError("channel state matrix is " +
                     std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + ", expected " +
                     std::to_string(expected) + " square");
  }
  matrix_.require_finite("ChoiState");
}

ChoiState ChoiState::to_convention(ChoiConvention target) const {
  if (target == convention_) return *this;
  // The two conventions differ by a transpose on the in factor (factor 0
  // of the [in, out] layout); the map is an involution.
  ComplexMatrix flipped = partial_transpose(matrix_, {in_.dim, out_.dim}, {0});
  return ChoiState(in_, out_, std::move(flipped), target);
}

ChoiState jamiolkowski(const KrausChannel& channel) {
  const std::size_t din = channel.in_dim;
  const std::size_t dout = channel.out_dim;
  ComplexMatrix rho(din * dout, din * dout);
  // rho[(i,a),(j,b)] = sum_k K[a,j] conj(K[b,i]): the (i,j) block of the
  // in factor holds the channel applied to |j><i|.
  for (const ComplexMatrix& k : channel.kraus) {
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t a = 0; a < dout; ++a) {
        for (std::size_t j = 0; j < din; ++j) {
          for (std::size_t b = 0; b < dout; ++b) {
            rho(i * dout + a, j * dout + b) += k(a, j) * std::conj(k(b, i));
          }
        }
      }
    }
  }
  RegionSpec in{channel.in_label, din, RegionKind::Quantum, {}};
  RegionSpec out{channel.out_label, dout, RegionKind::Quantum, {}};
  return ChoiState(std::move(in), std::move(out), std::move(rho),
                   ChoiConvention::Jamiolkowski);
}

ComplexMatrix channel_action_from_state(const ChoiState& state,
                                        const ComplexMatrix& sigma) {
  if (state.convention() != ChoiConvention::Jamiolkowski) {
    throw ConventionError(
        "channel_action_from_state: the product-and-trace action formula "
        "requires the Jamiolkowski convention; convert with "
        "to_convention first");
  }
  if (sigma.rows() != state.in_dim() || sigma.cols() != state.in_dim()) {
    throw ShapeError("channel action: input is " +
                     std::to_string(sigma.rows()) + "x" +
                     std::to_string(sigma.cols()) + ", expected " +
                     std::to_string(state.in_dim()) + " square");
  }
  const ComplexMatrix lifted =
      kron(sigma, ComplexMatrix::identity(state.out_dim()));
  return partial_trace(state.matrix() * lifted,
                       {state.in_dim(), state.out_dim()}, {0});
}

CptpReport verify_cptp(const ChoiState& state, const Tolerances& tol) {
  CptpReport report;

  const ChoiState standard = state.to_convention(ChoiConvention::Choi);
  report.hermiticity_deviation = hermiticity_residual(standard.matrix());
  report.hermitian = report.hermiticity_deviation <= tol.hermiticity;

  if (report.hermitian) {
    const EigenDecomposition eig = herm_eig(standard.matrix(), tol);
    report.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
    const double threshold =
        std::max(tol.psd * spectral_max_abs(eig.values), tol.psd_floor);
    report.cp = report.min_eigenvalue >= -threshold;
  } else {
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.cp = false;
  }

  // Tr_out is convention independent up to a transpose on the in factor,
  // which preserves distance to the identity.
  const ComplexMatrix marginal = partial_trace(
      state.matrix(), {state.in_dim(), state.out_dim()}, {1});
  report.tp_deviation =
      max_abs_diff(marginal, ComplexMatrix::identity(state.in_dim()));
  report.tp = report.tp_deviation <= tol.trace;

  return report;
}

KrausChannel kraus_from_choi(const ChoiState& state, const Tolerances& tol) {
  const ChoiState standard = state.to_convention(ChoiConvention::Choi);
  const EigenDecomposition eig = require_psd(standard.matrix(), tol);
  const double cutoff = tol.support_cutoff * spectral_max_abs(eig.values);

  const std::size_t din = state.in_dim();
  const std::size_t dout = state.out_dim();
  std::vector<ComplexMatrix> kraus;
  // Descending eigenvalue order so the dominant block comes first.
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    const double lambda = eig.values[k];
    if (lambda <= cutoff) continue;
    const double root = std::sqrt(lambda);
    ComplexMatrix block(dout, din);
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t a = 0; a < dout; ++a) {
        block(a, i) = root * eig.vectors(i * dout + a, k);
      }
    }
    kraus.push_back(std::move(block));
  }
  if (kraus.empty()) {
    throw ValidationError("kraus_from_choi: channel state has empty support");
  }
  return KrausChannel(state.in().label, state.out().label, din, dout,
                      std::move(kraus));
}

KrausChannel kraus_compose(const KrausChannel& outer,
                           const KrausChannel& inner) {
  if (outer.in_label != inner.out_label || outer.in_dim != inner.out_dim) {
    throw RegionError(
        "kraus_compose: outer input must chain with inner output");
  }
  if (outer.out_label == inner.in_label) {
    throw RegionError(
        "kraus_compose: composite would reuse the label '" + outer.out_label +
        "' for both ends");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus.size() * inner.kraus.size());
  for (const ComplexMatrix& l : outer.kraus) {
    for (const ComplexMatrix& k : inner.kraus) {
      kraus.push_back(l * k);
    }
  }
  return KrausChannel(inner.in_label, outer.out_label, inner.in_dim,
                      outer.out_dim, std::move(kraus));
}

KrausChannel random_cptp(Prng& rng, const std::string& in_label,
                         const std::string& out_label, std::size_t in_dim,
                         std::size_t out_dim) {
  // Isometry V from in to out x env guarantees sum K^dagger K = V^dagger V
  // = identity; env dimension in*out always suffices for a generic channel.
  const std::size_t env = in_dim * out_dim;
  const ComplexMatrix g = rng.gaussian_matrix(out_dim * env, in_dim);
  const ComplexMatrix v = orthonormalize_columns(g);

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(env);
  for (std::size_t e = 0; e < env; ++e) {
    ComplexMatrix block(out_dim, in_dim);
    for (std::size_t a = 0; a < out_dim; ++a) {
      for (std::size_t i = 0; i < in_dim; ++i) {
        block(a, i) = v(e * out_dim + a, i);
      }
    }
    kraus.push_back(std::move(block));
  }
  return KrausChannel(in_label, out_label, in_dim, out_dim, std::move(kraus));
}

ConditionalState choi_to_conditional(const ChoiState& state,
                                     const Tolerances& tol) {
  const ChoiState canonical =
      state.to_convention(ChoiConvention::Jamiolkowski);
  CompositeRegion region({canonical.in(), canonical.out()});
  LabeledOperator op(std::move(region), canonical.matrix());
  return ConditionalState(std::move(op), {canonical.in().label},
                          CausalTag::Causal, tol);
}

ChoiState conditional_to_choi(const ConditionalState& cond) {
  if (cond.conditioned_labels().size() != 1 ||
      cond.target_labels().size() != 1) {
    throw RegionError(
        "conditional_to_choi: need exactly one conditioned and one target "
        "factor");
  }
  const std::string in_label = cond.conditioned_labels().front();
  const std::string out_label = cond.target_labels().front();
  const LabeledOperator ordered =
      permute_factors(cond.labeled(), {in_label, out_label});
  return ChoiState(ordered.region.factor(0), ordered.region.factor(1),
                   ordered.matrix, ChoiConvention::Jamiolkowski);
}

ConditionalState compose_states(const ConditionalState& outer,
                                const ConditionalState& inner,
                                const Tolerances& tol) {
  const std::vector<std::string> shared = outer.conditioned_labels();
  {
    std::set<std::string> a(shared.begin(), shared.end());
    const std::vector<std::string> inner_target = inner.target_labels();
    std::set<std::string> b(inner_target.begin(), inner_target.end());
    if (a != b) {
      throw RegionError(
          "compose_states: outer's conditioned region must equal inner's "
          "target region");
    }
  }
  for (const std::string& l : outer.target_labels()) {
    if (inner.region().contains(l)) {
      throw RegionError("compose_states: outer target region '" + l +
                        "' collides with the inner state");
    }
  }

  const CompositeRegion full = merge_regions(outer.region(), inner.region());
  const ComplexMatrix product = lift(outer.labeled(), full).matrix *
                                lift(inner.labeled(), full).matrix;
  const LabeledOperator traced =
      trace_out(LabeledOperator(full, product), shared);

  const CausalTag tag = (outer.tag() == CausalTag::Causal &&
                         inner.tag() == CausalTag::Causal)
                            ? CausalTag::Causal
                            : CausalTag::Acausal;
  return ConditionalState(traced, inner.conditioned_labels(), tag, tol);
}

}  // namespace qcs
