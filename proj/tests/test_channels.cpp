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

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "qcs/channels.hpp"
#include "qcs/errors.hpp"
#include "qcs/random.hpp"
#include "test_support.hpp"

using qcs::ChoiConvention;
using qcs::ChoiState;
using qcs::Complex;
using qcs::ComplexMatrix;
using qcs::CompositeRegion;
using qcs::ConditionalState;
using qcs::KrausChannel;
using qcs_test::check_close;
using qcs_test::quantum;

namespace {

// Amplitude damping with decay probability 0.36: the excited population
// relaxes, coherences shrink by 0.8.
KrausChannel damping_036(const std::string& in, const std::string& out) {
  ComplexMatrix k0(2, 2);
  k0(0, 0) = Complex(1.0, 0.0);
  k0(1, 1) = Complex(0.8, 0.0);
  ComplexMatrix k1(2, 2);
  k1(0, 1) = Complex(0.6, 0.0);
  return KrausChannel(in, out, 2, 2, {k0, k1});
}

ComplexMatrix swap_2x2() {
  ComplexMatrix m(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = Complex(1.0, 0.0);
  return m;
}

}  // namespace

TEST_CASE("kraus channel construction validates shapes and labels") {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  CHECK_NOTHROW(KrausChannel("A", "B", 2, 2, {eye}));
  CHECK_THROWS_AS(KrausChannel("A", "A", 2, 2, {eye}), qcs::RegionError);
  CHECK_THROWS_AS(KrausChannel("A", "B", 2, 3, {eye}), qcs::ShapeError);
  CHECK_THROWS_AS(KrausChannel("A", "B", 2, 2, {}), qcs::ShapeError);

  CHECK(qcs::identity_channel("A", "B", 3).trace_preservation_deviation() <
        1e-15);
  // Half the identity loses half the trace.
  const KrausChannel lossy("A", "B", 2, 2,
                           {eye * Complex(std::sqrt(0.5), 0.0)});
  CHECK(lossy.trace_preservation_deviation() == doctest::Approx(0.5));
}

TEST_CASE("the identity channel maps to the swap operator") {
  const ChoiState state = qcs::jamiolkowski(qcs::identity_channel("A", "B", 2));
  CHECK(state.convention() == ChoiConvention::Jamiolkowski);
  check_close(state.matrix(), swap_2x2(), 1e-15);

  const qcs::CptpReport report = qcs::verify_cptp(state);
  CHECK(report.cptp());
  CHECK(report.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("amplitude damping has the expected channel state") {
  const ChoiState state = qcs::jamiolkowski(damping_036("A", "B"));

  ComplexMatrix expected(4, 4);
  expected(0, 0) = Complex(1.0, 0.0);
  expected(1, 2) = expected(2, 1) = Complex(0.8, 0.0);
  expected(2, 2) = Complex(0.36, 0.0);
  expected(3, 3) = Complex(0.64, 0.0);
  check_close(state.matrix(), expected, 1e-14);

  // The positive form transposes the in factor.
  const ChoiState positive = state.to_convention(ChoiConvention::Choi);
  ComplexMatrix choi(4, 4);
  choi(0, 0) = Complex(1.0, 0.0);
  choi(0, 3) = choi(3, 0) = Complex(0.8, 0.0);
  choi(2, 2) = Complex(0.36, 0.0);
  choi(3, 3) = Complex(0.64, 0.0);
  check_close(positive.matrix(), choi, 1e-14);

  // Switching conventions is an involution and a no-op onto itself.
  check_close(positive.to_convention(ChoiConvention::Jamiolkowski).matrix(),
              state.matrix(), 1e-15);
  check_close(state.to_convention(ChoiConvention::Jamiolkowski).matrix(),
              state.matrix(), 1e-15);

  CHECK(qcs::verify_cptp(state).cptp());
  CHECK(qcs::verify_cptp(positive).cptp());
}

TEST_CASE("the stored channel state acts like the operator sum") {
  qcs::Prng rng(41);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {2, 2}, {2, 3}, {3, 2}, {4, 3}};
  for (const auto& [din, dout] : shapes) {
    const KrausChannel channel = qcs::random_cptp(rng, "A", "B", din, dout);
    const ChoiState state = qcs::jamiolkowski(channel);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix sigma = qcs::random_density(rng, din);
      check_close(qcs::channel_action_from_state(state, sigma),
                  qcs::apply(channel, sigma), 1e-11);
    }
  }
}

TEST_CASE("the action formula refuses the transposed convention") {
  qcs::Prng rng(42);
  const KrausChannel channel = qcs::random_cptp(rng, "A", "B", 2, 2);
  const ChoiState positive =
      qcs::jamiolkowski(channel).to_convention(ChoiConvention::Choi);
  const ComplexMatrix sigma = qcs::random_density(rng, 2);
  CHECK_THROWS_AS(qcs::channel_action_from_state(positive, sigma),
                  qcs::ConventionError);
}

TEST_CASE("cptp verification diagnoses each failure mode") {
  qcs::Prng rng(43);

  // Random channels built from isometries are CPTP in both conventions.
  for (int trial = 0; trial < 5; ++trial) {
    const ChoiState state =
        qcs::jamiolkowski(qcs::random_cptp(rng, "A", "B", 3, 2));
    const qcs::CptpReport report = qcs::verify_cptp(state);
    CHECK(report.hermitian);
    CHECK(report.cp);
    CHECK(report.tp);
    CHECK(report.tp_deviation < 1e-12);
    CHECK(report.min_eigenvalue > -1e-12);
  }

  // The swap operator is a valid Jamiolkowski image but not a positive
  // matrix, so declaring it to be in the positive convention fails CP.
  const ChoiState bad_cp(quantum("A", 2), quantum("B", 2), swap_2x2(),
                         ChoiConvention::Choi);
  const qcs::CptpReport cp_report = qcs::verify_cptp(bad_cp);
  CHECK(cp_report.hermitian);
  CHECK_FALSE(cp_report.cp);
  CHECK(cp_report.min_eigenvalue == doctest::Approx(-1.0));
  CHECK_FALSE(cp_report.cptp());

  // Scaling a valid channel breaks trace preservation by exactly the
  // scaling gap.
  const ChoiState scaled(quantum("A", 2), quantum("B", 2),
                         swap_2x2() * Complex(0.9, 0.0),
                         ChoiConvention::Jamiolkowski);
  const qcs::CptpReport tp_report = qcs::verify_cptp(scaled);
  CHECK(tp_report.cp);
  CHECK_FALSE(tp_report.tp);
  CHECK(tp_report.tp_deviation == doctest::Approx(0.1));

  // A non-Hermitian matrix short-circuits the spectral check.
  ComplexMatrix skew(4, 4);
  skew(0, 1) = Complex(1.0, 0.0);
  const ChoiState bad_herm(quantum("A", 2), quantum("B", 2), skew,
                           ChoiConvention::Choi);
  const qcs::CptpReport herm_report = qcs::verify_cptp(bad_herm);
  CHECK_FALSE(herm_report.hermitian);
  CHECK(std::isnan(herm_report.min_eigenvalue));
  CHECK_FALSE(herm_report.cptp());
}

TEST_CASE("operator-sum extraction round-trips the channel state") {
  qcs::Prng rng(44);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {2, 2}, {3, 2}, {2, 4}};
  for (const auto& [din, dout] : shapes) {
    const KrausChannel channel = qcs::random_cptp(rng, "A", "B", din, dout);
    const ChoiState state = qcs::jamiolkowski(channel);
    const KrausChannel recovered = qcs::kraus_from_choi(state);

    CHECK(recovered.in_dim == din);
    CHECK(recovered.out_dim == dout);
    CHECK(recovered.kraus.size() <= din * dout);
    CHECK(recovered.trace_preservation_deviation() < 1e-10);
    check_close(qcs::jamiolkowski(recovered).matrix(), state.matrix(), 1e-10);
  }

  // Rank-deficient channels recover with few Kraus blocks.
  const KrausChannel unitary = qcs::identity_channel("A", "B", 3);
  const KrausChannel recovered =
      qcs::kraus_from_choi(qcs::jamiolkowski(unitary));
  CHECK(recovered.kraus.size() == 1);

  const ChoiState not_cp(quantum("A", 2), quantum("B", 2), swap_2x2(),
                         ChoiConvention::Choi);
  CHECK_THROWS_AS(qcs::kraus_from_choi(not_cp), qcs::NotPsdError);
}

TEST_CASE("operator-sum composition chains two channels") {
  const KrausChannel inner = damping_036("A", "B");
  const KrausChannel outer = damping_036("B", "C");
  const KrausChannel composed = qcs::kraus_compose(outer, inner);
  CHECK(composed.in_label == "A");
  CHECK(composed.out_label == "C");
  CHECK(composed.trace_preservation_deviation() < 1e-14);

  qcs::Prng rng(45);
  const ComplexMatrix sigma = qcs::random_density(rng, 2);
  check_close(qcs::apply(composed, sigma),
              qcs::apply(outer, qcs::apply(inner, sigma)), 1e-13);

  // Damping twice with probability 0.36 damps with probability 0.5904.
  ComplexMatrix k0(2, 2);
  k0(0, 0) = Complex(1.0, 0.0);
  k0(1, 1) = Complex(0.64, 0.0);
  ComplexMatrix k1(2, 2);
  k1(0, 1) = Complex(std::sqrt(0.5904), 0.0);
  const KrausChannel direct("A", "C", 2, 2, {k0, k1});
  check_close(qcs::jamiolkowski(composed).matrix(),
              qcs::jamiolkowski(direct).matrix(), 1e-12);

  CHECK_THROWS_AS(qcs::kraus_compose(damping_036("C", "D"), inner),
                  qcs::RegionError);
  CHECK_THROWS_AS(qcs::kraus_compose(damping_036("B", "A"), inner),
                  qcs::RegionError);
}

TEST_CASE("channel states convert to causal conditionals and back") {
  qcs::Prng rng(46);
  const KrausChannel channel = qcs::random_cptp(rng, "A", "B", 2, 3);
  const ChoiState state = qcs::jamiolkowski(channel);

  const ConditionalState cond = qcs::choi_to_conditional(state);
  CHECK(cond.tag() == qcs::CausalTag::Causal);
  CHECK(cond.conditioned_labels() == std::vector<std::string>{"A"});
  CHECK(cond.target_labels() == std::vector<std::string>{"B"});
  check_close(cond.matrix(), state.matrix(), 1e-15);

  const ChoiState back = qcs::conditional_to_choi(cond);
  CHECK(back.convention() == ChoiConvention::Jamiolkowski);
  CHECK(back.in().label == "A");
  CHECK(back.out().label == "B");
  check_close(back.matrix(), state.matrix(), 1e-15);

  // Conversion normalizes the convention first.
  const ConditionalState from_positive =
      qcs::choi_to_conditional(state.to_convention(ChoiConvention::Choi));
  check_close(from_positive.matrix(), state.matrix(), 1e-13);

  // Non-CPTP inputs are rejected by state validation.
  const ChoiState scaled(quantum("A", 2), quantum("B", 2),
                         swap_2x2() * Complex(0.9, 0.0),
                         ChoiConvention::Jamiolkowski);
  CHECK_THROWS_AS(qcs::choi_to_conditional(scaled), qcs::ValidationError);
}

TEST_CASE("composing conditionals matches composing the operator sums") {
  qcs::Prng rng(47);
  const std::vector<std::array<std::size_t, 3>> shapes = {
      {2, 2, 2}, {2, 3, 2}, {3, 2, 4}};
  for (const auto& [da, db, dc] : shapes) {
    const KrausChannel first = qcs::random_cptp(rng, "A", "B", da, db);
    const KrausChannel second = qcs::random_cptp(rng, "B", "C", db, dc);

    const ConditionalState inner =
        qcs::choi_to_conditional(qcs::jamiolkowski(first));
    const ConditionalState outer =
        qcs::choi_to_conditional(qcs::jamiolkowski(second));

    const ConditionalState composed = qcs::compose_states(outer, inner);
    CHECK(composed.tag() == qcs::CausalTag::Causal);
    CHECK(composed.conditioned_labels() == std::vector<std::string>{"A"});

    const ConditionalState direct = qcs::choi_to_conditional(
        qcs::jamiolkowski(qcs::kraus_compose(second, first)));
    check_close(composed.matrix(), direct.matrix(), 1e-10);
  }
}

TEST_CASE("composition rejects mismatched or colliding regions") {
  qcs::Prng rng(48);
  const ConditionalState b_given_a = qcs::choi_to_conditional(
      qcs::jamiolkowski(qcs::random_cptp(rng, "A", "B", 2, 2)));
  const ConditionalState c_given_d = qcs::choi_to_conditional(
      qcs::jamiolkowski(qcs::random_cptp(rng, "D", "C", 2, 2)));
  CHECK_THROWS_AS(qcs::compose_states(c_given_d, b_given_a), qcs::RegionError);

  // Reusing the inner's conditioned label as the outer's target collides.
  const ConditionalState a_given_b = qcs::choi_to_conditional(
      qcs::jamiolkowski(qcs::random_cptp(rng, "B", "A", 2, 2)));
  CHECK_THROWS_AS(qcs::compose_states(a_given_b, b_given_a), qcs::RegionError);
}

TEST_CASE("composing with an acausal factor yields an acausal state") {
  qcs::Prng rng(49);
  const CompositeRegion ab({quantum("A", 2), quantum("B", 2)});
  const qcs::DensityOperator joint = qcs_test::random_state(rng, ab);
  const ConditionalState inner = qcs::conditional_from_joint(joint, {"A"});
  const ConditionalState outer = qcs::choi_to_conditional(
      qcs::jamiolkowski(qcs::random_cptp(rng, "B", "C", 2, 2)));

  const ConditionalState composed = qcs::compose_states(outer, inner);
  CHECK(composed.tag() == qcs::CausalTag::Acausal);
  CHECK(composed.conditioned_labels() == std::vector<std::string>{"A"});
  CHECK(composed.target_labels() == std::vector<std::string>{"C"});

  // Propagating through the composite equals propagating twice.
  const qcs::DensityOperator rho_a = qcs::marginalize(joint, {"A"});
  const qcs::DensityOperator via_composite = qcs::propagate(composed, rho_a);
  const qcs::DensityOperator via_steps =
      qcs::propagate(outer, qcs::propagate(inner, rho_a));
  check_close(via_composite.matrix(), via_steps.matrix(), 1e-11);
}
