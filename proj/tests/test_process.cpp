// Copyright 2026 The Revivals Authors
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

#include <doctest.h>

#include "revivals/entropy.hpp"
#include "revivals/errors.hpp"
#include "revivals/process.hpp"
#include "revivals/random.hpp"
#include "revivals/scenarios.hpp"
#include "test_helpers.hpp"

using namespace revivals;
namespace rt = revivals::testing;

namespace {

// Independent reimplementation of the reference-system QMI from raw
// eigenvalue sums, bypassing the library's partial_trace and entropy paths.
double qmi_rq_oracle(const DensityMatrix& full, int d_r, int d_q, int d_e) {
  Matrix rq = rt::trace_out_oracle(full.matrix(), d_r, d_q, d_e, 2);
  Matrix r = rt::trace_out_oracle(full.matrix(), d_r, d_q * d_e, 1, 1);
  // Trace out R from rq to get q.
  Matrix q = rt::trace_out_oracle(rq, d_r, d_q, 1, 0);
  auto h = [](const Matrix& m) {
    return rt::entropy_oracle_bits(hermitian_eigenvalues(m));
  };
  return h(r) + h(q) - h(rq);
}

}  // namespace

TEST_CASE("control-unitary model reproduces the loss/revival sequence") {
  auto model = pauli_control_model(PauliControlExtension::kNone);
  auto snap = run_snapshot(model);

  SUBCASE("reduced process is Phi+ -> (I/2)x(I/2) -> Phi+") {
    auto phi = PureState::max_entangled("R", "Q", 2).to_density();
    CHECK(rt::max_abs_diff(snap.reduced_t0.matrix(), phi.matrix()) < 1e-12);
    CHECK(rt::max_abs_diff(snap.reduced_t1.matrix(),
                           Matrix::Identity(4, 4) / 4.0) < 1e-12);
    CHECK(rt::max_abs_diff(snap.reduced_t2.matrix(), phi.matrix()) < 1e-12);
  }

  SUBCASE("QMI sequence (2, 0, 2) bits and revival magnitude 2") {
    auto report = detect_revival(snap);
    CHECK(report.qmi_t0 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.qmi_t1 == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(report.qmi_t2 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.revived);
    CHECK(report.revival_magnitude == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("identity dynamics keeps all three states equal") {
  SystemLayout qe({{kSystemLabel, 2}, {"E", 2}});
  auto env = random_density(SystemLayout::single("E", 2), 2, 5);
  InteractionModel model{2, env, {"E"},
                         UnitaryInteraction::identity(qe),
                         UnitaryInteraction::identity(qe)};
  auto snap = run_snapshot(model);
  CHECK(rt::max_abs_diff(snap.state_t0.matrix(), snap.state_t1.matrix()) <
        1e-12);
  CHECK(rt::max_abs_diff(snap.state_t0.matrix(), snap.state_t2.matrix()) <
        1e-12);
  CHECK_FALSE(detect_revival(snap).revived);
}

TEST_CASE("swap model: Phi+ -> rho_R x gamma -> Phi+") {
  auto gamma = env_with_binary_entropy(0.5, "E");
  auto model = swap_model(2, gamma);
  auto snap = run_snapshot(model);

  Matrix expected_t1 =
      rt::kron_oracle(Matrix::Identity(2, 2) / 2.0, gamma.matrix());
  CHECK(rt::max_abs_diff(snap.reduced_t1.matrix(), expected_t1) < 1e-12);
  auto phi = PureState::max_entangled("R", "Q", 2).to_density();
  CHECK(rt::max_abs_diff(snap.reduced_t2.matrix(), phi.matrix()) < 1e-12);

  auto report = detect_revival(snap);
  CHECK(report.revived);
  // t1 correlations vanish entirely under a perfect swap.
  CHECK(report.qmi_t1 == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(report.qmi_t2 == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("swap model entropy precondition warning") {
  bool warn = false;
  swap_model(2, DensityMatrix::maximally_mixed(SystemLayout::single("E", 2)),
             &warn);
  CHECK(warn);
  swap_model(2, env_with_binary_entropy(0.5, "E"), &warn);
  CHECK_FALSE(warn);
}

TEST_CASE("local second step never revives") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto model = random_markovian_model(2, 2, 2, 1000 + s);
    auto snap = run_snapshot(model);
    auto report = detect_revival(snap);
    CHECK_FALSE(report.revived);
    CHECK(report.qmi_t2 <= report.qmi_t1 + 1e-9);
  }
}

TEST_CASE("revival magnitudes match the raw-eigenvalue oracle") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto model = random_model(2, 2, 2, 2000 + s);
    auto snap = run_snapshot(model);
    auto report = detect_revival(snap);
    double m1 = qmi_rq_oracle(snap.state_t1, 2, 2, 2);
    double m2 = qmi_rq_oracle(snap.state_t2, 2, 2, 2);
    CHECK(report.revival_magnitude ==
          doctest::Approx(m2 - m1).epsilon(1e-9));
  }
}

TEST_CASE("data processing from t0 and unitary invariance") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto model = random_model(2, 3, 2, 3000 + s);
    auto snap = run_snapshot(model);
    auto report = detect_revival(snap);
    CHECK(report.qmi_t1 <= report.qmi_t0 + 1e-9);
    CHECK(report.qmi_t2 <= report.qmi_t0 + 1e-9);
    // I(R; everything else) never changes.
    std::vector<std::string> rest = {kSystemLabel, "E"};
    double i0 = qmi(snap.state_t0, {kReferenceLabel}, rest);
    double i1 = qmi(snap.state_t1, {kReferenceLabel}, rest);
    double i2 = qmi(snap.state_t2, {kReferenceLabel}, rest);
    CHECK(i1 == doctest::Approx(i0).epsilon(1e-9));
    CHECK(i2 == doctest::Approx(i0).epsilon(1e-9));
  }
}

TEST_CASE("inert factors never move") {
  // Attach a correlated inert factor to a random model and check its marginal
  // (and the R-F correlations) stay fixed through both steps.
  auto model = random_model(2, 2, 2, 4100);
  auto purified_env = purify(model.env_state, "F").to_density();
  auto extended = model.with_extension(purified_env);
  auto snap = run_snapshot(extended);
  CHECK(extended.inert_labels() == std::vector<std::string>{"F"});
  auto f0 = partial_trace(snap.state_t0, {"F"});
  auto f1 = partial_trace(snap.state_t1, {"F"});
  auto f2 = partial_trace(snap.state_t2, {"F"});
  CHECK(rt::max_abs_diff(f0.matrix(), f1.matrix()) < 1e-12);
  CHECK(rt::max_abs_diff(f0.matrix(), f2.matrix()) < 1e-12);
}

TEST_CASE("with_extension validates the marginal") {
  auto model = pauli_control_model(PauliControlExtension::kNone);
  // A wrong marginal must be rejected.
  SystemLayout ext_layout({{"E", 4}, {"F", 2}});
  auto wrong = random_density(ext_layout, 4, 4200);
  CHECK_THROWS_AS(model.with_extension(wrong), invariant_violation);
  // The purifying extension passes.
  CHECK_NOTHROW(model.with_extension(purify(model.env_state, "F").to_density()));
}

TEST_CASE("extended control-unitary model carries flat 2-bit correlations") {
  for (auto ext : {PauliControlExtension::kEntangledCopy,
                   PauliControlExtension::kClassicalCopy}) {
    auto model = pauli_control_model(ext);
    auto snap = run_snapshot(model);
    // Reduced sequence unchanged: (2, 0, 2).
    auto report = detect_revival(snap);
    CHECK(report.qmi_t0 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.qmi_t1 == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(report.qmi_t2 == doctest::Approx(2.0).epsilon(1e-10));
    // Extended: I(R; Q Et) = 2 at every time.
    std::vector<std::string> q_et = {kSystemLabel, "Et"};
    CHECK(qmi(snap.state_t0, {kReferenceLabel}, q_et) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(qmi(snap.state_t1, {kReferenceLabel}, q_et) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(qmi(snap.state_t2, {kReferenceLabel}, q_et) ==
          doctest::Approx(2.0).epsilon(1e-9));
    // The key zero: I(R; E' | Q' Et) = 0 at t1.
    CHECK(qcmi(snap.state_t1, {kReferenceLabel}, {"E"}, q_et) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("reduced channels") {
  SUBCASE("identity model gives the identity channel") {
    SystemLayout qe({{kSystemLabel, 2}, {"E", 2}});
    InteractionModel model{2,
                           DensityMatrix::maximally_mixed(
                               SystemLayout::single("E", 2)),
                           {"E"},
                           UnitaryInteraction::identity(qe),
                           UnitaryInteraction::identity(qe)};
    auto [e_chan, f_chan] = reduced_channels(model);
    auto x = random_density(SystemLayout::single(kSystemLabel, 2), 2, 4300);
    CHECK(rt::max_abs_diff(e_chan.apply_matrix(x.matrix()), x.matrix()) <
          1e-9);
    CHECK(rt::max_abs_diff(f_chan.apply_matrix(x.matrix()), x.matrix()) <
          1e-9);
  }

  SUBCASE("control-unitary model: first step is completely depolarizing") {
    auto model = pauli_control_model(PauliControlExtension::kNone);
    auto [e_chan, f_chan] = reduced_channels(model);
    // Choi state of E is I/4.
    CHECK(rt::max_abs_diff(e_chan.choi(), Matrix::Identity(4, 4) / 2.0) <
          1e-9);
    auto x = random_density(SystemLayout::single(kSystemLabel, 2), 2, 4400);
    CHECK(rt::max_abs_diff(e_chan.apply_matrix(x.matrix()),
                           Matrix::Identity(2, 2) / 2.0) < 1e-9);
    // Second step undoes everything: F = identity.
    CHECK(rt::max_abs_diff(f_chan.apply_matrix(x.matrix()), x.matrix()) <
          1e-9);
  }

  SUBCASE("random model: channel action matches the snapshot marginals") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto model = random_model(2, 3, 3, 4500 + s);
      auto snap = run_snapshot(model);
      auto [e_chan, f_chan] = reduced_channels(model);
      auto phi = PureState::max_entangled("R", kSystemLabel, 2).to_density();
      auto via_e = apply_channel(phi, e_chan);
      auto via_f = apply_channel(phi, f_chan);
      // apply_channel puts channel outputs first; restore [R, Q].
      auto e_state = permute_factors(via_e, {"R", kSystemLabel});
      auto f_state = permute_factors(via_f, {"R", kSystemLabel});
      CHECK(rt::max_abs_diff(e_state.matrix(), snap.reduced_t1.matrix()) <
            1e-9);
      CHECK(rt::max_abs_diff(f_state.matrix(), snap.reduced_t2.matrix()) <
            1e-9);
    }
  }
}

TEST_CASE("model validation errors") {
  SystemLayout qe({{kSystemLabel, 2}, {"E", 2}});
  auto env4 = DensityMatrix::maximally_mixed(SystemLayout::single("E", 4));
  InteractionModel bad{2, env4, {"E"}, UnitaryInteraction::identity(qe),
                       UnitaryInteraction::identity(qe)};
  CHECK_THROWS_AS(run_snapshot(bad), std::invalid_argument);

  auto env2 = DensityMatrix::maximally_mixed(SystemLayout::single("E", 2));
  SystemLayout qe3({{kSystemLabel, 3}, {"E", 2}});
  InteractionModel mismatch{2, env2, {"E"},
                            UnitaryInteraction::identity(qe3),
                            UnitaryInteraction::identity(qe3)};
  CHECK_THROWS_AS(run_snapshot(mismatch), std::invalid_argument);
}
