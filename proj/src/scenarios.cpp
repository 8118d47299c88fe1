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

#include "revivals/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "revivals/entropy.hpp"
#include "revivals/errors.hpp"
#include "revivals/random.hpp"

namespace revivals {

namespace {

Matrix pauli_matrix(int i) {
  Matrix m(2, 2);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// U = sum_i pauli_i (x) |i><i| on [Q:2, E:4].
Matrix control_pauli_unitary() {
  Matrix u = Matrix::Zero(8, 8);
  for (int e = 0; e < 4; ++e) {
    Matrix p = pauli_matrix(e);
    for (int qo = 0; qo < 2; ++qo) {
      for (int qi = 0; qi < 2; ++qi) {
        u(qo * 4 + e, qi * 4 + e) = p(qo, qi);
      }
    }
  }
  return u;
}

Matrix swap_unitary(int d) {
  Matrix u = Matrix::Zero(d * d, d * d);
  for (int q = 0; q < d; ++q) {
    for (int e = 0; e < d; ++e) {
      u(e * d + q, q * d + e) = 1.0;
    }
  }
  return u;
}

}  // namespace

InteractionModel pauli_control_model(PauliControlExtension ext) {
  SystemLayout qe({{kSystemLabel, 2}, {"E", 4}});
  UnitaryInteraction u(qe, control_pauli_unitary());

  DensityMatrix env = [&] {
    switch (ext) {
      case PauliControlExtension::kNone:
        return DensityMatrix::maximally_mixed(SystemLayout::single("E", 4));
      case PauliControlExtension::kEntangledCopy:
        return PureState::max_entangled("E", "Et", 4).to_density();
      case PauliControlExtension::kClassicalCopy:
      default: {
        SystemLayout layout({{"E", 4}, {"Et", 4}});
        Matrix m = Matrix::Zero(16, 16);
        for (int k = 0; k < 4; ++k) m(k * 4 + k, k * 4 + k) = 0.25;
        return DensityMatrix(layout, std::move(m));
      }
    }
  }();

  return InteractionModel{2, std::move(env), {"E"}, u, u};
}

InteractionModel swap_model(int d, const DensityMatrix& gamma_E,
                            bool* entropy_warning) {
  if (gamma_E.dim() != d) {
    throw std::invalid_argument(
        fmt::format("swap_model: environment dim {} != d {}", gamma_E.dim(),
                    d));
  }
  DensityMatrix env(SystemLayout::single("E", d), gamma_E.matrix());
  if (entropy_warning != nullptr) {
    *entropy_warning = von_neumann_entropy(env) >= std::log2(d) - 1e-12;
  }
  SystemLayout qe({{kSystemLabel, d}, {"E", d}});
  UnitaryInteraction u(qe, swap_unitary(d));
  return InteractionModel{d, std::move(env), {"E"}, u, u};
}

DensityMatrix env_with_binary_entropy(double bits, const std::string& label) {
  double p = binary_entropy_inverse(bits);
  RealVector spec(2);
  spec << p, 1.0 - p;
  return DensityMatrix::from_spectrum(SystemLayout::single(label, 2), spec);
}

InteractionModel random_model(int d_system, int d_env, int env_rank,
                              std::uint64_t seed) {
  SystemLayout qe({{kSystemLabel, d_system}, {"E", d_env}});
  Prng u_rng = Prng::substream(seed, 1);
  Prng v_rng = Prng::substream(seed, 2);
  UnitaryInteraction u(qe, haar_unitary_matrix(d_system * d_env, u_rng));
  UnitaryInteraction v(qe, haar_unitary_matrix(d_system * d_env, v_rng));
  DensityMatrix env = random_density(SystemLayout::single("E", d_env),
                                     env_rank, Prng::substream(seed, 0).bits());
  return InteractionModel{d_system, std::move(env), {"E"}, std::move(u),
                          std::move(v)};
}

InteractionModel random_markovian_model(int d_system, int d_env, int env_rank,
                                        std::uint64_t seed) {
  InteractionModel model = random_model(d_system, d_env, env_rank, seed);
  Prng w_rng = Prng::substream(seed, 3);
  Matrix w = haar_unitary_matrix(d_system, w_rng);
  Matrix v = kron(w, Matrix::Identity(d_env, d_env));
  model.V = UnitaryInteraction(model.U.output_layout(), std::move(v));
  return model;
}

void MixtureSpec::validate() const {
  if (components.empty()) {
    throw std::invalid_argument("mixture: no components");
  }
  double total = 0.0;
  for (const auto& [p, model] : components) {
    if (p < 0.0) {
      throw std::invalid_argument("mixture: negative probability");
    }
    total += p;
    model.validate();
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument(
        fmt::format("mixture: probabilities sum to {:.15f}", total));
  }
  const auto& first = components.front().second;
  for (const auto& [p, model] : components) {
    if (model.d_system != first.d_system) {
      throw std::invalid_argument("mixture: incompatible d_system");
    }
    if (model.env_state.layout().labels() !=
        first.env_state.layout().labels()) {
      throw std::invalid_argument(
          "mixture: environment factor labels differ across components");
    }
    if (model.dynamic_labels != first.dynamic_labels) {
      throw std::invalid_argument(
          "mixture: dynamic label sets differ across components");
    }
    if (model.U.input_layout().dims() != model.U.output_layout().dims() ||
        model.V.input_layout().dims() != model.V.output_layout().dims()) {
      throw std::invalid_argument(
          "mixture: components must preserve their factor dims");
    }
    if (model.env_state.layout().contains(kMixRegisterLabel) ||
        model.env_state.layout().contains(kMixCopyLabel)) {
      throw std::invalid_argument(fmt::format(
          "mixture: component environments must not use labels '{}'/'{}'",
          kMixRegisterLabel, kMixCopyLabel));
    }
  }
}

namespace {

// Flat-index embedding of a small multi-factor space into a larger one that
// extends each factor dimension (basis vectors map index-wise).
std::vector<std::int64_t> embedding_map(const std::vector<int>& small_dims,
                                        const std::vector<int>& big_dims) {
  std::int64_t small_total = 1;
  for (int d : small_dims) small_total *= d;
  std::vector<std::int64_t> big_strides(big_dims.size(), 1);
  for (int i = static_cast<int>(big_dims.size()) - 2; i >= 0; --i) {
    big_strides[i] = big_strides[i + 1] * big_dims[i + 1];
  }
  std::vector<std::int64_t> map(small_total);
  for (std::int64_t s = 0; s < small_total; ++s) {
    std::int64_t rem = s, big = 0;
    for (int i = static_cast<int>(small_dims.size()) - 1; i >= 0; --i) {
      big += (rem % small_dims[i]) * big_strides[i];
      rem /= small_dims[i];
    }
    map[s] = big;
  }
  return map;
}

// U (+) I on the orthogonal complement of the embedded input subspace.
Matrix embed_unitary_block(const Matrix& u, const std::vector<int>& small_dims,
                           const std::vector<int>& big_dims) {
  std::vector<std::int64_t> map = embedding_map(small_dims, big_dims);
  std::int64_t big_total = 1;
  for (int d : big_dims) big_total *= d;
  Matrix out = Matrix::Identity(big_total, big_total);
  for (std::int64_t j = 0; j < u.cols(); ++j) {
    out.col(map[j]).setZero();
  }
  for (std::int64_t i = 0; i < u.rows(); ++i) {
    for (std::int64_t j = 0; j < u.cols(); ++j) {
      out(map[i], map[j]) = u(i, j);
    }
  }
  return out;
}

}  // namespace

InteractionModel build_convex_mixture(const MixtureSpec& spec) {
  spec.validate();
  const auto& first = spec.components.front().second;
  const int n = static_cast<int>(spec.components.size());
  const int d = first.d_system;
  const std::vector<std::string> env_labels =
      first.env_state.layout().labels();
  const std::vector<std::string>& dyn = first.dynamic_labels;

  // Per-factor maximum dims across components.
  std::vector<int> env_max(env_labels.size(), 1);
  for (const auto& [p, model] : spec.components) {
    for (size_t i = 0; i < env_labels.size(); ++i) {
      env_max[i] = std::max(env_max[i],
                            model.env_state.layout().dim_of(env_labels[i]));
    }
  }

  // Environment layout: embedded factors, then the control register X and
  // its inert classical copy Xc.
  std::vector<Factor> env_factors;
  for (size_t i = 0; i < env_labels.size(); ++i) {
    env_factors.push_back({env_labels[i], env_max[i]});
  }
  env_factors.push_back({kMixRegisterLabel, n});
  env_factors.push_back({kMixCopyLabel, n});
  SystemLayout env_layout(env_factors);

  std::int64_t env_emb_dim = 1;
  for (int dd : env_max) env_emb_dim *= dd;
  Matrix env = Matrix::Zero(env_emb_dim * n * n, env_emb_dim * n * n);
  for (int x = 0; x < n; ++x) {
    const auto& [p, model] = spec.components[x];
    std::vector<std::int64_t> map =
        embedding_map(model.env_state.layout().dims(), env_max);
    const Matrix& g = model.env_state.matrix();
    const std::int64_t reg = static_cast<std::int64_t>(x) * n + x;
    for (std::int64_t i = 0; i < g.rows(); ++i) {
      for (std::int64_t j = 0; j < g.cols(); ++j) {
        env(map[i] * n * n + reg, map[j] * n * n + reg) = p * g(i, j);
      }
    }
  }

  // Controlled unitaries on [Q, dyn..., X].
  std::vector<Factor> u_in_factors = {{kSystemLabel, d}};
  std::vector<int> dyn_max;
  for (const auto& lbl : dyn) {
    size_t pos = std::find(env_labels.begin(), env_labels.end(), lbl) -
                 env_labels.begin();
    u_in_factors.push_back({lbl, env_max[pos]});
    dyn_max.push_back(env_max[pos]);
  }
  u_in_factors.push_back({kMixRegisterLabel, n});
  SystemLayout u_layout(u_in_factors);

  auto controlled = [&](bool second_step) {
    std::int64_t block = d;
    for (int dd : dyn_max) block *= dd;
    Matrix out = Matrix::Zero(block * n, block * n);
    for (int x = 0; x < n; ++x) {
      const auto& model = spec.components[x].second;
      const UnitaryInteraction& u = second_step ? model.V : model.U;
      std::vector<int> small_dims = u.input_layout().dims();
      std::vector<int> big_dims = {d};
      big_dims.insert(big_dims.end(), dyn_max.begin(), dyn_max.end());
      Matrix emb = embed_unitary_block(u.matrix(), small_dims, big_dims);
      for (std::int64_t i = 0; i < block; ++i) {
        for (std::int64_t j = 0; j < block; ++j) {
          if (emb(i, j) != Complex(0, 0)) {
            out(i * n + x, j * n + x) = emb(i, j);
          }
        }
      }
    }
    return out;
  };

  UnitaryInteraction u_mix(u_layout, controlled(false));
  UnitaryInteraction v_mix(u_layout, controlled(true));

  std::vector<std::string> dynamic = dyn;
  dynamic.push_back(kMixRegisterLabel);

  return InteractionModel{d,
                          DensityMatrix(env_layout, std::move(env)),
                          std::move(dynamic),
                          std::move(u_mix),
                          std::move(v_mix)};
}

ExtendedDpiReport verify_extended_dpi(const Snapshot& mixture_snapshot,
                                      const MixtureSpec& spec) {
  spec.validate();
  const Snapshot& snap = mixture_snapshot;
  if (!snap.model.env_state.layout().contains(kMixCopyLabel)) {
    throw std::invalid_argument(
        "verify_extended_dpi: snapshot does not carry a mixture copy factor");
  }
  std::vector<std::string> inert = snap.inert_labels();
  std::vector<std::string> q_and_inert = {kSystemLabel};
  q_and_inert.insert(q_and_inert.end(), inert.begin(), inert.end());

  ExtendedDpiReport report;
  report.value_bits =
      qmi(snap.state_t1, {kReferenceLabel}, q_and_inert) -
      qmi(snap.state_t2, {kReferenceLabel}, q_and_inert);
  report.conditional_qmi_t1 =
      qcmi(snap.state_t1, {kReferenceLabel}, {kSystemLabel}, {kMixCopyLabel});
  double avg = 0.0;
  for (const auto& [p, model] : spec.components) {
    if (p == 0.0) continue;
    Snapshot comp = run_snapshot(model);
    avg += p * qmi(comp.reduced_t1, {kReferenceLabel}, {kSystemLabel});
  }
  report.component_average_t1 = avg;
  return report;
}

}  // namespace revivals
