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

#include "revivals/entropy.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "revivals/errors.hpp"

namespace revivals {

namespace {

constexpr double kEigCut = 1e-14;
constexpr double kNonnegSlack = 1e-9;

double clamp_nonneg(double value, const char* what) {
  if (value < -kNonnegSlack) {
    throw invariant_violation(
        fmt::format("{} is {:.3e}, below the numerical slack", what, value));
  }
  return std::max(value, 0.0);
}

std::vector<std::string> concat_labels(
    std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> all;
  for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
  return all;
}

void require_disjoint(const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  if (!disjoint_labels(a, b)) {
    throw std::invalid_argument("entropy: overlapping label sets");
  }
}

}  // namespace

double spectrum_entropy_bits(const RealVector& spectrum) {
  double h = 0.0;
  for (int i = 0; i < spectrum.size(); ++i) {
    double p = spectrum[i];
    if (p > kEigCut) h -= p * std::log2(p);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = spectrum_entropy_bits(hermitian_eigenvalues(rho.matrix()));
  return clamp_nonneg(h, "von Neumann entropy");
}

double von_neumann_entropy(const DensityMatrix& rho,
                           const std::vector<std::string>& subset) {
  if (subset.size() == rho.layout().factors().size() &&
      rho.layout().subset(subset).total_dim() == rho.dim()) {
    return von_neumann_entropy(rho);
  }
  return von_neumann_entropy(partial_trace(rho, subset));
}

double subset_entropy_bits(const PureState& psi,
                           const std::vector<std::string>& subset) {
  const SystemLayout& layout = psi.layout();
  positions_of(layout, subset);  // validates
  SystemLayout kept = layout.subset(subset);
  const std::int64_t dk = kept.total_dim();
  const std::int64_t dt = layout.total_dim() / dk;
  if (dt == 1) return 0.0;  // globally pure

  // Reshape the permuted vector into a dk x dt matrix M, then take the
  // eigenvalues of the smaller Gram matrix: nonzero spectra of M M^dag and
  // M^dag M coincide.
  std::vector<std::string> order = kept.labels();
  for (const auto& f : layout.factors()) {
    if (!kept.contains(f.label)) order.push_back(f.label);
  }
  PureState permuted = permute_factors(psi, order);
  Eigen::Map<const Matrix> m(permuted.vector().data(), dt, dk);
  // Eigen maps are column-major: column k holds the dt-block of kept index k,
  // i.e. m(t, k) = v[k*dt + t], so m is M^T with shape dt x dk.
  Matrix gram;
  if (dk <= dt) {
    gram = m.adjoint() * m;  // dk x dk
  } else {
    gram = m * m.adjoint();  // dt x dt
  }
  double h = spectrum_entropy_bits(hermitian_eigenvalues(gram));
  return clamp_nonneg(h, "subset entropy");
}

double qmi(const DensityMatrix& rho, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
  require_disjoint(a, b);
  std::vector<std::string> ab = concat_labels({&a, &b});
  double value = von_neumann_entropy(rho, a) + von_neumann_entropy(rho, b) -
                 von_neumann_entropy(rho, ab);
  return clamp_nonneg(value, "QMI");
}

double qcmi(const DensityMatrix& rho, const std::vector<std::string>& a,
            const std::vector<std::string>& c,
            const std::vector<std::string>& b) {
  require_disjoint(a, c);
  require_disjoint(a, b);
  require_disjoint(c, b);
  std::vector<std::string> ab = concat_labels({&a, &b});
  std::vector<std::string> bc = concat_labels({&b, &c});
  std::vector<std::string> abc = concat_labels({&a, &b, &c});
  double value = von_neumann_entropy(rho, ab) + von_neumann_entropy(rho, bc) -
                 (b.empty() ? 0.0 : von_neumann_entropy(rho, b)) -
                 von_neumann_entropy(rho, abc);
  if (value < -kNonnegSlack) {
    throw invariant_violation(
        fmt::format("QCMI is {:.3e}, below the numerical slack", value));
  }
  return value;
}

double qmi(const PureState& psi, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
  require_disjoint(a, b);
  std::vector<std::string> ab = concat_labels({&a, &b});
  double value = subset_entropy_bits(psi, a) + subset_entropy_bits(psi, b) -
                 subset_entropy_bits(psi, ab);
  return clamp_nonneg(value, "QMI");
}

double qcmi(const PureState& psi, const std::vector<std::string>& a,
            const std::vector<std::string>& c,
            const std::vector<std::string>& b) {
  require_disjoint(a, c);
  require_disjoint(a, b);
  require_disjoint(c, b);
  std::vector<std::string> ab = concat_labels({&a, &b});
  std::vector<std::string> bc = concat_labels({&b, &c});
  std::vector<std::string> abc = concat_labels({&a, &b, &c});
  double value = subset_entropy_bits(psi, ab) + subset_entropy_bits(psi, bc) -
                 (b.empty() ? 0.0 : subset_entropy_bits(psi, b)) -
                 subset_entropy_bits(psi, abc);
  if (value < -kNonnegSlack) {
    throw invariant_violation(
        fmt::format("QCMI is {:.3e}, below the numerical slack", value));
  }
  return value;
}

double coherent_information(const DensityMatrix& rho,
                            const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  require_disjoint(a, b);
  std::vector<std::string> ab = concat_labels({&a, &b});
  double hab = von_neumann_entropy(rho, ab);
  double forward = von_neumann_entropy(rho, b) - hab;
  double reverse = von_neumann_entropy(rho, a) - hab;
  return std::max({forward, reverse, 0.0});
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double binary_entropy_inverse(double bits) {
  if (bits < 0.0 || bits > 1.0) {
    throw std::invalid_argument("binary_entropy_inverse: bits outside [0,1]");
  }
  double lo = 0.0, hi = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < bits) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace revivals
