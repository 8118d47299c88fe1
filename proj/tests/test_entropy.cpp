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

#include "revivals/channel.hpp"
#include "revivals/entropy.hpp"
#include "revivals/errors.hpp"
#include "revivals/random.hpp"
#include "test_helpers.hpp"

using namespace revivals;
namespace rt = revivals::testing;

TEST_CASE("von Neumann entropy") {
  SUBCASE("pure states have zero entropy") {
    auto psi = random_pure(SystemLayout::single("A", 5), 7);
    CHECK(von_neumann_entropy(psi.to_density()) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("maximally mixed 4-dim environment carries 2 bits") {
    auto gamma = DensityMatrix::maximally_mixed(SystemLayout::single("E", 4));
    CHECK(von_neumann_entropy(gamma) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("diag(1/2, 1/4, 1/4) carries 1.5 bits") {
    RealVector spec(3);
    spec << 0.5, 0.25, 0.25;
    auto rho =
        DensityMatrix::from_spectrum(SystemLayout::single("A", 3), spec);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(1.5).epsilon(1e-12));
    // Independent route: the raw eigenvalue formula.
    CHECK(rt::entropy_oracle_bits(spec) == doctest::Approx(1.5));
  }

  SUBCASE("subset entropy bounded by log2 of the subset dim") {
    SystemLayout layout({{"A", 2}, {"B", 3}});
    auto rho = random_density(layout, 6, 8);
    double h = von_neumann_entropy(rho, {"B"});
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(3.0) + 1e-9);
  }

  SUBCASE("unknown label") {
    auto rho = random_density(SystemLayout::single("A", 2), 2, 9);
    CHECK_THROWS_AS(von_neumann_entropy(rho, {"Z"}), std::invalid_argument);
  }
}

TEST_CASE("pure-state subset entropy matches the density-matrix route") {
  SystemLayout layout({{"A", 2}, {"B", 3}, {"C", 2}});
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto psi = random_pure(layout, 900 + s);
    auto rho = psi.to_density();
    for (const auto& subset :
         std::vector<std::vector<std::string>>{{"A"}, {"B"}, {"A", "C"},
                                               {"B", "C"}, {"A", "B", "C"}}) {
      CHECK(subset_entropy_bits(psi, subset) ==
            doctest::Approx(von_neumann_entropy(rho, subset)).epsilon(1e-9));
    }
  }
}

TEST_CASE("quantum mutual information") {
  SUBCASE("two-qubit maximally entangled pair: 2 bits") {
    auto phi = PureState::max_entangled("R", "Q", 2).to_density();
    CHECK(qmi(phi, {"R"}, {"Q"}) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("product state: 0 bits") {
    auto a = random_density(SystemLayout::single("A", 2), 2, 11);
    auto b = random_density(SystemLayout::single("B", 3), 3, 12);
    CHECK(qmi(tensor(a, b), {"A"}, {"B"}) ==
          doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("overlapping label sets rejected") {
    auto phi = PureState::max_entangled("R", "Q", 2).to_density();
    CHECK_THROWS_AS(qmi(phi, {"R"}, {"R"}), std::invalid_argument);
  }

  SUBCASE("bounded by twice the smaller log-dim") {
    SystemLayout layout({{"A", 2}, {"B", 4}});
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto rho = random_density(layout, 4, 100 + s);
      double v = qmi(rho, {"A"}, {"B"});
      CHECK(v >= 0.0);
      CHECK(v <= 2.0 * std::log2(2.0) + 1e-9);
    }
  }
}

TEST_CASE("quantum conditional mutual information") {
  SUBCASE("product third factor gives zero") {
    SystemLayout ab({{"A", 2}, {"B", 2}});
    auto rho_ab = random_density(ab, 3, 21);
    auto rho_c = random_density(SystemLayout::single("C", 2), 2, 22);
    auto rho = tensor(rho_ab, rho_c);
    CHECK(qcmi(rho, {"A"}, {"C"}, {"B"}) ==
          doctest::Approx(0.0).epsilon(1e-10));
  }

  SUBCASE("three-qubit GHZ: I(A;C|B) = 1 bit") {
    SystemLayout layout({{"A", 2}, {"B", 2}, {"C", 2}});
    Vector v = Vector::Zero(8);
    v[0] = v[7] = 1.0 / std::sqrt(2.0);
    auto ghz = PureState(layout, v).to_density();
    // Direct entropy oracle: H(AB) = H(BC) = H(B) = 1, H(ABC) = 0.
    CHECK(von_neumann_entropy(ghz, {"A", "B"}) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(ghz, {"B", "C"}) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(ghz, {"B"}) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(ghz) == doctest::Approx(0.0));
    CHECK(qcmi(ghz, {"A"}, {"C"}, {"B"}) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("chain rule against qmi") {
    SystemLayout layout({{"A", 2}, {"B", 2}, {"C", 3}});
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto rho = random_density(layout, 5, 200 + s);
      double lhs = qmi(rho, {"A"}, {"B", "C"});
      double rhs = qmi(rho, {"A"}, {"B"}) + qcmi(rho, {"A"}, {"C"}, {"B"});
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }

  SUBCASE("nonnegative on random tripartite states") {
    SystemLayout layout({{"A", 2}, {"B", 2}, {"C", 2}});
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto rho = random_density(layout, 4, 300 + s);
      CHECK(qcmi(rho, {"A"}, {"C"}, {"B"}) >= -1e-9);
    }
  }
}

TEST_CASE("coherent information") {
  SUBCASE("maximally entangled pair: 1 bit") {
    auto phi = PureState::max_entangled("A", "B", 2).to_density();
    CHECK(coherent_information(phi, {"A"}, {"B"}) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("product states: 0") {
    auto a = random_density(SystemLayout::single("A", 2), 2, 31);
    auto b = random_density(SystemLayout::single("B", 2), 2, 32);
    CHECK(coherent_information(tensor(a, b), {"A"}, {"B"}) ==
          doctest::Approx(0.0));
  }

  SUBCASE("two-qubit isotropic state at visibility 1/2") {
    // rho = v*Phi + (1-v)*I/4 with v = 1/2; eigenvalues by brute force:
    // 5/8 on the entangled vector, 1/8 on the rest.
    auto phi = PureState::max_entangled("A", "B", 2).to_density();
    Matrix iso = 0.5 * phi.matrix() + 0.5 * Matrix::Identity(4, 4) / 4.0;
    RealVector lam = hermitian_eigenvalues(iso);
    std::vector<double> sorted(lam.data(), lam.data() + 4);
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted[3] == doctest::Approx(5.0 / 8.0));
    CHECK(sorted[0] == doctest::Approx(1.0 / 8.0));
    double h_ab = rt::entropy_oracle_bits(lam);
    double expected = std::max({1.0 - h_ab, 0.0});  // H(A) = H(B) = 1
    auto rho = DensityMatrix(phi.layout(), iso);
    CHECK(coherent_information(rho, {"A"}, {"B"}) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("data-processing inequality under random local channels") {
  SystemLayout layout({{"A", 2}, {"B", 3}});
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto rho = random_density(layout, 4, 400 + s);
    double before = qmi(rho, {"A"}, {"B"});
    auto chan = random_channel(SystemLayout::single("B", 3),
                               SystemLayout::single("B", 3), 2, 500 + s);
    auto after_state = apply_channel(rho, chan);
    double after = qmi(after_state, {"A"}, {"B"});
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("binary entropy helpers") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
  double p = binary_entropy_inverse(0.5);
  CHECK(binary_entropy(p) == doctest::Approx(0.5).epsilon(1e-12));
  // Bisection oracle freeze.
  CHECK(p == doctest::Approx(0.11002786443835955).epsilon(1e-12));
}
