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

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "revivals/layout.hpp"
#include "revivals/linalg.hpp"
#include "revivals/states.hpp"

namespace revivals {

// Seedable generator used throughout. Gaussians are produced by an explicit
// Box-Muller transform over the raw 64-bit stream, so a fixed seed gives the
// same draws on every platform (std::normal_distribution does not promise
// that).
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : eng_(seed) {}

  double uniform();        // [0, 1)
  double gaussian();       // standard normal
  Complex complex_gaussian();  // re, im independent N(0, 1/2)
  std::uint64_t bits() { return eng_(); }

  // Independent child stream, stable under reordering of sibling draws.
  static Prng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-distributed unitary via QR of a Ginibre matrix with the R-diagonal
// phase correction.
Matrix haar_unitary_matrix(int dim, Prng& rng);
Matrix haar_unitary_matrix(int dim, std::uint64_t seed);

// Random density operator of the given rank: G G^dag / tr for a dim x rank
// complex Gaussian G.
DensityMatrix random_density(const SystemLayout& layout, int rank,
                             std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

// Random pure state (uniform on the sphere).
PureState random_pure(const SystemLayout& layout, std::uint64_t seed);

}  // namespace revivals
