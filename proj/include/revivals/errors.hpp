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

#include <stdexcept>
#include <string>

namespace revivals {

// Raised when a constructed object breaks one of its numerical invariants
// (non-Hermitian state, eigenvalue below the hard floor, broken trace, ...).
// The CLI maps this to exit code 2; plain std::invalid_argument (bad labels,
// shape mismatches, malformed configs) maps to exit code 1.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& what)
      : std::runtime_error(what) {}
};

// Total dimension cap for every constructed multipartite object. Desk-scale
// by design; anything larger signals a misconfigured sweep.
inline constexpr int kMaxTotalDim = 4096;

}  // namespace revivals
