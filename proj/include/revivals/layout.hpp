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
#include <string>
#include <vector>

namespace revivals {

struct Factor {
  std::string label;
  int dim = 0;

  bool operator==(const Factor&) const = default;
};

// Ordered, labeled tensor factors. The flat basis index is row-major over
// the factor list: factor 0 is the most significant digit, matching the
// Kronecker-product convention kron(A, B)[a*dB + b].
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Factor> factors);

  static SystemLayout single(const std::string& label, int dim);

  const std::vector<Factor>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  int total_dim() const { return total_dim_; }

  bool contains(const std::string& label) const;
  // Position of `label` in the factor list; throws std::invalid_argument on
  // unknown labels.
  int position(const std::string& label) const;
  int dim_of(const std::string& label) const;

  std::vector<std::string> labels() const;
  std::vector<int> dims() const;

  // Factors named in `labels`, kept in this layout's order.
  SystemLayout subset(const std::vector<std::string>& labels) const;
  // Factors not named in `labels`, in this layout's order.
  SystemLayout complement(const std::vector<std::string>& labels) const;
  // Concatenation; throws on label collision.
  SystemLayout concat(const SystemLayout& other) const;
  SystemLayout append(const std::string& label, int dim) const;
  // Same factors rearranged into the order given by `new_order`, which must
  // be a permutation of this layout's labels.
  SystemLayout reordered(const std::vector<std::string>& new_order) const;

  // Stride of each factor in the flat index.
  std::vector<std::int64_t> strides() const;

  // Flat index of a multi-index (digit per factor, same order as factors).
  std::int64_t flat_index(const std::vector<int>& digits) const;
  // Inverse of flat_index.
  std::vector<int> digits(std::int64_t flat) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Factor> factors_;
  int total_dim_ = 1;
};

// Positions (in layout order) of the given labels; throws on unknown or
// duplicated labels.
std::vector<int> positions_of(const SystemLayout& layout,
                              const std::vector<std::string>& labels);

// True if the two label sets share no element.
bool disjoint_labels(const std::vector<std::string>& a,
                     const std::vector<std::string>& b);

}  // namespace revivals
