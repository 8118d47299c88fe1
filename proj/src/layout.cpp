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

#include "revivals/layout.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

#include "revivals/errors.hpp"

namespace revivals {

SystemLayout::SystemLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::unordered_set<std::string> seen;
  total_dim_ = 1;
  for (const auto& f : factors_) {
    if (f.label.empty()) {
      throw std::invalid_argument("layout: empty factor label");
    }
    if (f.dim < 1) {
      throw std::invalid_argument(
          fmt::format("layout: factor '{}' has dim {} < 1", f.label, f.dim));
    }
    if (!seen.insert(f.label).second) {
      throw std::invalid_argument(
          fmt::format("layout: duplicate factor label '{}'", f.label));
    }
    if (total_dim_ > kMaxTotalDim / f.dim) {
      throw std::invalid_argument(
          fmt::format("layout: total dimension exceeds desk-scale cap {}",
                      kMaxTotalDim));
    }
    total_dim_ *= f.dim;
  }
}

SystemLayout SystemLayout::single(const std::string& label, int dim) {
  return SystemLayout({{label, dim}});
}

bool SystemLayout::contains(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int SystemLayout::position(const std::string& label) const {
  for (int i = 0; i < num_factors(); ++i) {
    if (factors_[i].label == label) return i;
  }
  throw std::invalid_argument(
      fmt::format("layout: unknown factor label '{}'", label));
}

int SystemLayout::dim_of(const std::string& label) const {
  return factors_[position(label)].dim;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

SystemLayout SystemLayout::subset(
    const std::vector<std::string>& labels) const {
  // Validate labels (and reject duplicates) before filtering.
  positions_of(*this, labels);
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) {
      kept.push_back(f);
    }
  }
  return SystemLayout(std::move(kept));
}

SystemLayout SystemLayout::complement(
    const std::vector<std::string>& labels) const {
  positions_of(*this, labels);
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) == labels.end()) {
      kept.push_back(f);
    }
  }
  return SystemLayout(std::move(kept));
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Factor> all = factors_;
  for (const auto& f : other.factors_) {
    if (contains(f.label)) {
      throw std::invalid_argument(
          fmt::format("layout: label collision on '{}' in tensor product",
                      f.label));
    }
    all.push_back(f);
  }
  return SystemLayout(std::move(all));
}

SystemLayout SystemLayout::append(const std::string& label, int dim) const {
  return concat(SystemLayout::single(label, dim));
}

SystemLayout SystemLayout::reordered(
    const std::vector<std::string>& new_order) const {
  if (static_cast<int>(new_order.size()) != num_factors()) {
    throw std::invalid_argument(
        "layout: reorder list is not a permutation of the labels");
  }
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const auto& lbl : new_order) {
    out.push_back(factors_[position(lbl)]);
  }
  SystemLayout result(std::move(out));  // ctor re-checks uniqueness
  return result;
}

std::vector<std::int64_t> SystemLayout::strides() const {
  std::vector<std::int64_t> s(factors_.size(), 1);
  for (int i = num_factors() - 2; i >= 0; --i) {
    s[i] = s[i + 1] * factors_[i + 1].dim;
  }
  return s;
}

std::int64_t SystemLayout::flat_index(const std::vector<int>& digits) const {
  std::int64_t flat = 0;
  for (int i = 0; i < num_factors(); ++i) {
    flat = flat * factors_[i].dim + digits[i];
  }
  return flat;
}

std::vector<int> SystemLayout::digits(std::int64_t flat) const {
  std::vector<int> d(factors_.size());
  for (int i = num_factors() - 1; i >= 0; --i) {
    d[i] = static_cast<int>(flat % factors_[i].dim);
    flat /= factors_[i].dim;
  }
  return d;
}

std::vector<int> positions_of(const SystemLayout& layout,
                              const std::vector<std::string>& labels) {
  std::vector<int> pos;
  pos.reserve(labels.size());
  std::set<int> seen;
  for (const auto& lbl : labels) {
    int p = layout.position(lbl);
    if (!seen.insert(p).second) {
      throw std::invalid_argument(
          fmt::format("layout: label '{}' given twice", lbl));
    }
    pos.push_back(p);
  }
  return pos;
}

bool disjoint_labels(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

}  // namespace revivals
