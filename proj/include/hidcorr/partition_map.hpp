// Copyright 2026 The hidcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Mixed-radix map between a flat index y in 1..N and a multi-index
// (x_1, ..., x_M) with x_k in 1..X_k and N = X_1 * ... * X_M:
//
//   y = x_1 + sum_{k=2}^{M} (x_k - 1) * X_1 * ... * X_{k-1}
//
// x_1 is the fastest-varying coordinate. Public entry points are 1-based;
// the mixed_radix namespace works on 0-based digits.

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hidcorr/errors.hpp"

namespace hidcorr {

using Index = std::ptrdiff_t;

class Factorization {
 public:
  explicit Factorization(std::vector<Index> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw UsageError("factorization needs at least one factor");
    strides_.resize(dims_.size());
    Index total = 1;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (dims_[k] < 1) {
        throw UsageError("factor " + std::to_string(k + 1) +
                         " must be a positive integer, got " +
                         std::to_string(dims_[k]));
      }
      if (total > std::numeric_limits<Index>::max() / dims_[k]) {
        throw UsageError("factorization total overflows");
      }
      strides_[k] = total;
      total *= dims_[k];
    }
    total_ = total;
  }
  Factorization(std::initializer_list<Index> dims)
      : Factorization(std::vector<Index>(dims)) {}

  const std::vector<Index>& dims() const noexcept { return dims_; }
  // Number of factors M.
  Index rank() const noexcept { return static_cast<Index>(dims_.size()); }
  // N, the product of all factors.
  Index total() const noexcept { return total_; }
  // X_k for 1-based axis k.
  Index dim(Index axis) const { return dims_.at(static_cast<std::size_t>(axis - 1)); }
  // Weight of 0-based axis k in the flat offset.
  Index stride(std::size_t k) const { return strides_.at(k); }
  // M == 1: nothing to correlate.
  bool trivial() const noexcept { return dims_.size() == 1; }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<Index> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

inline std::string to_string(const Factorization& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.dims().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(f.dims()[k]);
  }
  return s + "]";
}

struct MultiIndex {
  Factorization factorization;
  std::vector<Index> coords;  // 1-based

  MultiIndex(Factorization f, std::vector<Index> c)
      : factorization(std::move(f)), coords(std::move(c)) {}
};

namespace mixed_radix {

inline Index offset(const Factorization& f, std::span<const Index> digits) {
  Index y = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) y += digits[k] * f.stride(k);
  return y;
}

inline void digits(const Factorization& f, Index offset, std::span<Index> out) {
  const auto& d = f.dims();
  for (std::size_t k = 0; k < d.size(); ++k) {
    out[k] = offset % d[k];
    offset /= d[k];
  }
}

}  // namespace mixed_radix

inline Index compose(const MultiIndex& index) {
  const Factorization& f = index.factorization;
  if (static_cast<Index>(index.coords.size()) != f.rank()) {
    throw UsageError("multi-index has " + std::to_string(index.coords.size()) +
                     " coordinates, factorization " + to_string(f) + " has " +
                     std::to_string(f.rank()));
  }
  Index y = 1;
  for (std::size_t k = 0; k < index.coords.size(); ++k) {
    const Index x = index.coords[k];
    if (x < 1 || x > f.dims()[k]) {
      throw DomainError("coordinate on axis " + std::to_string(k + 1) + " is " +
                        std::to_string(x) + ", outside 1.." +
                        std::to_string(f.dims()[k]));
    }
    y += (x - 1) * f.stride(k);
  }
  return y;
}

inline Index compose(const Factorization& f, std::vector<Index> coords) {
  return compose(MultiIndex(f, std::move(coords)));
}

inline void check_flat(Index y, const Factorization& f) {
  if (y < 1 || y > f.total()) {
    throw DomainError("flat index " + std::to_string(y) + " outside 1.." +
                      std::to_string(f.total()));
  }
}

inline MultiIndex decompose(Index y, const Factorization& f) {
  check_flat(y, f);
  std::vector<Index> coords(f.dims().size());
  mixed_radix::digits(f, y - 1, coords);
  for (auto& c : coords) ++c;
  return MultiIndex(f, std::move(coords));
}

// Bipartition of the axes into a leading block 1..s and a trailing block
// s+1..M. Because x_1 varies fastest, a flat 0-based offset factors as
// left + dim_left * right.
class QuditSplit {
 public:
  QuditSplit(Factorization f, Index s) : f_(std::move(f)), s_(s) {
    if (s_ < 1 || s_ >= f_.rank()) {
      throw UsageError("split point " + std::to_string(s_) +
                       " must satisfy 1 <= s < M = " + std::to_string(f_.rank()));
    }
    for (Index k = 0; k < s_; ++k) left_ *= f_.dims()[static_cast<std::size_t>(k)];
    right_ = f_.total() / left_;
  }

  const Factorization& factorization() const noexcept { return f_; }
  Index s() const noexcept { return s_; }
  Index dim_left() const noexcept { return left_; }
  Index dim_right() const noexcept { return right_; }

 private:
  Factorization f_;
  Index s_;
  Index left_ = 1;
  Index right_ = 1;
};

// (left group index, right group index), both 1-based.
inline std::pair<Index, Index> split_index(Index y, const QuditSplit& split) {
  check_flat(y, split.factorization());
  const Index offset = y - 1;
  return {offset % split.dim_left() + 1, offset / split.dim_left() + 1};
}

}  // namespace hidcorr
