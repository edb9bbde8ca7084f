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

// A single-variable distribution P(y) read as a joint distribution over the
// axes of a Factorization, with marginals, Bayes conditionals, Shannon and
// Tsallis entropies (natural log) and their relative forms.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hidcorr/errors.hpp"
#include "hidcorr/partition_map.hpp"
#include "hidcorr/tolerances.hpp"

namespace hidcorr {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
class ProbabilityVector {
 public:
  // Entries in [-1e-12, 0) are clamped to zero and the result renormalized.
  explicit ProbabilityVector(Vector<Scalar> p) : p_(std::move(p)) {
    if (p_.size() == 0) throw UsageError("probability vector is empty");
    for (Index i = 0; i < p_.size(); ++i) {
      const Scalar v = p_(i);
      if (!std::isfinite(static_cast<double>(v))) {
        throw DomainError("P(" + std::to_string(i + 1) + ") is not finite");
      }
      if (v < -Scalar(tol::kNegativeClamp) || v > Scalar(1 + tol::kNormalization)) {
        throw DomainError("P(" + std::to_string(i + 1) + ") = " +
                          std::to_string(static_cast<double>(v)) +
                          " outside [0, 1]");
      }
      if (v < 0) p_(i) = 0;
    }
    const Scalar sum = p_.sum();
    if (std::abs(static_cast<double>(sum) - 1.0) > tol::kNormalization) {
      throw DomainError("probabilities sum to " +
                        std::to_string(static_cast<double>(sum)) + ", not 1");
    }
    p_ /= sum;
  }

  ProbabilityVector(std::initializer_list<Scalar> p)
      : ProbabilityVector(from_list(p)) {}

  // Scales nonnegative weights to unit sum.
  static ProbabilityVector normalized(Vector<Scalar> weights) {
    const Scalar sum = weights.sum();
    if (!(sum > 0)) throw DomainError("weights have no positive mass");
    return ProbabilityVector(Vector<Scalar>(weights / sum));
  }

  const Vector<Scalar>& values() const noexcept { return p_; }
  Index size() const noexcept { return p_.size(); }
  // 0-based access.
  Scalar operator()(Index i) const { return p_(i); }

 private:
  static Vector<Scalar> from_list(std::initializer_list<Scalar> p) {
    Vector<Scalar> v(static_cast<Index>(p.size()));
    Index i = 0;
    for (Scalar x : p) v(i++) = x;
    return v;
  }

  Vector<Scalar> p_;
};

// Pi(x_1..x_M) = P(y(x_1..x_M)); holds the base vector unchanged.
template <typename Scalar = double>
class JointView {
 public:
  JointView(ProbabilityVector<Scalar> base, Factorization f)
      : base_(std::move(base)), f_(std::move(f)) {
    if (base_.size() != f_.total()) {
      throw UsageError("dimension mismatch: " + std::to_string(base_.size()) +
                       " probabilities, factorization " + to_string(f_) +
                       " has N = " + std::to_string(f_.total()));
    }
  }

  const ProbabilityVector<Scalar>& base() const noexcept { return base_; }
  const Factorization& factorization() const noexcept { return f_; }

  Scalar operator()(const MultiIndex& x) const {
    if (!(x.factorization == f_)) throw UsageError("multi-index over a different factorization");
    return base_(compose(x) - 1);
  }

 private:
  ProbabilityVector<Scalar> base_;
  Factorization f_;
};

class TsallisParam {
 public:
  explicit TsallisParam(double q) : q_(q) {
    if (!std::isfinite(q) || q <= 0.0 || q == 1.0) {
      throw UsageError("Tsallis q must be positive and different from 1, got " +
                       std::to_string(q));
    }
  }
  double q() const noexcept { return q_; }

 private:
  double q_;
};

// Relative entropies are +infinity when the reference misses support of the
// first argument; the flag is explicit so inequality checks stay decidable.
template <typename Scalar>
struct Divergence {
  Scalar value = 0;
  bool infinite = false;

  static Divergence infinity() {
    return {std::numeric_limits<Scalar>::infinity(), true};
  }
};

template <typename Scalar>
struct SubadditivityReport {
  Scalar entropy_left = 0;
  Scalar entropy_right = 0;
  Scalar entropy_joint = 0;
  Scalar mutual_info = 0;
  bool holds = true;
  double tolerance = tol::kInequality;
};

template <typename Scalar>
struct StrongSubadditivityReport {
  Scalar lhs = 0;  // S(A,B) + S(B,C)
  Scalar rhs = 0;  // S(A,B,C) + S(B)
  bool holds = true;
  double tolerance = tol::kInequality;
};

namespace detail {

// Validates a 1-based axis subset and returns it sorted.
inline std::vector<Index> checked_axes(std::vector<Index> axes, const Factorization& f,
                                       const char* what) {
  if (axes.empty()) throw UsageError(std::string(what) + " axis set is empty");
  std::sort(axes.begin(), axes.end());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 1 || axes[i] > f.rank()) {
      throw UsageError(std::string(what) + " axis " + std::to_string(axes[i]) +
                       " outside 1.." + std::to_string(f.rank()));
    }
    if (i && axes[i] == axes[i - 1]) {
      throw UsageError(std::string(what) + " axis " + std::to_string(axes[i]) +
                       " repeated");
    }
  }
  return axes;
}

// Composite 0-based index of the digits on the given axes, first axis fastest.
inline Index group_offset(std::span<const Index> digits, const std::vector<Index>& axes,
                          const Factorization& f) {
  Index offset = 0;
  Index weight = 1;
  for (Index axis : axes) {
    offset += digits[static_cast<std::size_t>(axis - 1)] * weight;
    weight *= f.dim(axis);
  }
  return offset;
}

inline Index group_size(const std::vector<Index>& axes, const Factorization& f) {
  Index n = 1;
  for (Index axis : axes) n *= f.dim(axis);
  return n;
}

inline std::vector<Index> axis_range(Index first, Index last) {
  std::vector<Index> axes;
  for (Index k = first; k <= last; ++k) axes.push_back(k);
  return axes;
}

template <typename Scalar>
Scalar xlogx(Scalar p) {
  using std::log;
  return p > 0 ? p * log(p) : Scalar(0);
}

}  // namespace detail

// Sums Pi over every axis not in kept_axes. The result is indexed by the
// kept axes in ascending order, lowest axis fastest.
template <typename Scalar>
ProbabilityVector<Scalar> marginal(const JointView<Scalar>& view,
                                   std::vector<Index> kept_axes) {
  const Factorization& f = view.factorization();
  const auto axes = detail::checked_axes(std::move(kept_axes), f, "marginal");
  Vector<Scalar> out = Vector<Scalar>::Zero(detail::group_size(axes, f));
  std::vector<Index> digits(f.dims().size());
  for (Index y = 0; y < f.total(); ++y) {
    mixed_radix::digits(f, y, digits);
    out(detail::group_offset(digits, axes, f)) += view.base()(y);
  }
  return ProbabilityVector<Scalar>::normalized(std::move(out));
}

// Bayes conditional p(target | given = given_values). Axes outside both sets
// are summed out. given_values are 1-based and follow the order of given_axes.
template <typename Scalar>
ProbabilityVector<Scalar> conditional(const JointView<Scalar>& view,
                                      std::vector<Index> given_axes,
                                      std::vector<Index> target_axes,
                                      std::vector<Index> given_values) {
  const Factorization& f = view.factorization();
  if (given_axes.size() != given_values.size()) {
    throw UsageError("conditional needs one value per conditioning axis");
  }
  std::vector<std::pair<Index, Index>> given;
  for (std::size_t i = 0; i < given_axes.size(); ++i) {
    given.emplace_back(given_axes[i], given_values[i]);
  }
  const auto g_axes = detail::checked_axes(std::move(given_axes), f, "conditioning");
  const auto t_axes = detail::checked_axes(std::move(target_axes), f, "target");
  for (Index a : t_axes) {
    if (std::binary_search(g_axes.begin(), g_axes.end(), a)) {
      throw UsageError("axis " + std::to_string(a) + " is both target and conditioning");
    }
  }
  for (const auto& [axis, value] : given) {
    if (value < 1 || value > f.dim(axis)) {
      throw DomainError("conditioning value " + std::to_string(value) + " on axis " +
                        std::to_string(axis) + " outside 1.." +
                        std::to_string(f.dim(axis)));
    }
  }

  Vector<Scalar> out = Vector<Scalar>::Zero(detail::group_size(t_axes, f));
  std::vector<Index> digits(f.dims().size());
  for (Index y = 0; y < f.total(); ++y) {
    mixed_radix::digits(f, y, digits);
    bool match = true;
    for (const auto& [axis, value] : given) {
      if (digits[static_cast<std::size_t>(axis - 1)] != value - 1) {
        match = false;
        break;
      }
    }
    if (match) out(detail::group_offset(digits, t_axes, f)) += view.base()(y);
  }
  const Scalar event = out.sum();
  if (!(event > 0)) {
    throw ConditioningOnNull("conditioning event has zero probability");
  }
  return ProbabilityVector<Scalar>::normalized(std::move(out));
}

template <typename Scalar>
Scalar shannon_entropy(const ProbabilityVector<Scalar>& p) {
  Scalar s = 0;
  for (Index i = 0; i < p.size(); ++i) s -= detail::xlogx(p(i));
  return s;
}

template <typename Scalar>
Scalar tsallis_entropy(const ProbabilityVector<Scalar>& p, const TsallisParam& tq) {
  using std::pow;
  const Scalar q = static_cast<Scalar>(tq.q());
  Scalar sum = 0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0) sum += pow(p(i), q);
  }
  return (sum - 1) / (1 - q);
}

template <typename Scalar>
Divergence<Scalar> relative_entropy_shannon(const ProbabilityVector<Scalar>& p,
                                            const ProbabilityVector<Scalar>& r) {
  using std::log;
  if (p.size() != r.size()) {
    throw UsageError("relative entropy of distributions of different lengths");
  }
  Scalar d = 0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) == 0) continue;
    if (r(i) == 0) return Divergence<Scalar>::infinity();
    d += p(i) * log(p(i) / r(i));
  }
  return {d, false};
}

// (1/(q-1)) (sum p^q r^{1-q} - 1).
template <typename Scalar>
Divergence<Scalar> relative_entropy_tsallis(const ProbabilityVector<Scalar>& p,
                                            const ProbabilityVector<Scalar>& r,
                                            const TsallisParam& tq) {
  using std::pow;
  if (p.size() != r.size()) {
    throw UsageError("relative entropy of distributions of different lengths");
  }
  const Scalar q = static_cast<Scalar>(tq.q());
  Scalar sum = 0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) == 0) continue;
    if (r(i) == 0) {
      if (q > 1) return Divergence<Scalar>::infinity();
      continue;
    }
    sum += pow(p(i), q) * pow(r(i), 1 - q);
  }
  return {(sum - 1) / (q - 1), false};
}

template <typename Scalar>
SubadditivityReport<Scalar> subadditivity_report(const JointView<Scalar>& view,
                                                 const QuditSplit& split) {
  const Factorization& f = view.factorization();
  if (!(split.factorization() == f)) throw UsageError("split over a different factorization");
  SubadditivityReport<Scalar> r;
  r.entropy_left = shannon_entropy(marginal(view, detail::axis_range(1, split.s())));
  r.entropy_right = shannon_entropy(marginal(view, detail::axis_range(split.s() + 1, f.rank())));
  r.entropy_joint = shannon_entropy(view.base());
  r.mutual_info = r.entropy_left + r.entropy_right - r.entropy_joint;
  r.holds = r.mutual_info >= -Scalar(r.tolerance);
  return r;
}

// S(A,B) + S(B,C) >= S(A,B,C) + S(B) with A = axes 1..first_cut,
// B = first_cut+1..second_cut, C = the rest.
template <typename Scalar>
StrongSubadditivityReport<Scalar> classical_ssa_check(const JointView<Scalar>& view,
                                                      Index first_cut, Index second_cut) {
  const Factorization& f = view.factorization();
  if (f.rank() < 3) {
    throw UsageError("strong subadditivity needs at least 3 factors, got " +
                     std::to_string(f.rank()));
  }
  if (first_cut < 1 || second_cut <= first_cut || second_cut >= f.rank()) {
    throw UsageError("block cuts must satisfy 1 <= first < second < M");
  }
  const auto h = [&](Index lo, Index hi) {
    return shannon_entropy(marginal(view, detail::axis_range(lo, hi)));
  };
  StrongSubadditivityReport<Scalar> r;
  r.lhs = h(1, second_cut) + h(first_cut + 1, f.rank());
  r.rhs = shannon_entropy(view.base()) + h(first_cut + 1, second_cut);
  r.holds = r.lhs - r.rhs >= -Scalar(r.tolerance);
  return r;
}

}  // namespace hidcorr
