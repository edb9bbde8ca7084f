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

// Spin tomograms w(m|n) = <m| u rho u^dagger |m> for arbitrary spin j and
// the entropic diagnostics of a tomogram read through a two-factor
// partition of its outcome index.

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "hidcorr/classical.hpp"
#include "hidcorr/errors.hpp"
#include "hidcorr/partition_map.hpp"
#include "hidcorr/quantum_state.hpp"
#include "hidcorr/tolerances.hpp"

namespace hidcorr {

// n = (cos phi sin theta, sin phi sin theta, cos theta). psi is the third
// Euler angle; tomograms do not depend on it.
struct Direction {
  double theta = 0;
  double phi = 0;
  double psi = 0;
};

// Angular momentum matrices in the |m> basis ordered m = j, j-1, ..., -j.
template <typename Scalar = double>
class SpinRep {
 public:
  // twice_j = 2j, so 1 is spin 1/2.
  explicit SpinRep(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 1) throw UsageError("spin must be at least 1/2");
    using C = Complex<Scalar>;
    const Index n = twice_j + 1;
    const Scalar j = Scalar(twice_j) / 2;
    jz_ = ComplexMatrix<Scalar>::Zero(n, n);
    ComplexMatrix<Scalar> raise = ComplexMatrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      const Scalar m = j - Scalar(i);
      jz_(i, i) = m;
      if (i > 0) raise(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    jx_ = (raise + raise.adjoint()) / Scalar(2);
    jy_ = (raise - raise.adjoint()) * C(0, Scalar(-0.5));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(jy_);
    jy_vectors_ = solver.eigenvectors();
    jy_values_ = solver.eigenvalues();
  }

  int twice_j() const noexcept { return twice_j_; }
  Index dim() const noexcept { return twice_j_ + 1; }
  Scalar j() const noexcept { return Scalar(twice_j_) / 2; }
  // m value at storage index i.
  Scalar m(Index i) const noexcept { return j() - Scalar(i); }

  const ComplexMatrix<Scalar>& jx() const noexcept { return jx_; }
  const ComplexMatrix<Scalar>& jy() const noexcept { return jy_; }
  const ComplexMatrix<Scalar>& jz() const noexcept { return jz_; }

  // exp(i angle Jy) through the cached spectral decomposition.
  ComplexMatrix<Scalar> exp_jy(Scalar angle) const {
    using C = Complex<Scalar>;
    Eigen::Matrix<C, Eigen::Dynamic, 1> phases(dim());
    for (Index k = 0; k < dim(); ++k) phases(k) = std::polar(Scalar(1), angle * jy_values_(k));
    return jy_vectors_ * phases.asDiagonal() * jy_vectors_.adjoint();
  }

 private:
  int twice_j_;
  ComplexMatrix<Scalar> jx_, jy_, jz_;
  ComplexMatrix<Scalar> jy_vectors_;
  Vector<Scalar> jy_values_;
};

// u = exp(i psi Jz) exp(i theta Jy) exp(i phi Jz). For j = 1/2 this is
//   [ cos(t/2) e^{ i(psi+phi)/2}   sin(t/2) e^{ i(psi-phi)/2} ]
//   [-sin(t/2) e^{-i(psi-phi)/2}   cos(t/2) e^{-i(psi+phi)/2} ].
template <typename Scalar>
ComplexMatrix<Scalar> rotation_matrix(const SpinRep<Scalar>& rep, const Direction& dir) {
  const Index n = rep.dim();
  ComplexMatrix<Scalar> u = rep.exp_jy(Scalar(dir.theta));
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      u(r, c) *= std::polar(Scalar(1), Scalar(dir.psi) * rep.m(r) + Scalar(dir.phi) * rep.m(c));
    }
  }
  return u;
}

// Tomogram values indexed by y = 1..2j+1 with y = 1 for m = -j, so the
// order is the reverse of the SpinRep storage order.
template <typename Scalar = double>
struct TomogramTable {
  Direction direction;
  Vector<Scalar> values;

  // Clamped and renormalized for entropy evaluation.
  ProbabilityVector<Scalar> distribution() const {
    Vector<Scalar> w = values;
    for (Index i = 0; i < w.size(); ++i) {
      if (w(i) < -Scalar(tol::kEigenvalue)) {
        throw DomainError("tomogram value " + std::to_string(static_cast<double>(w(i))) +
                          " is negative");
      }
      if (w(i) < 0) w(i) = 0;
    }
    return ProbabilityVector<Scalar>::normalized(std::move(w));
  }
};

template <typename Scalar>
TomogramTable<Scalar> tomogram(const DensityMatrix<Scalar>& d, const SpinRep<Scalar>& rep,
                               const Direction& dir) {
  if (d.dim() != rep.dim()) {
    throw UsageError("dimension mismatch: density matrix is " + std::to_string(d.dim()) +
                     "-dimensional, spin representation has 2j+1 = " +
                     std::to_string(rep.dim()));
  }
  const ComplexMatrix<Scalar> u = rotation_matrix(rep, dir);
  const Index n = rep.dim();
  TomogramTable<Scalar> t{dir, Vector<Scalar>(n)};
  for (Index i = 0; i < n; ++i) {
    // <m_i| u rho u^dagger |m_i>
    t.values(n - 1 - i) = (u.row(i) * d.matrix() * u.row(i).adjoint()).value().real();
  }
  return t;
}

namespace detail {

template <typename Scalar>
JointView<Scalar> tomogram_view(const TomogramTable<Scalar>& t, const Factorization& f) {
  if (f.rank() != 2) {
    throw UsageError("tomographic analysis needs a two-factor partition, got " + to_string(f));
  }
  if (f.total() != t.values.size()) {
    throw UsageError("dimension mismatch: tomogram has " + std::to_string(t.values.size()) +
                     " outcomes, factorization " + to_string(f) + " has N = " +
                     std::to_string(f.total()));
  }
  return JointView<Scalar>(t.distribution(), f);
}

}  // namespace detail

template <typename Scalar>
std::pair<ProbabilityVector<Scalar>, ProbabilityVector<Scalar>> tomographic_marginals(
    const TomogramTable<Scalar>& t, const Factorization& f) {
  const auto view = detail::tomogram_view(t, f);
  return {marginal(view, {1}), marginal(view, {2})};
}

template <typename Scalar>
struct TomographicTsallisReport {
  Scalar tsallis_first = 0;   // S_q of the x_1 marginal
  Scalar tsallis_second = 0;  // S_q of the x_2 marginal
  Scalar tsallis_joint = 0;   // S_q of the whole tomogram
  bool subadditivity_holds = true;
  double tolerance = tol::kInequality;
};

// S_q^(1) + S_q^(2) >= S_q. Guaranteed for q > 1; for q < 1 the verdict can
// legitimately be false (e.g. product tomograms).
template <typename Scalar>
TomographicTsallisReport<Scalar> tomographic_tsallis_report(const TomogramTable<Scalar>& t,
                                                            const Factorization& f,
                                                            const TsallisParam& tq) {
  const auto view = detail::tomogram_view(t, f);
  TomographicTsallisReport<Scalar> r;
  r.tsallis_first = tsallis_entropy(marginal(view, {1}), tq);
  r.tsallis_second = tsallis_entropy(marginal(view, {2}), tq);
  r.tsallis_joint = tsallis_entropy(view.base(), tq);
  r.subadditivity_holds =
      r.tsallis_first + r.tsallis_second - r.tsallis_joint >= -Scalar(r.tolerance);
  return r;
}

// Tsallis relative entropy between two tomographic marginals of equal size,
// possibly taken along different directions.
template <typename Scalar>
Divergence<Scalar> tomographic_tsallis_relative(const ProbabilityVector<Scalar>& first,
                                                const ProbabilityVector<Scalar>& second,
                                                const TsallisParam& tq) {
  if (first.size() != second.size()) {
    throw UsageError("tomographic relative entropy requires X1 = X2, got " +
                     std::to_string(first.size()) + " and " + std::to_string(second.size()));
  }
  if (tq.q() <= 1) {
    throw UsageError("tomographic relative entropy requires q > 1, got " +
                     std::to_string(tq.q()));
  }
  return relative_entropy_tsallis(first, second, tq);
}

// I(n) = S_1 + S_2 - S of the tomogram viewed through f.
template <typename Scalar>
Scalar mutual_tomographic_information(const TomogramTable<Scalar>& t, const Factorization& f) {
  const auto view = detail::tomogram_view(t, f);
  return subadditivity_report(view, QuditSplit(f, 1)).mutual_info;
}

template <typename Scalar>
struct SweepRecord {
  TomogramTable<Scalar> tomogram;
  Scalar mutual_info = 0;
  bool mutual_info_holds = true;
  std::vector<std::pair<double, TomographicTsallisReport<Scalar>>> tsallis;  // (q, report)
};

// One record per grid direction, in grid order.
template <typename Scalar>
std::vector<SweepRecord<Scalar>> direction_sweep(const DensityMatrix<Scalar>& d,
                                                 const SpinRep<Scalar>& rep,
                                                 const Factorization& f,
                                                 const std::vector<Direction>& grid,
                                                 const std::vector<TsallisParam>& qs = {}) {
  if (grid.empty()) throw UsageError("direction grid is empty");
  std::vector<SweepRecord<Scalar>> out;
  out.reserve(grid.size());
  for (const Direction& dir : grid) {
    SweepRecord<Scalar> rec;
    rec.tomogram = tomogram(d, rep, dir);
    rec.mutual_info = mutual_tomographic_information(rec.tomogram, f);
    rec.mutual_info_holds = rec.mutual_info >= -Scalar(tol::kInequality);
    for (const auto& tq : qs) {
      rec.tsallis.emplace_back(tq.q(), tomographic_tsallis_report(rec.tomogram, f, tq));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace hidcorr
