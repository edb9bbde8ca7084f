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

// Density matrices of a single qudit reinterpreted through a Factorization:
// partial traces over the leading/trailing block of axes, von Neumann
// entropy, mutual information, linear entropy, the partial-transpose
// separability test and the two-qubit CHSH maximum.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "hidcorr/classical.hpp"
#include "hidcorr/errors.hpp"
#include "hidcorr/partition_map.hpp"
#include "hidcorr/tolerances.hpp"

namespace hidcorr {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Vector<Scalar> hermitian_eigenvalues(const ComplexMatrix<Scalar>& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <typename Scalar = double>
class DensityMatrix {
 public:
  // Checks Hermiticity, unit trace and positivity; caches the spectrum.
  static DensityMatrix validate(ComplexMatrix<Scalar> m) {
    using std::abs;
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw UsageError("density matrix must be square and nonempty, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const Scalar asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= Scalar(tol::kHermitian))) {
      throw InvalidDensityMatrix(StateViolation::NotHermitian, static_cast<double>(asym),
                                 tol::kHermitian);
    }
    const Scalar trace_err = abs(m.trace() - Complex<Scalar>(1));
    if (!(trace_err <= Scalar(tol::kTrace))) {
      throw InvalidDensityMatrix(StateViolation::TraceNotOne,
                                 static_cast<double>(trace_err), tol::kTrace);
    }
    Vector<Scalar> eig = hermitian_eigenvalues<Scalar>(m);
    if (eig(0) < -Scalar(tol::kEigenvalue)) {
      throw InvalidDensityMatrix(StateViolation::NotPSD, static_cast<double>(-eig(0)),
                                 tol::kEigenvalue);
    }
    return DensityMatrix(std::move(m), std::move(eig));
  }

  const ComplexMatrix<Scalar>& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  Complex<Scalar> operator()(Index i, Index j) const { return m_(i, j); }

  // Ascending, as computed.
  const Vector<Scalar>& eigenvalues() const noexcept { return eig_; }

  // Eigenvalues with the tolerated negative noise set to zero.
  Vector<Scalar> spectrum() const { return eig_.cwiseMax(Scalar(0)); }

 private:
  DensityMatrix(ComplexMatrix<Scalar> m, Vector<Scalar> eig)
      : m_(std::move(m)), eig_(std::move(eig)) {}

  ComplexMatrix<Scalar> m_;
  Vector<Scalar> eig_;
};

template <typename Scalar>
DensityMatrix<Scalar> validate(ComplexMatrix<Scalar> m) {
  return DensityMatrix<Scalar>::validate(std::move(m));
}

// R_{x..., x'...} = rho_{y(x...), y(x'...)}: the same numbers, read as a
// multi-qudit state.
template <typename Scalar = double>
class ReshapedState {
 public:
  ReshapedState(DensityMatrix<Scalar> base, Factorization f)
      : base_(std::move(base)), f_(std::move(f)) {
    if (base_.dim() != f_.total()) {
      throw UsageError("dimension mismatch: density matrix is " +
                       std::to_string(base_.dim()) + "-dimensional, factorization " +
                       to_string(f_) + " has N = " + std::to_string(f_.total()));
    }
  }

  const DensityMatrix<Scalar>& base() const noexcept { return base_; }
  const Factorization& factorization() const noexcept { return f_; }

  Complex<Scalar> operator()(const MultiIndex& row, const MultiIndex& col) const {
    return base_(compose(row) - 1, compose(col) - 1);
  }

  QuditSplit split(Index s) const { return QuditSplit(f_, s); }

 private:
  DensityMatrix<Scalar> base_;
  Factorization f_;
};

enum class Separability { Separable, Entangled, Inconclusive };

inline const char* to_string(Separability s) {
  switch (s) {
    case Separability::Separable:
      return "separable";
    case Separability::Entangled:
      return "entangled";
    case Separability::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

template <typename Scalar>
struct SeparabilityVerdict {
  Separability status = Separability::Inconclusive;
  Scalar witness_value = 0;  // smallest eigenvalue of the partial transpose
};

namespace detail {

template <typename Scalar>
void check_split(const ReshapedState<Scalar>& rs, const QuditSplit& split) {
  if (!(split.factorization() == rs.factorization())) {
    throw UsageError("split over a different factorization");
  }
}

}  // namespace detail

// rho(1)_{a,a'} = sum_b rho_{y(a,b), y(a',b)}: state of axes 1..s.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace_right(const ReshapedState<Scalar>& rs,
                                          const QuditSplit& split) {
  detail::check_split(rs, split);
  const Index l = split.dim_left();
  const Index r = split.dim_right();
  const auto& m = rs.base().matrix();
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(l, l);
  for (Index b = 0; b < r; ++b) out += m.block(b * l, b * l, l, l);
  return validate<Scalar>(std::move(out));
}

// rho(2)_{b,b'} = sum_a rho_{y(a,b), y(a,b')}: state of axes s+1..M.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace_left(const ReshapedState<Scalar>& rs,
                                         const QuditSplit& split) {
  detail::check_split(rs, split);
  const Index l = split.dim_left();
  const Index r = split.dim_right();
  const auto& m = rs.base().matrix();
  ComplexMatrix<Scalar> out(r, r);
  for (Index b = 0; b < r; ++b) {
    for (Index bp = 0; bp < r; ++bp) out(b, bp) = m.block(b * l, bp * l, l, l).trace();
  }
  return validate<Scalar>(std::move(out));
}

template <typename Scalar>
Scalar von_neumann_entropy(const DensityMatrix<Scalar>& d) {
  const Vector<Scalar> lambda = d.spectrum();
  Scalar s = 0;
  for (Index i = 0; i < lambda.size(); ++i) s -= detail::xlogx(lambda(i));
  return s;
}

// S(rho(1)) + S(rho(2)) - S(rho); nonnegative by quantum subadditivity.
template <typename Scalar>
Scalar mutual_quantum_information(const ReshapedState<Scalar>& rs, const QuditSplit& split) {
  return von_neumann_entropy(partial_trace_right(rs, split)) +
         von_neumann_entropy(partial_trace_left(rs, split)) - von_neumann_entropy(rs.base());
}

// 1 - Tr(rho(2)^2).
template <typename Scalar>
Scalar linear_entropy(const ReshapedState<Scalar>& rs, const QuditSplit& split) {
  const auto reduced = partial_trace_left(rs, split);
  return Scalar(1) - reduced.matrix().cwiseAbs2().sum();
}

// Transpose of the trailing block: (a,b),(a',b') -> (a,b'),(a',b).
template <typename Scalar>
ComplexMatrix<Scalar> partial_transpose(const ReshapedState<Scalar>& rs,
                                        const QuditSplit& split) {
  detail::check_split(rs, split);
  const Index l = split.dim_left();
  const Index r = split.dim_right();
  const auto& m = rs.base().matrix();
  ComplexMatrix<Scalar> out(m.rows(), m.cols());
  for (Index b = 0; b < r; ++b) {
    for (Index bp = 0; bp < r; ++bp) out.block(b * l, bp * l, l, l) = m.block(bp * l, b * l, l, l);
  }
  return out;
}

// Peres-Horodecki test. A negative partial-transpose eigenvalue certifies
// entanglement; a nonnegative spectrum certifies separability only for
// 2x2, 2x3 and 3x2 splits (and trivially when one block is 1-dimensional).
template <typename Scalar>
SeparabilityVerdict<Scalar> separability_test(const ReshapedState<Scalar>& rs,
                                              const QuditSplit& split) {
  const Vector<Scalar> eig = hermitian_eigenvalues<Scalar>(partial_transpose(rs, split));
  SeparabilityVerdict<Scalar> v;
  v.witness_value = eig(0);
  const Index l = split.dim_left();
  const Index r = split.dim_right();
  if (v.witness_value < -Scalar(tol::kEigenvalue)) {
    v.status = Separability::Entangled;
  } else if (l == 1 || r == 1 || l * r <= 6) {
    v.status = Separability::Separable;
  } else {
    v.status = Separability::Inconclusive;
  }
  return v;
}

// I, sigma_x, sigma_y, sigma_z.
template <typename Scalar>
std::array<ComplexMatrix<Scalar>, 4> pauli_matrices() {
  using C = Complex<Scalar>;
  std::array<ComplexMatrix<Scalar>, 4> s;
  for (auto& m : s) m = ComplexMatrix<Scalar>::Zero(2, 2);
  s[0](0, 0) = s[0](1, 1) = C(1);
  s[1](0, 1) = s[1](1, 0) = C(1);
  s[2](0, 1) = C(0, -1);
  s[2](1, 0) = C(0, 1);
  s[3](0, 0) = C(1);
  s[3](1, 1) = C(-1);
  return s;
}

// Matrix with entries A_{a,a'} B_{b,b'} at (y(a,b), y(a',b')), i.e. A on
// the leading block and B on the trailing block of a two-block split.
template <typename Scalar>
ComplexMatrix<Scalar> block_product(const ComplexMatrix<Scalar>& left,
                                    const ComplexMatrix<Scalar>& right) {
  const Index l = left.rows();
  const Index r = right.rows();
  ComplexMatrix<Scalar> out(l * r, l * r);
  for (Index b = 0; b < r; ++b) {
    for (Index bp = 0; bp < r; ++bp) out.block(b * l, bp * l, l, l) = right(b, bp) * left;
  }
  return out;
}

template <typename Scalar>
DensityMatrix<Scalar> product_state(const DensityMatrix<Scalar>& left,
                                    const DensityMatrix<Scalar>& right) {
  return validate<Scalar>(block_product<Scalar>(left.matrix(), right.matrix()));
}

// T_{ij} = Tr(rho sigma_i (x) sigma_j), sigma_i acting on the leading qubit.
template <typename Scalar>
RealMatrix<Scalar> correlation_matrix(const ReshapedState<Scalar>& rs, const QuditSplit& split) {
  detail::check_split(rs, split);
  if (split.dim_left() != 2 || split.dim_right() != 2) {
    throw UsageError("CHSH needs two 2-dimensional blocks, got " +
                     std::to_string(split.dim_left()) + "x" +
                     std::to_string(split.dim_right()));
  }
  const auto sigma = pauli_matrices<Scalar>();
  RealMatrix<Scalar> t(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ComplexMatrix<Scalar> op = block_product<Scalar>(sigma[i + 1], sigma[j + 1]);
      t(i, j) = (rs.base().matrix() * op).trace().real();
    }
  }
  return t;
}

// Maximal CHSH value 2 sqrt(u1 + u2), u1 >= u2 the two largest eigenvalues
// of T^T T. Values above 2 violate the Bell inequality.
template <typename Scalar>
Scalar chsh_max(const ReshapedState<Scalar>& rs, const QuditSplit& split) {
  using std::sqrt;
  const RealMatrix<Scalar> t = correlation_matrix(rs, split);
  Eigen::SelfAdjointEigenSolver<RealMatrix<Scalar>> solver(t.transpose() * t,
                                                           Eigen::EigenvaluesOnly);
  const Vector<Scalar>& u = solver.eigenvalues();
  return 2 * sqrt(std::max(Scalar(0), u(2) + u(1)));
}

}  // namespace hidcorr
