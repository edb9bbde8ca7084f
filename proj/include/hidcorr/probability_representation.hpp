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

// Qubit density matrices parametrized by the spin-up probabilities along
// x, y and z, and entropic inequalities on qubit/qutrit matrix elements
// that follow from nonnegativity of relative Shannon and Tsallis entropy.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "hidcorr/classical.hpp"
#include "hidcorr/errors.hpp"
#include "hidcorr/quantum_state.hpp"
#include "hidcorr/tolerances.hpp"

namespace hidcorr {

// Probabilities of projection m = +1/2 along x, y and z.
template <typename Scalar = double>
struct QubitProbabilities {
  Scalar p1 = 0.5;
  Scalar p2 = 0.5;
  Scalar p3 = 0.5;

  // Bloch radius (2p1-1, 2p2-1, 2p3-1).
  Scalar bloch_radius() const {
    using std::sqrt;
    const Scalar x = 2 * p1 - 1, y = 2 * p2 - 1, z = 2 * p3 - 1;
    return sqrt(x * x + y * y + z * z);
  }
};

template <typename Scalar>
struct InequalityCheck {
  Scalar value = 0;
  bool infinite = false;
  bool holds = true;
  double tolerance = tol::kInequality;
};

// Which reading of a printed inequality to evaluate.
enum class InequalityForm {
  // Relative entropy between the two distributions the matrix elements
  // encode. Always nonnegative.
  RelativeEntropy,
  // The expression exactly as printed, kept for comparison.
  Printed,
};

namespace detail {

template <typename Scalar>
InequalityCheck<Scalar> to_check(const Divergence<Scalar>& d) {
  InequalityCheck<Scalar> c;
  c.value = d.value;
  c.infinite = d.infinite;
  c.holds = d.infinite || d.value >= -Scalar(c.tolerance);
  return c;
}

template <typename Scalar>
void check_dim(const DensityMatrix<Scalar>& d, Index n, const char* what) {
  if (d.dim() != n) {
    throw UsageError(std::string(what) + " needs a " + std::to_string(n) + "x" +
                     std::to_string(n) + " density matrix, got dimension " +
                     std::to_string(d.dim()));
  }
}

// Two-outcome distribution built from matrix elements of a validated state;
// noise at the density-matrix tolerance is absorbed by clamping and
// renormalizing.
template <typename Scalar>
ProbabilityVector<Scalar> binary_pair(Scalar a, Scalar b) {
  for (Scalar v : {a, b}) {
    if (v < -Scalar(tol::kEigenvalue)) {
      throw DomainError("matrix-element probability " +
                        std::to_string(static_cast<double>(v)) + " is negative");
    }
  }
  Vector<Scalar> v(2);
  v << std::max(a, Scalar(0)), std::max(b, Scalar(0));
  return ProbabilityVector<Scalar>::normalized(std::move(v));
}

// a ln(a / b) with 0 ln(.) = 0; infinite when a > 0 = b.
template <typename Scalar>
Divergence<Scalar> log_term(Scalar coeff, Scalar num, Scalar den) {
  using std::log;
  if (coeff == 0) return {0, false};
  if (den <= 0 || num <= 0) return Divergence<Scalar>::infinity();
  return {coeff * log(num / den), false};
}

}  // namespace detail

// rho_{1/2,1/2} = p3, rho_{1/2,-1/2} = p1 - i p2 - (1 - i)/2. Index 0 is
// m = +1/2.
template <typename Scalar>
DensityMatrix<Scalar> qubit_from_probabilities(const QubitProbabilities<Scalar>& qp) {
  for (Scalar p : {qp.p1, qp.p2, qp.p3}) {
    if (!(p >= 0 && p <= 1)) {
      throw DomainError("qubit probability " + std::to_string(static_cast<double>(p)) +
                        " outside [0, 1]");
    }
  }
  const Scalar radius = qp.bloch_radius();
  if (radius > Scalar(1 + tol::kInequality)) {
    throw InvalidDensityMatrix(StateViolation::NotPSD, static_cast<double>(radius),
                               1 + tol::kInequality);
  }
  using C = Complex<Scalar>;
  ComplexMatrix<Scalar> m(2, 2);
  const C off = C(qp.p1, -qp.p2) - C(Scalar(0.5), Scalar(-0.5));
  m(0, 0) = qp.p3;
  m(0, 1) = off;
  m(1, 0) = std::conj(off);
  m(1, 1) = 1 - qp.p3;
  return validate<Scalar>(std::move(m));
}

template <typename Scalar>
QubitProbabilities<Scalar> probabilities_from_qubit(const DensityMatrix<Scalar>& d) {
  detail::check_dim(d, 2, "probabilities_from_qubit");
  const Complex<Scalar> off = d(0, 1);
  return {off.real() + Scalar(0.5), -off.imag() + Scalar(0.5), d(0, 0).real()};
}

// D((1/2 + Re rho12, 1/2 - Re rho12) || (rho11, rho22)).
template <typename Scalar>
InequalityCheck<Scalar> qubit_inequality_zx(const DensityMatrix<Scalar>& d) {
  detail::check_dim(d, 2, "qubit_inequality_zx");
  const Scalar re = d(0, 1).real();
  return detail::to_check(relative_entropy_shannon(
      detail::binary_pair(Scalar(0.5) + re, Scalar(0.5) - re),
      detail::binary_pair(d(0, 0).real(), d(1, 1).real())));
}

// Compares the x distribution (p1, 1-p1) with the y distribution. The
// canonical reading uses (p2, 1-p2) = (1/2 - Im rho12, 1/2 + Im rho12); the
// printed form compares against (1/2 + Im rho12, 1/2 - Im rho12).
template <typename Scalar>
InequalityCheck<Scalar> qubit_inequality_xy(const DensityMatrix<Scalar>& d,
                                            InequalityForm form = InequalityForm::RelativeEntropy) {
  detail::check_dim(d, 2, "qubit_inequality_xy");
  const Scalar re = d(0, 1).real();
  const Scalar im = form == InequalityForm::RelativeEntropy ? -d(0, 1).imag() : d(0, 1).imag();
  return detail::to_check(
      relative_entropy_shannon(detail::binary_pair(Scalar(0.5) + re, Scalar(0.5) - re),
                               detail::binary_pair(Scalar(0.5) + im, Scalar(0.5) - im)));
}

// D((rho11 + rho22, rho33) || (1/2 + Re rho13, 1/2 - Re rho13)). The printed
// form has (rho33 + rho22) inside the second logarithm.
template <typename Scalar>
InequalityCheck<Scalar> qutrit_inequality_shannon(
    const DensityMatrix<Scalar>& d, InequalityForm form = InequalityForm::RelativeEntropy) {
  detail::check_dim(d, 3, "qutrit_inequality_shannon");
  const Scalar top = d(0, 0).real() + d(1, 1).real();
  const Scalar r33 = d(2, 2).real();
  const Scalar re13 = d(0, 2).real();
  // |rho13| <= sqrt(rho11 rho33) <= 1/2 for any valid state.
  if (std::abs(re13) > Scalar(0.5 + tol::kEigenvalue)) {
    throw DomainError("|Re rho13| exceeds 1/2");
  }
  if (form == InequalityForm::RelativeEntropy) {
    return detail::to_check(
        relative_entropy_shannon(detail::binary_pair(top, r33),
                                 detail::binary_pair(Scalar(0.5) + re13, Scalar(0.5) - re13)));
  }
  const auto first = detail::log_term(top, top, Scalar(0.5) + re13);
  const auto second = detail::log_term(r33, r33 + d(1, 1).real(), Scalar(0.5) - re13);
  if (first.infinite || second.infinite) return detail::to_check(Divergence<Scalar>::infinity());
  return detail::to_check(Divergence<Scalar>{first.value + second.value, false});
}

// (1/(q-1)) [(rho11+rho22)^q (1/2+Re rho13)^{1-q} + rho33^q (1/2-Re rho13)^{1-q} - 1].
template <typename Scalar>
InequalityCheck<Scalar> qutrit_inequality_tsallis(const DensityMatrix<Scalar>& d,
                                                  const TsallisParam& tq) {
  detail::check_dim(d, 3, "qutrit_inequality_tsallis");
  if (tq.q() <= 1) {
    throw UsageError("qutrit Tsallis inequality needs q > 1, got " + std::to_string(tq.q()));
  }
  const Scalar re13 = d(0, 2).real();
  if (std::abs(re13) > Scalar(0.5 + tol::kEigenvalue)) {
    throw DomainError("|Re rho13| exceeds 1/2");
  }
  return detail::to_check(relative_entropy_tsallis(
      detail::binary_pair(d(0, 0).real() + d(1, 1).real(), d(2, 2).real()),
      detail::binary_pair(Scalar(0.5) + re13, Scalar(0.5) - re13), tq));
}

// The nine probabilities p_j^{(k)}: spin-up probability along axis j
// (x, y, z) for artificial qubit k. Stored as p[k-1][j-1].
template <typename Scalar = double>
struct QutritElements {
  std::array<std::array<Scalar, 3>, 3> p{};

  Scalar& operator()(int j, int k) { return p[k - 1][j - 1]; }
  Scalar operator()(int j, int k) const { return p[k - 1][j - 1]; }
};

// Only the elements expressible from the nine probabilities in closed form;
// rho13, rho23 and the rest are not determined here.
template <typename Scalar>
struct QutritPartialElements {
  Scalar rho11 = 0;
  Scalar rho22 = 0;
  Scalar rho33 = 0;
  Complex<Scalar> rho21{};
};

template <typename Scalar>
QutritPartialElements<Scalar> qutrit_elements_from_probabilities(
    const QutritElements<Scalar>& qe) {
  for (const auto& row : qe.p) {
    for (Scalar v : row) {
      if (!(v >= 0 && v <= 1)) {
        throw DomainError("qutrit probability " + std::to_string(static_cast<double>(v)) +
                          " outside [0, 1]");
      }
    }
  }
  QutritPartialElements<Scalar> e;
  e.rho11 = qe(3, 2) + qe(3, 1) - 1;
  e.rho22 = 1 - qe(3, 2);
  e.rho33 = 1 - e.rho11 - e.rho22;
  e.rho21 = Complex<Scalar>(qe(1, 2), qe(2, 2)) - Complex<Scalar>(Scalar(0.5), Scalar(0.5));
  for (Scalar v : {e.rho11, e.rho22, e.rho33}) {
    if (v < 0 || v > 1) {
      throw DomainError("reconstructed diagonal element " +
                        std::to_string(static_cast<double>(v)) + " outside [0, 1]");
    }
  }
  return e;
}

}  // namespace hidcorr
