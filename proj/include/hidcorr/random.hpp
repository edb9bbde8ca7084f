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

// Seeded generators for property sweeps.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hidcorr/classical.hpp"
#include "hidcorr/partition_map.hpp"
#include "hidcorr/probability_representation.hpp"
#include "hidcorr/quantum_state.hpp"
#include "hidcorr/tomography.hpp"

namespace hidcorr::random {

// Uniform on the simplex (Dirichlet with all concentrations 1).
template <typename Scalar = double, typename Rng>
ProbabilityVector<Scalar> dirichlet_uniform(Rng& rng, Index n) {
  std::exponential_distribution<double> e(1.0);
  Vector<Scalar> w(n);
  for (Index i = 0; i < n; ++i) w(i) = Scalar(e(rng));
  return ProbabilityVector<Scalar>::normalized(std::move(w));
}

template <typename Scalar = double, typename Rng>
ComplexMatrix<Scalar> ginibre(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix<Scalar> m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) m(r, c) = Complex<Scalar>(Scalar(g(rng)), Scalar(g(rng)));
  }
  return m;
}

// G G^dagger / Tr, G an n x n Ginibre matrix (full rank almost surely).
template <typename Scalar = double, typename Rng>
DensityMatrix<Scalar> ginibre_state(Rng& rng, Index n) {
  const ComplexMatrix<Scalar> g = ginibre<Scalar>(rng, n, n);
  ComplexMatrix<Scalar> m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / Scalar(2);
  return validate<Scalar>(std::move(m));
}

template <typename Scalar = double, typename Rng>
Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1> haar_vector(Rng& rng, Index n) {
  Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1> psi = ginibre<Scalar>(rng, n, 1);
  psi.normalize();
  return psi;
}

template <typename Scalar = double, typename Rng>
DensityMatrix<Scalar> haar_pure_state(Rng& rng, Index n) {
  const auto psi = haar_vector<Scalar>(rng, n);
  return validate<Scalar>(psi * psi.adjoint());
}

// Uniform in the Bloch ball.
template <typename Scalar = double, typename Rng>
QubitProbabilities<Scalar> bloch_ball_uniform(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double x, y, z;
  do {
    x = u(rng);
    y = u(rng);
    z = u(rng);
  } while (x * x + y * y + z * z > 1.0);
  return {Scalar((1 + x) / 2), Scalar((1 + y) / 2), Scalar((1 + z) / 2)};
}

template <typename Rng>
Direction random_direction(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1 - 2 * u(rng)), 2 * std::numbers::pi * u(rng),
          2 * std::numbers::pi * u(rng)};
}

// A uniformly chosen ordered factorization of n into factors >= 2 (n >= 2),
// by recursive choice of the first factor weighted by the number of
// completions.
template <typename Rng>
Factorization random_ordered_factorization(Rng& rng, Index n) {
  std::vector<double> count(static_cast<std::size_t>(n + 1), 0.0);
  count[1] = 1;
  for (Index m = 2; m <= n; ++m) {
    for (Index d = 2; d <= m; ++d) {
      if (m % d == 0) count[static_cast<std::size_t>(m)] += count[static_cast<std::size_t>(m / d)];
    }
  }
  std::vector<Index> dims;
  Index rest = n;
  while (rest > 1) {
    std::vector<Index> divisors;
    std::vector<double> weights;
    for (Index d = 2; d <= rest; ++d) {
      if (rest % d == 0) {
        divisors.push_back(d);
        weights.push_back(count[static_cast<std::size_t>(rest / d)]);
      }
    }
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const Index d = divisors[pick(rng)];
    dims.push_back(d);
    rest /= d;
  }
  return Factorization(std::move(dims));
}

// Uniform over the ordered factorizations with at least two factors;
// n must be composite.
template <typename Rng>
Factorization random_split_factorization(Rng& rng, Index n) {
  bool composite = false;
  for (Index d = 2; d * d <= n; ++d) composite = composite || n % d == 0;
  if (!composite) throw UsageError(std::to_string(n) + " has no nontrivial factorization");
  for (;;) {
    Factorization f = random_ordered_factorization(rng, n);
    if (f.rank() >= 2) return f;
  }
}

}  // namespace hidcorr::random
