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
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hidcorr/random.hpp"
#include "hidcorr/tomography.hpp"

namespace hidcorr {
namespace {

using CM = ComplexMatrix<double>;
using C = std::complex<double>;
using PV = ProbabilityVector<double>;
constexpr double kPi = std::numbers::pi;

// Closed-form spin-1/2 rotation in the m = +1/2, -1/2 basis.
CM spin_half_closed_form(double theta, double phi, double psi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CM u(2, 2);
  u << c * std::polar(1.0, (psi + phi) / 2), s * std::polar(1.0, (psi - phi) / 2),
      -s * std::polar(1.0, -(psi - phi) / 2), c * std::polar(1.0, -(psi + phi) / 2);
  return u;
}

// Wigner small-d matrix for j = 1, rows and columns m = 1, 0, -1.
Eigen::Matrix3d wigner_d1(double beta) {
  const double c = std::cos(beta), s = std::sin(beta), r = std::numbers::sqrt2;
  Eigen::Matrix3d d;
  d << (1 + c) / 2, -s / r, (1 - c) / 2,  //
      s / r, c, -s / r,                  //
      (1 - c) / 2, s / r, (1 + c) / 2;
  return d;
}

TomogramTable<double> table(std::vector<double> w) {
  TomogramTable<double> t;
  t.values = Eigen::Map<const Vector<double>>(w.data(), static_cast<Index>(w.size()));
  return t;
}

TEST(SpinRep, AngularMomentumAlgebra) {
  for (int twice_j = 1; twice_j <= 9; ++twice_j) {
    const SpinRep<double> rep(twice_j);
    ASSERT_EQ(rep.dim(), twice_j + 1);
    const CM comm = rep.jx() * rep.jy() - rep.jy() * rep.jx();
    EXPECT_LE((comm - C(0, 1) * rep.jz()).cwiseAbs().maxCoeff(), 1e-10);
    for (Index i = 0; i < rep.dim(); ++i) EXPECT_EQ(rep.jz()(i, i).real(), rep.j() - double(i));
    const CM casimir = rep.jx() * rep.jx() + rep.jy() * rep.jy() + rep.jz() * rep.jz();
    const double jj = rep.j() * (rep.j() + 1);
    EXPECT_LE((casimir - jj * CM::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(SpinRep<double>(0), UsageError);
}

TEST(RotationMatrix, Examples) {
  const SpinRep<double> half(1);
  EXPECT_LE((rotation_matrix(half, {0, 0, 0}) - CM::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  CM quarter(2, 2);
  const double h = std::cos(kPi / 4);
  quarter << h, h, -h, h;
  EXPECT_LE((rotation_matrix(half, {kPi / 2, 0, 0}) - quarter).cwiseAbs().maxCoeff(), 1e-15);

  // j = 1 at theta = pi exchanges m and -m.
  const CM flip = rotation_matrix(SpinRep<double>(2), {kPi, 0, 0});
  for (Index r = 0; r < 3; ++r) {
    for (Index c = 0; c < 3; ++c) {
      EXPECT_NEAR(std::abs(flip(r, c)), r + c == 2 ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(RotationMatrix, SpinHalfMatchesClosedFormOnGrid) {
  const SpinRep<double> half(1);
  double worst = 0;
  for (int a = 0; a < 20; ++a) {
    for (int b = 0; b < 20; ++b) {
      for (int c = 0; c < 5; ++c) {
        const double theta = kPi * a / 19, phi = 2 * kPi * b / 20, psi = 2 * kPi * c / 5;
        const CM diff = rotation_matrix(half, {theta, phi, psi}) -
                        spin_half_closed_form(theta, phi, psi);
        worst = std::max(worst, diff.cwiseAbs().maxCoeff());
      }
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(RotationMatrix, SpinOneMatchesWignerD) {
  const SpinRep<double> one(2);
  for (int k = 0; k <= 32; ++k) {
    const double beta = kPi * k / 32;
    // exp(i beta Jy) is the transpose of d(beta) = exp(-i beta Jy).
    const CM u = rotation_matrix(one, {beta, 0, 0});
    EXPECT_LE((u - wigner_d1(beta).transpose().cast<C>()).cwiseAbs().maxCoeff(), 1e-12) << beta;
  }
}

TEST(RotationMatrix, UnitaryForAllSpins) {
  std::mt19937_64 rng(31);
  for (int twice_j = 1; twice_j <= 9; ++twice_j) {
    const SpinRep<double> rep(twice_j);
    for (int i = 0; i < 50; ++i) {
      const CM u = rotation_matrix(rep, random::random_direction(rng));
      ASSERT_LE((u * u.adjoint() - CM::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff(),
                1e-10);
    }
  }
}

TEST(Tomogram, Examples) {
  const SpinRep<double> half(1);
  const auto up = validate<double>(Eigen::Vector2cd(1, 0).asDiagonal().toDenseMatrix());
  const auto z = tomogram(up, half, {0, 0, 0});
  // y = 1 is m = -1/2.
  EXPECT_NEAR(z.values(0), 0.0, 1e-15);
  EXPECT_NEAR(z.values(1), 1.0, 1e-15);
  const auto x = tomogram(up, half, {kPi / 2, 0, 0});
  EXPECT_NEAR(x.values(0), 0.5, 1e-15);
  EXPECT_NEAR(x.values(1), 0.5, 1e-15);

  std::mt19937_64 rng(32);
  const SpinRep<double> rep(3);
  const auto mixed = validate<double>(CM::Identity(4, 4) / 4.0);
  for (int i = 0; i < 20; ++i) {
    const auto t = tomogram(mixed, rep, random::random_direction(rng));
    for (Index k = 0; k < 4; ++k) EXPECT_NEAR(t.values(k), 0.25, 1e-14);
  }
  EXPECT_THROW(tomogram(mixed, half, {}), UsageError);
}

TEST(Tomogram, StorageOrderIsReversed) {
  const SpinRep<double> rep(3);
  CM rho = CM::Zero(4, 4);
  rho(0, 0) = 0.1;  // m = 3/2
  rho(1, 1) = 0.2;
  rho(2, 2) = 0.3;
  rho(3, 3) = 0.4;  // m = -3/2
  const auto t = tomogram(validate<double>(rho), rep, {0, 0, 0});
  EXPECT_NEAR(t.values(0), 0.4, 1e-15);
  EXPECT_NEAR(t.values(3), 0.1, 1e-15);
}

TEST(Tomogram, NormalizedForRandomStatesAndDirections) {
  std::mt19937_64 rng(33);
  for (int twice_j : {1, 2, 3, 5, 7}) {
    const SpinRep<double> rep(twice_j);
    for (int i = 0; i < 1000; ++i) {
      const auto d = random::ginibre_state(rng, rep.dim());
      const auto t = tomogram(d, rep, random::random_direction(rng));
      ASSERT_NEAR(t.values.sum(), 1.0, 1e-10);
      ASSERT_GE(t.values.minCoeff(), -1e-12);
      ASSERT_LE(t.values.maxCoeff(), 1.0 + 1e-12);
    }
  }
}

TEST(Tomogram, IndependentOfPsi) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> shift(0, 2 * kPi);
  const SpinRep<double> rep(5);
  for (int i = 0; i < 200; ++i) {
    const auto d = random::ginibre_state(rng, rep.dim());
    Direction dir = random::random_direction(rng);
    const auto a = tomogram(d, rep, dir);
    dir.psi += shift(rng);
    const auto b = tomogram(d, rep, dir);
    ASSERT_LE((a.values - b.values).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(TomographicMarginals, Examples) {
  const Factorization f{2, 2};
  const auto [u1, u2] = tomographic_marginals(table({0.25, 0.25, 0.25, 0.25}), f);
  EXPECT_NEAR(u1(0), 0.5, 1e-15);
  EXPECT_NEAR(u2(1), 0.5, 1e-15);
  const auto [c1, c2] = tomographic_marginals(table({0.5, 0, 0, 0.5}), f);
  EXPECT_NEAR(c1(0), 0.5, 1e-15);
  EXPECT_NEAR(c2(0), 0.5, 1e-15);
  const auto [p1, p2] = tomographic_marginals(table({1, 0, 0, 0}), f);
  EXPECT_EQ(p1(0), 1.0);
  EXPECT_EQ(p2(0), 1.0);
  EXPECT_THROW(tomographic_marginals(table({0.5, 0.5}), f), UsageError);
  EXPECT_THROW(tomographic_marginals(table({0.5, 0, 0, 0, 0, 0, 0, 0.5}), Factorization{2, 2, 2}),
               UsageError);
  EXPECT_THROW(tomographic_marginals(table({0.5, -0.1, 0.1, 0.5}), f), DomainError);
}

TEST(TomographicTsallis, Examples) {
  const Factorization f{2, 2};
  const auto c = tomographic_tsallis_report(table({0.5, 0, 0, 0.5}), f, TsallisParam(2));
  EXPECT_NEAR(c.tsallis_joint, 0.5, 1e-15);
  EXPECT_NEAR(c.tsallis_first, 0.5, 1e-15);
  EXPECT_NEAR(c.tsallis_second, 0.5, 1e-15);
  EXPECT_TRUE(c.subadditivity_holds);

  for (double q : {0.5, 2.0, 3.0}) {
    const auto p = tomographic_tsallis_report(table({1, 0, 0, 0}), f, TsallisParam(q));
    EXPECT_EQ(p.tsallis_joint, 0.0);
    EXPECT_EQ(p.tsallis_first + p.tsallis_second, 0.0);
    EXPECT_TRUE(p.subadditivity_holds);
  }

  // Product tomogram: S_q(uv) = S_q(u) + S_q(v) + (1-q) S_q(u) S_q(v).
  for (double q : {1.5, 2.0, 3.0}) {
    const auto r = tomographic_tsallis_report(table({0.08, 0.12, 0.32, 0.48}), f, TsallisParam(q));
    EXPECT_NEAR(r.tsallis_joint,
                r.tsallis_first + r.tsallis_second + (1 - q) * r.tsallis_first * r.tsallis_second,
                1e-14);
    EXPECT_TRUE(r.subadditivity_holds);
  }
}

TEST(TomographicTsallis, RandomStatesWithQAboveOne) {
  std::mt19937_64 rng(35);
  const SpinRep<double> rep(5);
  for (const Factorization f : {Factorization{2, 3}, Factorization{3, 2}}) {
    for (int i = 0; i < 500; ++i) {
      const auto t = tomogram(random::ginibre_state(rng, 6), rep, random::random_direction(rng));
      for (double q : {1.5, 2.0, 3.0}) {
        ASSERT_TRUE(tomographic_tsallis_report(t, f, TsallisParam(q)).subadditivity_holds);
      }
    }
  }
}

TEST(TomographicTsallisRelative, Examples) {
  const PV a{0.3, 0.7};
  EXPECT_NEAR(tomographic_tsallis_relative(a, a, TsallisParam(2)).value, 0.0, 1e-15);
  EXPECT_NEAR(
      tomographic_tsallis_relative(PV{2.0 / 3, 1.0 / 3}, PV{0.5, 0.5}, TsallisParam(2)).value,
      1.0 / 9, 1e-15);
  EXPECT_TRUE(tomographic_tsallis_relative(PV{1, 0}, PV{0, 1}, TsallisParam(2)).infinite);
  EXPECT_THROW(tomographic_tsallis_relative(PV{0.5, 0.5}, PV{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                            TsallisParam(2)),
               UsageError);
  EXPECT_THROW(tomographic_tsallis_relative(a, a, TsallisParam(0.5)), UsageError);
}

TEST(TomographicTsallisRelative, AcrossDirections) {
  std::mt19937_64 rng(36);
  const SpinRep<double> rep(3);
  const Factorization f{2, 2};
  for (int i = 0; i < 500; ++i) {
    const auto d = random::ginibre_state(rng, 4);
    const auto m1 = tomographic_marginals(tomogram(d, rep, random::random_direction(rng)), f);
    const auto m2 = tomographic_marginals(tomogram(d, rep, random::random_direction(rng)), f);
    for (double q : {1.5, 2.0}) {
      const auto first = tomographic_tsallis_relative(m1.first, m2.first, TsallisParam(q));
      const auto second = tomographic_tsallis_relative(m1.second, m2.second, TsallisParam(q));
      ASSERT_TRUE(first.infinite || first.value >= -1e-10);
      ASSERT_TRUE(second.infinite || second.value >= -1e-10);
    }
  }
}

TEST(MutualTomographicInformation, Examples) {
  const Factorization f{2, 2};
  EXPECT_NEAR(mutual_tomographic_information(table({0.08, 0.12, 0.32, 0.48}), f), 0.0, 1e-15);
  EXPECT_NEAR(mutual_tomographic_information(table({0.5, 0, 0, 0.5}), f), std::numbers::ln2,
              1e-15);
  EXPECT_NEAR(mutual_tomographic_information(table({0.25, 0.25, 0.25, 0.25}), f), 0.0, 1e-15);
}

TEST(DirectionSweep, Examples) {
  std::mt19937_64 rng(37);
  const SpinRep<double> rep(3);
  const Factorization f{2, 2};
  std::vector<Direction> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(random::random_direction(rng));

  const auto mixed = direction_sweep(validate<double>(CM::Identity(4, 4) / 4.0), rep, f, grid);
  ASSERT_EQ(mixed.size(), grid.size());
  for (const auto& r : mixed) EXPECT_NEAR(r.mutual_info, 0.0, 1e-12);

  // (1, 0, 0, 1)/sqrt 2 in y-order, i.e. m = -3/2 and m = 3/2.
  Eigen::Vector4cd psi(1, 0, 0, 1);
  psi /= std::numbers::sqrt2;
  const auto cat = validate<double>(psi * psi.adjoint());
  const auto at_pole = direction_sweep(cat, rep, f, {Direction{}}, {TsallisParam(2)});
  EXPECT_NEAR(at_pole[0].tomogram.values(0), 0.5, 1e-14);
  EXPECT_NEAR(at_pole[0].tomogram.values(3), 0.5, 1e-14);
  EXPECT_NEAR(at_pole[0].mutual_info, std::numbers::ln2, 1e-14);
  ASSERT_EQ(at_pole[0].tsallis.size(), 1u);
  EXPECT_EQ(at_pole[0].tsallis[0].first, 2.0);

  const auto sweep = direction_sweep(cat, rep, f, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(sweep[i].tomogram.direction.theta, grid[i].theta);
    EXPECT_NEAR(sweep[i].tomogram.values.sum(), 1.0, 1e-10);
    EXPECT_TRUE(sweep[i].mutual_info_holds);
  }
  EXPECT_THROW(direction_sweep(cat, rep, f, {}), UsageError);
}

TEST(DirectionSweep, RandomSpinThreeHalvesStates) {
  std::mt19937_64 rng(38);
  const SpinRep<double> rep(3);
  std::vector<Direction> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(random::random_direction(rng));
  for (int i = 0; i < 100; ++i) {
    const auto d = random::ginibre_state(rng, 4);
    for (const auto& r : direction_sweep(d, rep, Factorization{2, 2}, grid)) {
      ASSERT_GE(r.mutual_info, -1e-10);
    }
  }
}

}  // namespace
}  // namespace hidcorr
