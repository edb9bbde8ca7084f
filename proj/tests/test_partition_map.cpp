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
#include <set>

#include <gtest/gtest.h>

#include "hidcorr/partition_map.hpp"
#include "test_support.hpp"

namespace hidcorr {
namespace {

TEST(Factorization, CachesTotalAndRejectsBadFactors) {
  const Factorization f{2, 3, 4};
  EXPECT_EQ(f.total(), 24);
  EXPECT_EQ(f.rank(), 3);
  EXPECT_FALSE(f.trivial());
  EXPECT_TRUE(Factorization{7}.trivial());
  EXPECT_THROW(Factorization(std::vector<Index>{}), UsageError);
  EXPECT_THROW((Factorization{2, 0}), UsageError);
  EXPECT_THROW((Factorization{-3}), UsageError);
}

TEST(Compose, FourLevelTable) {
  const Factorization f{2, 2};
  EXPECT_EQ(compose(f, {1, 1}), 1);
  EXPECT_EQ(compose(f, {2, 1}), 2);
  EXPECT_EQ(compose(f, {1, 2}), 3);
  EXPECT_EQ(compose(f, {2, 2}), 4);
}

TEST(Compose, AllOnesIsFirstAndDirectSubstitution) {
  EXPECT_EQ(compose(Factorization{3, 5, 2, 7}, {1, 1, 1, 1}), 1);
  // 2 + (2 - 1) * 3
  EXPECT_EQ(compose(Factorization{3, 2}, {2, 2}), 5);
}

TEST(Compose, OutOfRangeNamesAxis) {
  const Factorization f{2, 3};
  try {
    compose(f, {1, 4});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("axis 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(compose(f, {0, 1}), DomainError);
  EXPECT_THROW(compose(f, {1}), UsageError);
}

TEST(Decompose, FourLevelTable) {
  const Factorization f{2, 2};
  const std::vector<std::vector<Index>> expected = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (Index y = 1; y <= 4; ++y) EXPECT_EQ(decompose(y, f).coords, expected[y - 1]);
}

TEST(Decompose, InverseExamples) {
  EXPECT_EQ(decompose(5, Factorization{3, 2}).coords, (std::vector<Index>{2, 2}));
  EXPECT_EQ(decompose(1, Factorization{4, 3, 2}).coords, (std::vector<Index>{1, 1, 1}));
  EXPECT_THROW(decompose(0, Factorization{2, 2}), DomainError);
  EXPECT_THROW(decompose(5, Factorization{2, 2}), DomainError);
}

TEST(SplitIndex, Examples) {
  EXPECT_EQ(split_index(3, QuditSplit(Factorization{2, 2}, 1)), (std::pair<Index, Index>{1, 2}));
  const QuditSplit s(Factorization{2, 3, 2}, 2);
  EXPECT_EQ(s.dim_left(), 6);
  EXPECT_EQ(s.dim_right(), 2);
  EXPECT_EQ(split_index(1, s), (std::pair<Index, Index>{1, 1}));
  EXPECT_EQ(split_index(7, s), (std::pair<Index, Index>{1, 2}));
}

TEST(QuditSplit, RejectsBadSplitPoints) {
  EXPECT_THROW(QuditSplit(Factorization{2, 2}, 0), UsageError);
  EXPECT_THROW(QuditSplit(Factorization{2, 2}, 2), UsageError);
  EXPECT_THROW(QuditSplit(Factorization{4}, 1), UsageError);
}

// Oracle: an odometer over (x_1..x_M), x_1 fastest, visits y = 1, 2, ... in order.
TEST(PartitionMap, OdometerOrderMatchesCompose) {
  for (const auto& dims : {std::vector<Index>{2, 3, 2}, {5, 1, 3}, {3, 4}, {2, 2, 2, 2}}) {
    const Factorization f(dims);
    std::vector<Index> x(dims.size(), 1);
    for (Index expected = 1; expected <= f.total(); ++expected) {
      EXPECT_EQ(compose(f, x), expected);
      EXPECT_EQ(decompose(expected, f).coords, x);
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (++x[k] <= dims[k]) break;
        x[k] = 1;
      }
    }
  }
}

TEST(PartitionMap, BijectionOnEveryFactorizationUpTo5040) {
  for (Index n : {1, 12, 360, 720, 5040}) {
    auto all = testing::ordered_factorizations(n);
    if (n == 1) all = {{1}};
    // Bound the sweep for 5040, which has tens of thousands of orderings.
    if (all.size() > 200) all.resize(200);
    for (const auto& dims : all) {
      const Factorization f(dims);
      std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
      for (Index y = 1; y <= n; ++y) {
        const Index back = compose(decompose(y, f));
        ASSERT_EQ(back, y);
        ASSERT_FALSE(seen[static_cast<std::size_t>(back)]);
        seen[static_cast<std::size_t>(back)] = true;
      }
    }
  }
}

// x_1 = y mod X_1 with representative in 1..X_1; x_2 - 1 = ((y - x_1)/X_1) mod X_2.
TEST(PartitionMap, TwoFactorClosedForms) {
  for (Index a = 1; a <= 32; ++a) {
    for (Index b = 1; a * b <= 1024; ++b) {
      const Factorization f{a, b};
      for (Index y = 1; y <= a * b; ++y) {
        Index x1 = y % a;
        if (x1 == 0) x1 = a;
        const Index x2 = (y - x1) / a % b + 1;
        const auto got = decompose(y, f).coords;
        ASSERT_EQ(got[0], x1);
        ASSERT_EQ(got[1], x2);
        ASSERT_EQ(x1 + (x2 - 1) * a, y);
      }
    }
  }
}

TEST(PartitionMap, OrderSensitive) {
  EXPECT_EQ(decompose(2, Factorization{2, 3}).coords, (std::vector<Index>{2, 1}));
  EXPECT_EQ(decompose(2, Factorization{3, 2}).coords, (std::vector<Index>{2, 1}));
  EXPECT_EQ(decompose(4, Factorization{2, 3}).coords, (std::vector<Index>{2, 2}));
  EXPECT_EQ(decompose(4, Factorization{3, 2}).coords, (std::vector<Index>{1, 2}));
}

TEST(SplitIndex, BijectiveAndConsistentWithCoords) {
  const Factorization f{2, 3, 2, 3};
  for (Index s = 1; s < f.rank(); ++s) {
    const QuditSplit split(f, s);
    std::set<std::pair<Index, Index>> seen;
    for (Index y = 1; y <= f.total(); ++y) {
      const auto ab = split_index(y, split);
      const auto x = decompose(y, f).coords;
      std::vector<Index> lead(x.begin(), x.begin() + s), trail(x.begin() + s, x.end());
      std::vector<Index> ldims(f.dims().begin(), f.dims().begin() + s);
      std::vector<Index> tdims(f.dims().begin() + s, f.dims().end());
      EXPECT_EQ(ab.first, compose(Factorization(ldims), lead));
      EXPECT_EQ(ab.second, compose(Factorization(tdims), trail));
      EXPECT_TRUE(seen.insert(ab).second);
    }
  }
}

}  // namespace
}  // namespace hidcorr
