// Copyright 2026 The as-census Authors.
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

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "ascensus/densities.hpp"
#include "ascensus/errors.hpp"

namespace ascensus {
namespace {

Fraction frac(int num, int den) { return {num, den}; }

TEST(Densities, GeometricExample) {
  const std::vector<Fraction> expected = {frac(0, 7), frac(1, 7), frac(3, 7),
                                          frac(2, 7), frac(1, 7)};
  auto t = geometric_table(5, 8);
  ASSERT_EQ(t.rows.size(), expected.size());
  for (std::size_t r = 0; r < expected.size(); ++r)
    EXPECT_EQ(t.rows[r].density, expected[r]) << "r=" << r;
  EXPECT_FALSE(t.expected_speed.has_value());
}

TEST(Densities, ArithmeticExample) {
  const std::vector<Fraction> expected = {frac(1, 12), frac(4, 12), frac(4, 12),
                                          frac(2, 12), frac(1, 12)};
  auto t = arithmetic_table(8);
  ASSERT_EQ(t.rows.size(), expected.size());
  for (std::size_t r = 0; r < expected.size(); ++r)
    EXPECT_EQ(t.rows[r].density, expected[r]) << "r=" << r;
  ASSERT_TRUE(t.expected_speed.has_value());
  // 0*1 + 1*4 + 2*4 + 3*2 + 4*1 = 22.
  EXPECT_EQ(*t.expected_speed, frac(22, 12));
  EXPECT_EQ(expected_speed(8).value(), BigRational(11, 6));
}

TEST(Densities, Errors) {
  EXPECT_THROW(geometric_density(2, 3, 0), UndefinedDensity);
  EXPECT_THROW(geometric_density(4, 2, 0), InvalidPrime);
  EXPECT_THROW(geometric_density(3, 0, 0), std::invalid_argument);
  EXPECT_THROW(arithmetic_density(0, 0), std::invalid_argument);
  EXPECT_EQ(arithmetic_density(8, 9).num, 0);
  EXPECT_EQ(geometric_density(5, 8, -1).num, 0);
}

TEST(Densities, SumToOne) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int d = 1; d <= 20; ++d) {
      if (p == 2 && d % 2 == 1) continue;
      BigRational g = 0;
      BigRational a = 0;
      for (int r = 0; r <= d / 2; ++r) {
        g += geometric_density(p, d, r).value();
        a += arithmetic_density(d, r).value();
      }
      EXPECT_EQ(g, 1) << "p=" << p << " d=" << d;
      EXPECT_EQ(a, 1) << "d=" << d;
    }
  }
}

TEST(Densities, VanishWhenTooFewPoles) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int d = 1; d <= 20; ++d) {
      if (p == 2 && d % 2 == 1) continue;
      for (int r = 0; r <= d / 2; ++r)
        if ((r + 1) * p < d + 2) EXPECT_EQ(geometric_density(p, d, r).num, 0);
    }
  }
}

TEST(Densities, GeometricEqualsArithmeticForLargePrimes) {
  for (int d = 1; d <= 9; ++d)
    for (int r = 0; r <= d / 2; ++r)
      EXPECT_EQ(geometric_density(11, d, r), arithmetic_density(d, r));
}

TEST(Densities, EmpiricalGeometricConverges) {
  auto rows = empirical_geometric(2, 2, {1, 2, 3, 4});
  ASSERT_EQ(rows.size(), 8u);
  BigRational previous = -1;
  for (const auto& row : rows) {
    if (row.r != 1) continue;
    EXPECT_GT(row.ratio.value(), previous);
    previous = row.ratio.value();
    EXPECT_EQ(row.limit.value(), 1);
  }
  EXPECT_EQ(rows.back().ratio.value(), BigRational(15, 16));
  // Ratios sum to one at each q.
  for (std::size_t i = 0; i < rows.size(); i += 2)
    EXPECT_EQ(rows[i].ratio.value() + rows[i + 1].ratio.value(), 1);
  EXPECT_THROW(empirical_geometric(2, 3, {1}), UndefinedDensity);
}

TEST(Densities, EmpiricalArithmetic) {
  auto rows = empirical_arithmetic(2, {3, 5, 7});
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) EXPECT_EQ(row.limit.value(), BigRational(1, 2));
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    EXPECT_EQ(rows[i].ratio.value() + rows[i + 1].ratio.value(), 1);
    EXPECT_EQ(rows[i].q, rows[i + 1].q);
  }
  // The gap shrinks as p grows.
  EXPECT_LT(rows[4].gap, rows[0].gap);
}

TEST(Densities, EmpiricalGapWithinEngineeringTolerance) {
  // gap <= C / q with C = 4 (d + 2)(lambda_max + 2) |Omega| on a small grid.
  for (auto [p, d] : {std::pair{2, 2}, {3, 2}, {2, 4}, {3, 4}}) {
    int lambda_max = 0;
    std::size_t omega = 0;
    for (int r = 0; r <= d / 2; ++r) {
      for (const auto& k : enum_omega(p, r + 1, d + 2)) {
        lambda_max = std::max(lambda_max, lambda_stats(k).lambda1);
        ++omega;
      }
    }
    const double c = 4.0 * (d + 2) * (lambda_max + 2) * static_cast<double>(omega);
    for (const auto& row : empirical_geometric(p, d, {1, 2}))
      EXPECT_LE(row.gap, c / static_cast<double>(row.q));
  }
}

}  // namespace
}  // namespace ascensus
