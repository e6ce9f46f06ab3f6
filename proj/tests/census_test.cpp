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

#include <vector>

#include <gtest/gtest.h>

#include "ascensus/census.hpp"
#include "oracles.hpp"

namespace ascensus {
namespace {

TEST(Census, SquarefreeClosedForm) {
  EXPECT_EQ(count_squarefree(5, 0), 1);
  EXPECT_EQ(count_squarefree(5, 1), 5);
  EXPECT_EQ(count_squarefree(5, 2), 20);
  EXPECT_EQ(count_squarefree(4, 3), 48);
  EXPECT_EQ(count_squarefree(2, -1), 0);
}

TEST(Census, TwoSimplePolesClosedForm) {
  // kappa = 2+2: q * (C(q,2) (q-1)^2 + N_2 (q^2 - 1)), N_2 = (q^2 - q)/2.
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    auto k = GaloisField::make(p, n);
    const BigInt q = k->order();
    const BigInt expected =
        q * ((q * (q - 1) / 2) * (q - 1) * (q - 1) + (q * q - q) / 2 * (q * q - 1));
    auto rec = census_constructive(k, PartitionKappa::parse("2+2"));
    EXPECT_EQ(rec.count, expected) << "q=" << q;
  }
}

TEST(Census, SinglePoleOfOrderThreeInCharacteristicTwo) {
  // One rational pole, c_1 free, c_2 = 0, c_3 nonzero: q * q * (q - 1) * q.
  for (std::uint32_t n : {1u, 2u, 3u}) {
    auto k = GaloisField::make(2, n);
    const BigInt q = k->order();
    auto rec = census_constructive(k, PartitionKappa::parse("4"));
    EXPECT_EQ(rec.count, q * q * q * (q - 1));
    EXPECT_EQ(rec.bounds.regime, CensusBounds::Regime::kDegenerate);
    EXPECT_TRUE(verify_bounds(rec).ok);
  }
}

TEST(Census, PoleOrderDivisibleByPIsEmpty) {
  auto k = GaloisField::make(3, 1);
  EXPECT_EQ(census_constructive(k, PartitionKappa::parse("4+2")).count, 0);
  EXPECT_EQ(census_naive(k, PartitionKappa::parse("4+2")).count, 0);
}

TEST(Census, SandwichExampleOverF9) {
  auto k = GaloisField::make(3, 2);
  auto rec = census_constructive(k, PartitionKappa::parse("2+2"));
  EXPECT_EQ(rec.count, 46656);
  ASSERT_TRUE(rec.bounds.lower.has_value());
  EXPECT_EQ(*rec.bounds.lower, 18225);
  EXPECT_EQ(rec.bounds.upper, 52488);
  EXPECT_TRUE(verify_bounds(rec).ok);
}

TEST(Census, VacuousLowerBoundForSmallFields) {
  auto b = census_bounds(2, 2, PartitionKappa::parse("2+2"));
  EXPECT_EQ(b.regime, CensusBounds::Regime::kSandwich);
  EXPECT_FALSE(b.lower.has_value());
  EXPECT_EQ(b.upper, 16);
}

TEST(Census, ConstructiveAgreesWithNaive) {
  struct Case {
    std::uint32_t p, n;
    int d;
  };
  for (auto c : {Case{2, 1, 2}, Case{2, 1, 4}, Case{2, 2, 2}, Case{3, 1, 2},
                 Case{3, 1, 3}, Case{5, 1, 2}, Case{2, 1, 3}}) {
    auto k = GaloisField::make(c.p, c.n);
    for (int r = 0; r <= c.d / 2; ++r) {
      for (const auto& kappa : enum_theta(r + 1, c.d + 2)) {
        auto a = census_constructive(k, kappa);
        auto b = census_naive(k, kappa);
        EXPECT_EQ(a.count, b.count)
            << "q=" << k->order() << " kappa=" << kappa.to_string();
        EXPECT_TRUE(divisibility_holds(a));
      }
    }
  }
}

TEST(Census, NaiveRespectsBudget) {
  auto k = GaloisField::make(5, 1);
  Budget small;
  small.naive_pairs = 1000;
  try {
    census_naive(k, PartitionKappa::parse("3+3"), small);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(e.parameter().find("naive"), std::string::npos);
  }
}

TEST(Census, ValidateKappa) {
  EXPECT_NO_THROW(validate_kappa(PartitionKappa::parse("5+3+2"), 8));
  EXPECT_THROW(validate_kappa(PartitionKappa::parse("5+3"), 8), InvalidKappa);
}

TEST(Census, AggregateSumsAndParallelDeterminism) {
  for (auto [p, n, d] : {std::tuple{3u, 1u, 4}, {2u, 2u, 4}, {5u, 1u, 3}}) {
    auto k = GaloisField::make(p, n);
    auto serial = aggregate(k, d, CensusMode::kConstructive);
    auto parallel = aggregate(k, d, CensusMode::kConstructive, {}, 4);
    ASSERT_EQ(serial.records.size(), parallel.records.size());
    BigInt grand = 0;
    std::vector<BigInt> per_r(d / 2 + 1, 0);
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
      EXPECT_EQ(serial.records[i].count, parallel.records[i].count);
      EXPECT_EQ(serial.records[i].kappa, parallel.records[i].kappa);
      per_r[serial.records[i].kappa.r()] += serial.records[i].count;
      grand += serial.records[i].count;
      EXPECT_TRUE(divisibility_holds(serial.records[i]));
    }
    for (const auto& st : serial.strata) {
      EXPECT_EQ(st.count, per_r[st.r]);
      EXPECT_EQ(st.as_count * (p - 1), st.count);
    }
    EXPECT_EQ(serial.total, grand);
  }
}

TEST(Census, AggregateModesAgree) {
  auto k = GaloisField::make(3, 1);
  auto a = aggregate(k, 2, CensusMode::kConstructive);
  auto b = aggregate(k, 2, CensusMode::kNaive);
  EXPECT_EQ(a.total, b.total);
  for (std::size_t r = 0; r < a.strata.size(); ++r)
    EXPECT_EQ(a.strata[r].count, b.strata[r].count);
}

}  // namespace
}  // namespace ascensus
