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

#include "ascensus/densities.hpp"

#include <stdexcept>

#include "ascensus/census.hpp"
#include "ascensus/errors.hpp"
#include "ascensus/field.hpp"

namespace ascensus {

std::string to_string(DensityMode mode) {
  return mode == DensityMode::kGeometric ? "geometric" : "arithmetic";
}

namespace {

void require_positive_d(int d) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
}

void require_geometric_defined(int p, int d) {
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidPrime(std::to_string(p) + " is not prime");
  require_positive_d(d);
  if (p == 2 && d % 2 == 1) {
    throw UndefinedDensity(
        "geometric density is undefined for p = 2 and odd d (d = " +
        std::to_string(d) + "): M_2(d+2) = 0");
  }
}

}  // namespace

Fraction geometric_density(int p, int d, int r) {
  require_geometric_defined(p, d);
  BigInt den = count_mp_total(p, d + 2);
  if (r < 0 || r > d / 2) return {0, den};
  return {count_mp(p, r + 1, d + 2), den};
}

Fraction arithmetic_density(int d, int r) {
  require_positive_d(d);
  BigInt den = count_theta_total(d + 2);
  if (r < 0 || r > d / 2) return {0, den};
  return {count_theta(r + 1, d + 2), den};
}

Fraction expected_speed(int d) {
  require_positive_d(d);
  BigInt num = 0;
  for (int r = 0; r <= d / 2; ++r) num += r * count_theta(r + 1, d + 2);
  return {num, count_theta_total(d + 2)};
}

DensityTable geometric_table(int p, int d) {
  DensityTable t;
  t.mode = DensityMode::kGeometric;
  t.p = p;
  t.d = d;
  for (int r = 0; r <= d / 2; ++r)
    t.rows.push_back({r, geometric_density(p, d, r)});
  return t;
}

DensityTable arithmetic_table(int d) {
  DensityTable t;
  t.mode = DensityMode::kArithmetic;
  t.d = d;
  for (int r = 0; r <= d / 2; ++r)
    t.rows.push_back({r, arithmetic_density(d, r)});
  t.expected_speed = expected_speed(d);
  return t;
}

namespace {

std::vector<ConvergenceRow> rows_from(const AggregateCensus& agg,
                                      DensityMode mode,
                                      const std::vector<Fraction>& limits) {
  if (agg.total == 0) {
    throw UndefinedDensity("no admissible functions of d = " +
                           std::to_string(agg.d) + " over F_" +
                           std::to_string(agg.q) + "; ratios are undefined");
  }
  std::vector<ConvergenceRow> out;
  for (const auto& st : agg.strata) {
    ConvergenceRow row;
    row.mode = mode;
    row.p = agg.p;
    row.q = agg.q;
    row.d = agg.d;
    row.r = st.r;
    BigInt twice_g = BigInt(agg.d) * (agg.p - 1);
    row.genus_integral = twice_g % 2 == 0;
    row.genus = row.genus_integral ? BigInt(twice_g / 2) : BigInt(0);
    row.prank = st.prank;
    row.ratio = {st.count, agg.total};
    row.limit = limits[st.r];
    BigRational diff = row.ratio.value() - row.limit.value();
    if (diff < 0) diff = -diff;
    row.gap = static_cast<double>(diff);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<ConvergenceRow> empirical_geometric(
    int p, int d, const std::vector<int>& exponents, const Budget& budget,
    unsigned jobs) {
  require_geometric_defined(p, d);
  std::vector<Fraction> limits;
  for (int r = 0; r <= d / 2; ++r) limits.push_back(geometric_density(p, d, r));
  std::vector<ConvergenceRow> out;
  for (int n : exponents) {
    auto field = GaloisField::make(static_cast<std::uint32_t>(p),
                                   static_cast<std::uint32_t>(n));
    auto agg = aggregate(field, d, CensusMode::kConstructive, budget, jobs);
    auto rows = rows_from(agg, DensityMode::kGeometric, limits);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::vector<ConvergenceRow> empirical_arithmetic(
    int d, const std::vector<int>& primes, const Budget& budget,
    unsigned jobs) {
  require_positive_d(d);
  std::vector<Fraction> limits;
  for (int r = 0; r <= d / 2; ++r) limits.push_back(arithmetic_density(d, r));
  std::vector<ConvergenceRow> out;
  for (int p : primes) {
    auto field = GaloisField::make(static_cast<std::uint32_t>(p), 1);
    auto agg = aggregate(field, d, CensusMode::kConstructive, budget, jobs);
    auto rows = rows_from(agg, DensityMode::kArithmetic, limits);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace ascensus
