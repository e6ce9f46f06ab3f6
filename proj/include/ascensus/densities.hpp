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

// Limiting p-rank densities of Artin-Schreier covers and their finite-field
// counterparts.
//
// geometric (p fixed, q -> infinity):   M_p(r+1, d+2) / M_p(d+2)
// arithmetic (q = p -> infinity):       T(r+1, d+2) / T(d+2)

#ifndef ASCENSUS_DENSITIES_HPP_
#define ASCENSUS_DENSITIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ascensus/budget.hpp"
#include "ascensus/partitions.hpp"

namespace ascensus {

/// num/den kept as counted (4/12 stays 4/12); value() reduces.
struct Fraction {
  BigInt num;
  BigInt den;

  BigRational value() const { return BigRational(num, den); }
  std::string str() const { return num.str() + "/" + den.str(); }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

enum class DensityMode { kGeometric, kArithmetic };

std::string to_string(DensityMode mode);

struct DensityRow {
  int r = 0;
  Fraction density;
};

struct DensityTable {
  DensityMode mode = DensityMode::kGeometric;
  std::optional<int> p;  // geometric only
  int d = 0;
  std::vector<DensityRow> rows;         // r = 0..floor(d/2)
  std::optional<Fraction> expected_speed;  // arithmetic only
};

/// M_p(r+1, d+2) / M_p(d+2) with the counted denominator. Throws
/// UndefinedDensity when p = 2 and d is odd, and std::invalid_argument
/// when d <= 0. r outside 0..floor(d/2) gives 0.
Fraction geometric_density(int p, int d, int r);
/// T(r+1, d+2) / T(d+2). Same conventions as geometric_density.
Fraction arithmetic_density(int d, int r);
/// sum_r r T(r+1, d+2) / T(d+2).
Fraction expected_speed(int d);

DensityTable geometric_table(int p, int d);
DensityTable arithmetic_table(int d);

/// One row of an empirical-vs-limit table.
struct ConvergenceRow {
  DensityMode mode = DensityMode::kGeometric;
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  int d = 0;
  int r = 0;
  BigInt genus;  // d (p - 1) / 2; valid when genus_integral
  bool genus_integral = true;
  BigInt prank;  // r (p - 1)
  Fraction ratio;  // #S_{g,tau}(F_q) / #S_g(F_q)
  Fraction limit;
  double gap = 0;  // |ratio - limit|
};

/// Exact ratios over F_{p^n} for each exponent n next to the geometric
/// limit. Throws UndefinedDensity for p = 2 with odd d.
std::vector<ConvergenceRow> empirical_geometric(
    int p, int d, const std::vector<int>& exponents, const Budget& budget = {},
    unsigned jobs = 1);

/// Exact ratios over F_p for each prime next to the arithmetic limit.
std::vector<ConvergenceRow> empirical_arithmetic(
    int d, const std::vector<int>& primes, const Budget& budget = {},
    unsigned jobs = 1);

}  // namespace ascensus

#endif  // ASCENSUS_DENSITIES_HPP_
