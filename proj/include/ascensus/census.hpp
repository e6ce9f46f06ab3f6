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

// Exact counts of admissible rational functions over F_q by pole type.
//
// For a multiplicity vector kappa, S^kappa(F_q) is the set of admissible
// f = h/g in F_q(x) whose denominator is g = prod_j g_j^j with g_j monic,
// squarefree, of degree kappa_j, and pairwise coprime. Two independent
// routes compute #S^kappa:
//
//   constructive: f is determined by its constant term and one principal
//     part per pole orbit. An orbit of degree e at pole order j has
//     (Q - 1) Q^(n_j) admissible principal parts, Q = q^e, where n_j counts
//     the indices 1 <= i < j prime to p. Summing over assignments of
//     distinct monic irreducibles to orders gives the count.
//   naive: enumerate every (g, h) and test admissibility directly.

#ifndef ASCENSUS_CENSUS_HPP_
#define ASCENSUS_CENSUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ascensus/budget.hpp"
#include "ascensus/field.hpp"
#include "ascensus/partitions.hpp"

namespace ascensus {

enum class CensusMode { kConstructive, kNaive };

std::string to_string(CensusMode mode);

struct CensusBounds {
  enum class Regime {
    kSandwich,    // every part <= p: lower <= count <= upper
    kDegenerate,  // some part > p: count <= upper only
  };
  Regime regime = Regime::kSandwich;
  /// Absent when the lower bound is vacuous (its base 1 - (d+2)/q is
  /// negative) or when the regime has no lower bound.
  std::optional<BigRational> lower;
  BigRational upper;
};

struct CensusRecord {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  int d = 0;
  PartitionKappa kappa;
  BigInt count;
  CensusBounds bounds;
  CensusMode mode = CensusMode::kConstructive;
};

/// Number of monic squarefree polynomials of degree N over F_q: q^N for
/// N <= 1, q^N - q^(N-1) otherwise.
BigInt count_squarefree(std::uint64_t q, int N);

/// Number of monic irreducibles of each degree 0..max_degree (entry 0 is
/// zero), read off the irreducible table. Throws BudgetExceeded.
std::vector<BigInt> irreducible_counts(const FieldPtr& field, int max_degree,
                                       const Budget& budget = {});

/// Sandwich bounds when every part is <= p:
///   (1 - (d+2)/q)^(lambda1+1) q^(d+3) <= #S^kappa <= (1 - 1/q)^lambda2 q^(d+3)
/// and otherwise #S^kappa <= (1 - 1/q)^lambda2 q^(d+2).
CensusBounds census_bounds(std::uint32_t p, std::uint64_t q,
                           const PartitionKappa& kappa);

/// Throws InvalidKappa unless kappa partitions d + 2.
void validate_kappa(const PartitionKappa& kappa, int d);

CensusRecord census_constructive(const FieldPtr& field,
                                 const PartitionKappa& kappa,
                                 const Budget& budget = {});

/// Throws BudgetExceeded when q^(d+3) exceeds budget.naive_pairs.
CensusRecord census_naive(const FieldPtr& field, const PartitionKappa& kappa,
                          const Budget& budget = {});

CensusRecord census(const FieldPtr& field, const PartitionKappa& kappa,
                    CensusMode mode, const Budget& budget = {});

struct BoundReport {
  bool ok = true;
  std::string detail;
};

BoundReport verify_bounds(const CensusRecord& record);
/// Throws BoundViolation carrying the report detail.
void check_bounds(const CensusRecord& record);

/// (p - 1) | count and q | count.
bool divisibility_holds(const CensusRecord& record);

struct StratumTotal {
  int r = 0;
  BigInt prank;     // tau = r (p - 1)
  BigInt count;     // #S_{g,tau}(F_q)
  BigInt as_count;  // count / (p - 1)
};

struct AggregateCensus {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  int d = 0;
  CensusMode mode = CensusMode::kConstructive;
  std::vector<CensusRecord> records;  // every kappa in Omega_p(., d+2)
  std::vector<StratumTotal> strata;   // r = 0..floor(d/2)
  BigInt total;                       // #S_g(F_q)
  BigInt as_total;                    // total / (p - 1)
};

/// Census of every kappa in Omega_p(r+1, d+2), r = 0..floor(d/2), summed
/// per p-rank. `jobs` > 1 spreads the per-kappa work over threads; the
/// result does not depend on it. Throws ConsistencyError if a total is not
/// divisible by p - 1.
AggregateCensus aggregate(const FieldPtr& field, int d, CensusMode mode,
                          const Budget& budget = {}, unsigned jobs = 1);

}  // namespace ascensus

#endif  // ASCENSUS_CENSUS_HPP_
