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

// Partitions of d + 2 into parts >= 2, indexed by multiplicity vectors.
//
// A part e corresponds to a pole of order j = e - 1, and kappa_j counts the
// parts equal to j + 1. The families used throughout:
//   omega(p): every part e != 1 (mod p)          (pole orders prime to p)
//   mp(p):    omega(p) with every part <= p      (maximal-dimension strata)
//   theta:    no congruence condition

#ifndef ASCENSUS_PARTITIONS_HPP_
#define ASCENSUS_PARTITIONS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ascensus {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class PartitionKappa {
 public:
  PartitionKappa() = default;
  /// Parts in any order; throws InvalidKappa if a part is < 2 or the list
  /// is empty.
  static PartitionKappa from_parts(std::vector<int> parts);
  /// kappa[j - 1] = kappa_j. Throws InvalidKappa if all entries are zero or
  /// any is negative.
  static PartitionKappa from_multiplicities(std::vector<int> kappa);
  /// Parses "5+3+2". Throws ParseError.
  static PartitionKappa parse(const std::string& text);

  /// kappa_j, zero outside the support.
  int multiplicity(int j) const noexcept {
    return j >= 1 && j <= max_order() ? kappa_[j - 1] : 0;
  }
  /// Largest j with kappa_j != 0 (the t of the multiplicity vector).
  int max_order() const noexcept { return static_cast<int>(kappa_.size()); }
  const std::vector<int>& multiplicities() const noexcept { return kappa_; }

  int d_plus_2() const noexcept;
  int d() const noexcept { return d_plus_2() - 2; }
  int r_plus_1() const noexcept;
  int r() const noexcept { return r_plus_1() - 1; }
  /// sum_j j kappa_j, the degree of the denominator prod_j g_j^j.
  int pole_degree() const noexcept { return d_plus_2() - r_plus_1(); }
  /// Parts sorted descending.
  std::vector<int> parts() const;
  /// "5+3+2".
  std::string to_string() const;

  /// Every part != 1 (mod p).
  bool in_omega(int p) const noexcept;
  /// Every part <= p (equivalently kappa_j = 0 for j >= p).
  bool parts_at_most(int p) const noexcept { return max_order() < p; }
  /// Whether the ordinary stratum: every pole simple.
  bool is_ordinary() const noexcept { return max_order() == 1; }

  friend auto operator<=>(const PartitionKappa& a,
                          const PartitionKappa& b) = default;

 private:
  std::vector<int> kappa_;
};

struct LambdaStats {
  int lambda1 = 0;  // #{j : kappa_j >= 1}
  int lambda2 = 0;  // #{j : kappa_j >= 2}
};

LambdaStats lambda_stats(const PartitionKappa& kappa);

/// Omega_p(r+1, d+2): partitions of d+2 into r+1 parts, each != 1 (mod p).
std::vector<PartitionKappa> enum_omega(int p, int r_plus_1, int d_plus_2);
/// Theta(r+1, d+2): partitions of d+2 into r+1 parts, each >= 2.
std::vector<PartitionKappa> enum_theta(int r_plus_1, int d_plus_2);
/// Theta(d+2): every partition of d+2 into parts >= 2.
std::vector<PartitionKappa> enum_theta_all(int d_plus_2);
/// Members of Omega_p(r+1, d+2) with every part <= p.
std::vector<PartitionKappa> enum_mp(int p, int r_plus_1, int d_plus_2);

BigInt count_omega(int p, int r_plus_1, int d_plus_2);  // N_p(r+1, d+2)
BigInt count_theta(int r_plus_1, int d_plus_2);         // T(r+1, d+2)
BigInt count_theta_total(int d_plus_2);                 // T(d+2)
BigInt count_mp(int p, int r_plus_1, int d_plus_2);     // M_p(r+1, d+2)
/// M_p(d+2) = sum over r = 0..floor(d/2) of M_p(r+1, d+2).
BigInt count_mp_total(int p, int d_plus_2);

/// Dimension of the stratum component indexed by kappa in the moduli of
/// genus d(p-1)/2 Artin-Schreier curves: d - 1 - sum_e floor((e-1)/p).
int component_dimension(int p, const PartitionKappa& kappa);

struct GenusPrank {
  BigInt twice_genus;    // d (p - 1)
  BigInt genus;          // valid only when genus_integral
  BigInt prank;          // r (p - 1)
  bool genus_integral = true;
  bool ordinary = false;
};

/// g = d(p-1)/2 and tau = r(p-1). For p = 2 and d odd the genus is not an
/// integer; genus_integral is cleared and twice_genus still reports d.
GenusPrank genus_and_prank(int p, const PartitionKappa& kappa);

}  // namespace ascensus

#endif  // ASCENSUS_PARTITIONS_HPP_
