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

// Test-only reference implementations. Each one takes a route that shares
// no algorithm with the library code it checks.

#ifndef ASCENSUS_TESTS_ORACLES_HPP_
#define ASCENSUS_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ascensus/field.hpp"
#include "ascensus/partitions.hpp"
#include "ascensus/poly.hpp"
#include "ascensus/rational.hpp"

namespace ascensus::oracle {

using P = Poly<GaloisField>;

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Monic polynomials of degree n, keyed by the base-q digits of idx.
inline P monic(const FieldPtr& k, int n, std::uint64_t idx) {
  std::vector<GaloisField::Elem> c(n + 1);
  for (int i = 0; i < n; ++i) {
    c[i] = k->from_code(idx % k->order());
    idx /= k->order();
  }
  c[n] = k->one();
  return P(k, std::move(c));
}

inline std::uint64_t key(const P& f) {
  std::uint64_t v = 0;
  for (int i = f.degree() - 1; i >= 0; --i)
    v = v * f.field().order() + f.coeff(i).code;
  return v;
}

/// Monic squarefree polynomials of degree n, counted by striking every
/// multiple h^2 k of a square out of the full list.
inline std::uint64_t squarefree_count(const FieldPtr& k, int n) {
  const std::uint64_t q = k->order();
  std::set<std::uint64_t> hit;
  for (int a = 1; 2 * a <= n; ++a) {
    for (std::uint64_t i = 0; i < ipow(q, a); ++i) {
      auto h = monic(k, a, i);
      auto h2 = h * h;
      for (std::uint64_t j = 0; j < ipow(q, n - 2 * a); ++j)
        hit.insert(key(h2 * monic(k, n - 2 * a, j)));
    }
  }
  return ipow(q, n) - hit.size();
}

inline int mobius(int n) {
  int m = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

/// Necklace formula for the number of monic irreducibles of degree n.
inline std::int64_t necklace(std::uint64_t q, int n) {
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * static_cast<std::int64_t>(ipow(q, n / d));
  return s / n;
}

/// Partitions of total into exactly k parts with parts in [lo, hi] that
/// satisfy `ok`, by dynamic programming on the largest part.
inline BigInt partition_count(int total, int k, int lo, int hi,
                              const std::function<bool(int)>& ok) {
  // table[t][c][m]: partitions of t into c parts, each allowed and <= m.
  std::vector<std::vector<std::vector<BigInt>>> table(
      total + 1, std::vector<std::vector<BigInt>>(
                     k + 1, std::vector<BigInt>(hi + 1, BigInt(0))));
  for (int m = 0; m <= hi; ++m) table[0][0][m] = 1;
  for (int t = 1; t <= total; ++t)
    for (int c = 1; c <= k; ++c)
      for (int m = 1; m <= hi; ++m) {
        BigInt v = table[t][c][m - 1];
        if (m >= lo && ok(m) && m <= t) v += table[t - m][c - 1][m];
        table[t][c][m] = v;
      }
  return hi >= 0 ? table[total][k][hi] : BigInt(0);
}

inline BigInt theta(int k, int total) {
  return partition_count(total, k, 2, total, [](int) { return true; });
}

inline BigInt mp(int p, int k, int total) {
  return partition_count(total, k, 2, std::min(p, total),
                         [p](int e) { return e % p != 1; });
}

/// F_4 = F_2[x]/(x^2 + x + 1) with codes 0, 1, x = 2, x + 1 = 3.
inline constexpr std::uint32_t kF4Mul[4][4] = {
    {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
inline constexpr std::uint32_t kF4Add[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

inline P random_poly(const FieldPtr& k, int degree, std::mt19937_64& rng,
                     bool make_monic) {
  std::uniform_int_distribution<std::uint64_t> pick(0, k->order() - 1);
  std::vector<GaloisField::Elem> c(degree + 1);
  for (auto& x : c) x = k->from_code(pick(rng));
  if (make_monic) c[degree] = k->one();
  else if (k->is_zero(c[degree])) c[degree] = k->one();
  return P(k, std::move(c));
}

/// Random h/g with deg h <= deg g, g monic of degree 1..max_den_degree.
inline RationalFn<GaloisField> random_proper(const FieldPtr& k,
                                             int max_den_degree,
                                             std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, max_den_degree);
  auto g = random_poly(k, deg(rng), rng, true);
  std::uniform_int_distribution<int> hdeg(0, g.degree());
  auto h = random_poly(k, hdeg(rng), rng, false);
  return RationalFn<GaloisField>(h, g);
}

}  // namespace ascensus::oracle

#endif  // ASCENSUS_TESTS_ORACLES_HPP_
