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

// Acceptance suite. Prints one PASS/FAIL line per criterion, each with its
// wall-clock limit, and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ascensus/census.hpp"
#include "ascensus/densities.hpp"
#include "ascensus/partial_fractions.hpp"
#include "ascensus/partitions.hpp"
#include "cli_runner.hpp"
#include "oracles.hpp"

namespace ascensus {
namespace {

using nlohmann::json;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

struct GridPoint {
  std::uint32_t p;
  std::uint32_t n;
  int d;
};

const std::vector<GridPoint> kOracleGrid = {{2, 1, 2}, {2, 1, 4}, {2, 2, 2},
                                            {3, 1, 2}, {3, 1, 4}, {5, 1, 2}};

// The oracle grid together with q = p^2 for each (p, d).
std::vector<GridPoint> extended_grid() {
  auto grid = kOracleGrid;
  for (auto g : std::vector<GridPoint>{{2, 2, 4}, {3, 2, 2}, {3, 2, 4}, {5, 2, 2}})
    grid.push_back(g);
  return grid;
}

std::vector<PartitionKappa> omega_all(int p, int d) {
  std::vector<PartitionKappa> out;
  for (int r = 0; r <= d / 2; ++r)
    for (auto& k : enum_omega(p, r + 1, d + 2)) out.push_back(k);
  return out;
}

BigRational rpow(const BigRational& b, int e) {
  BigRational acc = 1;
  for (int i = 0; i < e; ++i) acc *= b;
  return acc;
}

std::string where(const GridPoint& g, std::uint64_t q, const PartitionKappa& k) {
  return "p=" + std::to_string(g.p) + " q=" + std::to_string(q) +
         " d=" + std::to_string(g.d) + " kappa=" + k.to_string();
}

Outcome geometric_example() {
  Outcome o;
  auto res = testing::run_cli("density geometric --p 5 --d 8 --format json");
  if (res.status != 0) {
    o.fail("exit status " + std::to_string(res.status) + ": " + res.err);
    return o;
  }
  auto j = json::parse(res.out);
  const std::vector<std::string> nums = {"0", "1", "3", "2", "1"};
  if (j["densities"].size() != nums.size()) o.fail("expected 5 rows");
  for (std::size_t r = 0; r < nums.size() && o.pass; ++r) {
    const auto& row = j["densities"][r];
    if (row["r"] != static_cast<int>(r) || row["limit_num"] != nums[r] ||
        row["limit_den"] != "7")
      o.fail("row r=" + std::to_string(r) + " is " + row.dump());
  }
  if (count_mp_total(5, 10) != 7) o.fail("M_5(10) != 7");
  if (o.pass) o.detail = "0/7 1/7 3/7 2/7 1/7, M_5(10)=7";
  return o;
}

Outcome arithmetic_example() {
  Outcome o;
  auto res = testing::run_cli("density arithmetic --d 8 --format json");
  if (res.status != 0) {
    o.fail("exit status " + std::to_string(res.status) + ": " + res.err);
    return o;
  }
  auto j = json::parse(res.out);
  const std::vector<std::string> nums = {"1", "4", "4", "2", "1"};
  if (j["densities"].size() != nums.size()) o.fail("expected 5 rows");
  for (std::size_t r = 0; r < nums.size() && o.pass; ++r) {
    const auto& row = j["densities"][r];
    if (row["limit_num"] != nums[r] || row["limit_den"] != "12")
      o.fail("row r=" + std::to_string(r) + " is " + row.dump());
  }
  const auto& speed = j["expected_speed"][0];
  if (speed["speed_num"] != "19" || speed["speed_den"] != "12")
    o.fail("densities match; expected speed is " + speed["speed_num"].get<std::string>() + "/" +
           speed["speed_den"].get<std::string>() +
           ", required 19/12; sum_r r T(r+1, 10) = 0+4+8+6+4 = 22");
  if (o.pass) o.detail = "1/12 4/12 4/12 2/12 1/12, speed 19/12";
  return o;
}

Outcome squarefree_counts() {
  Outcome o;
  int checked = 0;
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto k = GaloisField::make(p, n);
    for (int N = 0; N <= 4; ++N) {
      const BigInt formula = count_squarefree(k->order(), N);
      const BigInt brute = oracle::squarefree_count(k, N);
      ++checked;
      if (formula != brute)
        o.fail("q=" + std::to_string(k->order()) + " N=" + std::to_string(N) +
               ": " + formula.str() + " vs " + brute.str());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (q, N) pairs agree";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int checked = 0;
  for (const auto& g : kOracleGrid) {
    auto k = GaloisField::make(g.p, g.n);
    for (int r = 0; r <= g.d / 2; ++r) {
      for (const auto& kappa : enum_theta(r + 1, g.d + 2)) {
        auto a = census_constructive(k, kappa);
        auto b = census_naive(k, kappa);
        ++checked;
        if (a.count != b.count)
          o.fail(where(g, k->order(), kappa) + ": constructive " +
                 a.count.str() + " vs naive " + b.count.str());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " kappa agree";
  return o;
}

Outcome sandwich_bounds() {
  Outcome o;
  int checked = 0;
  for (const auto& g : extended_grid()) {
    auto k = GaloisField::make(g.p, g.n);
    const BigRational q(k->order());
    for (const auto& kappa : omega_all(static_cast<int>(g.p), g.d)) {
      if (!kappa.parts_at_most(static_cast<int>(g.p))) continue;
      const auto lam = lambda_stats(kappa);
      BigRational base = BigRational(1) - BigRational(g.d + 2) / q;
      if (base < 0) base = 0;
      const BigRational lower = rpow(base, lam.lambda1 + 1) * rpow(q, g.d + 3);
      const BigRational upper =
          rpow(BigRational(1) - BigRational(1) / q, lam.lambda2) * rpow(q, g.d + 3);
      const BigRational count(census_constructive(k, kappa).count);
      ++checked;
      if (count < lower || count > upper)
        o.fail(where(g, k->order(), kappa) + ": " + count.str() +
               " outside [" + lower.str() + ", " + upper.str() + "]");
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) +
               " counts within bounds (lower base clamped at 0)";
  return o;
}

Outcome degenerate_bound() {
  Outcome o;
  int checked = 0;
  for (const auto& g : extended_grid()) {
    auto k = GaloisField::make(g.p, g.n);
    const BigRational q(k->order());
    for (const auto& kappa : omega_all(static_cast<int>(g.p), g.d)) {
      if (kappa.parts_at_most(static_cast<int>(g.p))) continue;
      const auto lam = lambda_stats(kappa);
      const BigRational upper =
          rpow(BigRational(1) - BigRational(1) / q, lam.lambda2) * rpow(q, g.d + 2);
      const BigRational count(census_constructive(k, kappa).count);
      ++checked;
      if (count > upper)
        o.fail(where(g, k->order(), kappa) + ": " + count.str() + " > " +
               upper.str());
    }
  }
  if (checked == 0) o.fail("no kappa with a part above p on the grid");
  if (o.pass) o.detail = std::to_string(checked) + " degenerate counts bounded";
  return o;
}

Outcome geometric_convergence() {
  Outcome o;
  std::ostringstream msg;
  auto two = empirical_geometric(2, 2, {1, 2, 3, 4});
  BigRational previous = -1;
  double last_gap = 1;
  for (const auto& row : two) {
    if (row.r != 1) continue;
    if (row.ratio.value() <= previous)
      o.fail("r=1 ratio not increasing at q=" + std::to_string(row.q));
    previous = row.ratio.value();
    last_gap = row.gap;
  }
  if (!(last_gap < 0.35)) o.fail("p=2 gap at q=16 is " + std::to_string(last_gap));
  msg << "p=2 q=16 gap " << last_gap;

  auto three = empirical_geometric(3, 2, {1, 2, 3});
  double gap27 = 0;
  for (const auto& row : three)
    if (row.q == 27) gap27 = std::max(gap27, row.gap);
  if (!(gap27 < 0.25)) o.fail("p=3 gap at q=27 is " + std::to_string(gap27));
  msg << "; p=3 q=27 gap " << gap27;
  if (o.pass) o.detail = msg.str();
  return o;
}

Outcome mp_vanishing() {
  Outcome o;
  int checked = 0;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int d = 1; d <= 20; ++d) {
      ++checked;
      bool zero = true;
      for (int r = 0; r <= d / 2; ++r)
        if (!enum_mp(p, r + 1, d + 2).empty()) zero = false;
      if (zero != (count_mp_total(p, d + 2) == 0)) o.fail("count disagrees");
      if (zero != (p == 2 && d % 2 == 1))
        o.fail("p=" + std::to_string(p) + " d=" + std::to_string(d));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (p, d) pairs";
  return o;
}

Outcome too_few_poles() {
  Outcome o;
  int checked = 0;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int d = 1; d <= 20; ++d) {
      if (p == 2 && d % 2 == 1) continue;
      for (int r = 0; r <= d / 2; ++r) {
        if ((r + 1) * p >= d + 2) continue;
        ++checked;
        if (geometric_density(p, d, r).num != 0)
          o.fail("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                 " r=" + std::to_string(r));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " vanishing densities";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  int records = 0;
  for (const auto& g : extended_grid()) {
    auto k = GaloisField::make(g.p, g.n);
    auto agg = aggregate(k, g.d, CensusMode::kConstructive);
    BigInt grand = 0;
    std::vector<BigInt> per_r(g.d / 2 + 1, 0);
    for (const auto& rec : agg.records) {
      ++records;
      if (rec.count % (g.p - 1) != 0 || rec.count % rec.q != 0)
        o.fail("divisibility at " + where(g, rec.q, rec.kappa));
      per_r[rec.kappa.r()] += rec.count;
    }
    for (const auto& st : agg.strata) {
      if (st.count != per_r[st.r])
        o.fail("stratum sum at q=" + std::to_string(agg.q) +
               " r=" + std::to_string(st.r));
      grand += st.count;
    }
    if (grand != agg.total) o.fail("grand total at q=" + std::to_string(agg.q));
  }

  std::mt19937_64 rng(0xA5C3);
  int normalized = 0;
  int trivial = 0;
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}}) {
    auto k = GaloisField::make(p, n);
    for (int i = 0; i < 500; ++i) {
      auto f = oracle::random_proper(k, 5, rng);
      try {
        auto out = normalize_to_admissible(f);
        ++normalized;
        if (f - out.function != pow(out.witness, p) - out.witness)
          o.fail("witness identity fails for " + to_string(f));
        if (!is_admissible(out.function))
          o.fail("not admissible after normalization: " + to_string(f));
        auto again = normalize_to_admissible(out.function);
        if (!(again.function == out.function) || !again.witness.is_zero())
          o.fail("not idempotent for " + to_string(f));
      } catch (const IsArtinSchreierTrivial&) {
        ++trivial;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(records) + " records, " +
               std::to_string(normalized) + " normalizations (" +
               std::to_string(trivial) + " trivial)";
  return o;
}

Outcome cross_module() {
  Outcome o;
  for (int r = 0; r <= 4; ++r) {
    if (geometric_density(11, 8, r).value() != arithmetic_density(8, r).value())
      o.fail("r=" + std::to_string(r));
  }
  if (o.pass) o.detail = "geometric(11, 8, r) == arithmetic(8, r), r=0..4";
  return o;
}

}  // namespace
}  // namespace ascensus

int main() {
  using namespace ascensus;
  const std::vector<Criterion> criteria = {
      {"AC01", "geometric densities for p=5, d=8", 1, geometric_example},
      {"AC02", "arithmetic densities and expected speed for d=8", 1,
       arithmetic_example},
      {"AC03", "squarefree counts vs exhaustive enumeration", 5,
       squarefree_counts},
      {"AC04", "constructive census equals naive oracle", 60,
       oracle_equivalence},
      {"AC05", "sandwich bounds for parts <= p", 120, sandwich_bounds},
      {"AC06", "degenerate-stratum upper bound", 30, degenerate_bound},
      {"AC07", "geometric convergence gate", 300, geometric_convergence},
      {"AC08", "M_p(d+2) = 0 iff p = 2 and d odd", 5, mp_vanishing},
      {"AC09", "density vanishes when (r+1)p < d+2", 5, too_few_poles},
      {"AC10", "structural invariants and normalization", 120,
       structural_invariants},
      {"AC11", "geometric = arithmetic for p=11, d=8", 1, cross_module},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (secs > c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(c.limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("%s %s  %s  [%.3f s / %.0f s]  %s\n", o.pass ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), secs, c.limit_seconds,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
