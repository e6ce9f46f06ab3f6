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

#include "ascensus/census.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <utility>

#include "ascensus/errors.hpp"
#include "ascensus/partial_fractions.hpp"
#include "ascensus/poly.hpp"

namespace ascensus {

std::string to_string(CensusMode mode) {
  return mode == CensusMode::kConstructive ? "constructive" : "naive";
}

BigInt count_squarefree(std::uint64_t q, int N) {
  if (N < 0) return 0;
  BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(N));
  if (N <= 1) return qn;
  return qn - qn / q;
}

std::vector<BigInt> irreducible_counts(const FieldPtr& field, int max_degree,
                                       const Budget& budget) {
  std::vector<BigInt> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& f : irreducibles_up_to(field, max_degree, budget))
    counts[f.degree()] += 1;
  return counts;
}

CensusBounds census_bounds(std::uint32_t p, std::uint64_t q,
                           const PartitionKappa& kappa) {
  const auto lam = lambda_stats(kappa);
  const int d = kappa.d();
  const BigRational qr(q);
  const BigRational shrink = BigRational(1) - BigRational(1) / qr;
  auto rpow = [](BigRational base, int e) {
    BigRational acc(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
  };
  CensusBounds b;
  if (kappa.parts_at_most(static_cast<int>(p))) {
    b.regime = CensusBounds::Regime::kSandwich;
    b.upper = rpow(shrink, lam.lambda2) * rpow(qr, d + 3);
    const BigRational base = BigRational(1) - BigRational(d + 2) / qr;
    if (base >= 0) b.lower = rpow(base, lam.lambda1 + 1) * rpow(qr, d + 3);
  } else {
    b.regime = CensusBounds::Regime::kDegenerate;
    b.upper = rpow(shrink, lam.lambda2) * rpow(qr, d + 2);
  }
  return b;
}

void validate_kappa(const PartitionKappa& kappa, int d) {
  if (kappa.d_plus_2() != d + 2) {
    throw InvalidKappa("partition " + kappa.to_string() + " sums to " +
                       std::to_string(kappa.d_plus_2()) + ", not d + 2 = " +
                       std::to_string(d + 2));
  }
}

namespace {

CensusRecord blank_record(const FieldPtr& field, const PartitionKappa& kappa,
                          CensusMode mode) {
  if (kappa.multiplicities().empty())
    throw InvalidKappa("empty multiplicity vector");
  CensusRecord rec;
  rec.q = field->order();
  rec.p = field->characteristic();
  rec.n = field->degree();
  rec.d = kappa.d();
  rec.kappa = kappa;
  rec.mode = mode;
  rec.bounds = census_bounds(rec.p, rec.q, kappa);
  return rec;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < k) return 0;
  BigInt acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

// Ways to write `total` as a multiset of degrees, as multiplicity vectors
// indexed by degree (entry 0 unused).
std::vector<std::vector<int>> degree_splits(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> mult(static_cast<std::size_t>(total) + 1, 0);
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(mult);
      return;
    }
    for (int e = std::min(cap, rest); e >= 1; --e) {
      ++mult[e];
      rec(rest - e, e);
      --mult[e];
    }
  };
  rec(total, total);
  return out;
}

}  // namespace

CensusRecord census_constructive(const FieldPtr& field,
                                 const PartitionKappa& kappa,
                                 const Budget& budget) {
  CensusRecord rec = blank_record(field, kappa, CensusMode::kConstructive);
  const int p = static_cast<int>(field->characteristic());
  const BigInt q = field->order();

  struct Slot {
    int order;                            // pole order j
    int size;                             // kappa_j
    std::vector<std::vector<int>> splits;  // degree multisets summing to size
    std::vector<BigInt> weight;            // weight[e] for an orbit of degree e
  };
  std::vector<Slot> slots;
  int max_size = 0;
  for (int j = 1; j <= kappa.max_order(); ++j) {
    const int m = kappa.multiplicity(j);
    if (m == 0) continue;
    if (j % p == 0) {
      // A pole order divisible by p forces c_j = 0, so no such f exists.
      rec.count = 0;
      return rec;
    }
    slots.push_back({j, m, degree_splits(m), {}});
    max_size = std::max(max_size, m);
  }

  const auto available = irreducible_counts(field, max_size, budget);
  for (auto& slot : slots) {
    const int free_coeffs = (slot.order - 1) - (slot.order - 1) / p;
    slot.weight.assign(static_cast<std::size_t>(slot.size) + 1, 0);
    for (int e = 1; e <= slot.size; ++e) {
      BigInt Q = boost::multiprecision::pow(q, static_cast<unsigned>(e));
      slot.weight[e] =
          (Q - 1) * boost::multiprecision::pow(Q, static_cast<unsigned>(free_coeffs));
    }
  }

  // Local counts depend on an irreducible only through its degree, so the
  // set of irreducibles already used collapses to per-degree counts.
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
  std::function<BigInt(std::size_t, std::vector<int>&)> assign =
      [&](std::size_t s, std::vector<int>& used) -> BigInt {
    if (s == slots.size()) return 1;
    auto key = std::make_pair(s, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Slot& slot = slots[s];
    BigInt total = 0;
    for (const auto& split : slot.splits) {
      BigInt ways = 1;
      for (int e = 1; e <= slot.size && ways != 0; ++e) {
        const int k = split[e];
        if (k == 0) continue;
        ways *= binomial(available[e] - used[e], k) *
                boost::multiprecision::pow(slot.weight[e],
                                           static_cast<unsigned>(k));
      }
      if (ways == 0) continue;
      for (int e = 1; e <= slot.size; ++e) used[e] += split[e];
      total += ways * assign(s + 1, used);
      for (int e = 1; e <= slot.size; ++e) used[e] -= split[e];
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> used(static_cast<std::size_t>(max_size) + 1, 0);
  // Times q for the constant term of f.
  rec.count = q * assign(0, used);
  return rec;
}

namespace {

// Monic squarefree polynomials of degree e, in index order.
std::vector<Poly<GaloisField>> squarefree_monics(const FieldPtr& field, int e,
                                                 const Budget& budget) {
  const std::uint64_t count =
      checked_power(field->order(), e, budget.enumeration_cap,
                    "squarefree candidates");
  std::vector<Poly<GaloisField>> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto g = monic_from_index(field, e, idx);
    if (is_squarefree(g)) out.push_back(std::move(g));
  }
  return out;
}

// Pole-order vector of an admissible function's decomposition.
PartitionKappa kappa_of(const PartialFractions& pf) {
  std::vector<int> mult;
  for (const auto& part : pf.parts) {
    const auto j = static_cast<std::size_t>(part.order());
    if (mult.size() < j) mult.resize(j, 0);
    mult[j - 1] += part.orbit_size();
  }
  return PartitionKappa::from_multiplicities(std::move(mult));
}

}  // namespace

CensusRecord census_naive(const FieldPtr& field, const PartitionKappa& kappa,
                          const Budget& budget) {
  CensusRecord rec = blank_record(field, kappa, CensusMode::kNaive);
  const std::uint64_t q = field->order();
  const int pole_degree = kappa.pole_degree();

  // Upper estimate of the pairs visited: q^(r+1) denominators times
  // q^(deg g + 1) numerators.
  checked_power(q, kappa.d() + 3, budget.naive_pairs, "naive (g, h) pairs");

  std::vector<int> orders;
  std::vector<std::vector<Poly<GaloisField>>> choices;
  for (int j = 1; j <= kappa.max_order(); ++j) {
    if (kappa.multiplicity(j) == 0) continue;
    orders.push_back(j);
    choices.push_back(squarefree_monics(field, kappa.multiplicity(j), budget));
  }

  const std::uint64_t numerators = checked_power(
      q, pole_degree + 1, budget.naive_pairs, "naive numerators");
  BigInt count = 0;

  auto count_numerators = [&](const Poly<GaloisField>& g) {
    const auto factors = factor(g);
    std::vector<GaloisField::Elem> c(static_cast<std::size_t>(pole_degree) + 1);
    for (std::uint64_t idx = 0; idx < numerators; ++idx) {
      std::uint64_t rest = idx;
      for (auto& x : c) {
        x = field->from_code(rest % q);
        rest /= q;
      }
      Poly<GaloisField> h(field, c);
      if (!gcd(h, g).is_one()) continue;
      RationalFn<GaloisField> f(h, g);
      auto pf = principal_parts(f, factors);
      if (!is_admissible(pf)) continue;
      if (kappa_of(pf) != kappa) continue;
      count += 1;
    }
  };

  std::vector<const Poly<GaloisField>*> picked;
  std::function<void(std::size_t)> pick = [&](std::size_t s) {
    if (s == orders.size()) {
      auto g = Poly<GaloisField>::one(field);
      for (std::size_t i = 0; i < picked.size(); ++i)
        g = g * pow(*picked[i], static_cast<std::uint64_t>(orders[i]));
      count_numerators(g);
      return;
    }
    for (const auto& cand : choices[s]) {
      bool coprime = true;
      for (const auto* prev : picked)
        if (!gcd(cand, *prev).is_one()) {
          coprime = false;
          break;
        }
      if (!coprime) continue;
      picked.push_back(&cand);
      pick(s + 1);
      picked.pop_back();
    }
  };
  pick(0);
  rec.count = count;
  return rec;
}

CensusRecord census(const FieldPtr& field, const PartitionKappa& kappa,
                    CensusMode mode, const Budget& budget) {
  return mode == CensusMode::kConstructive
             ? census_constructive(field, kappa, budget)
             : census_naive(field, kappa, budget);
}

BoundReport verify_bounds(const CensusRecord& record) {
  BoundReport rep;
  const BigRational count(record.count);
  const auto& b = record.bounds;
  auto context = [&] {
    return "q=" + std::to_string(record.q) + " p=" + std::to_string(record.p) +
           " d=" + std::to_string(record.d) +
           " kappa=" + record.kappa.to_string() +
           " count=" + record.count.str();
  };
  if (count > b.upper) {
    rep.ok = false;
    rep.detail = "count exceeds upper bound " + b.upper.str() + " (" +
                 context() + ")";
  } else if (b.lower && count < *b.lower) {
    rep.ok = false;
    rep.detail = "count below lower bound " + b.lower->str() + " (" +
                 context() + ")";
  }
  return rep;
}

void check_bounds(const CensusRecord& record) {
  auto rep = verify_bounds(record);
  if (!rep.ok) throw BoundViolation(rep.detail);
}

bool divisibility_holds(const CensusRecord& record) {
  return record.count % (record.p - 1) == 0 && record.count % record.q == 0;
}

AggregateCensus aggregate(const FieldPtr& field, int d, CensusMode mode,
                          const Budget& budget, unsigned jobs) {
  AggregateCensus agg;
  agg.q = field->order();
  agg.p = field->characteristic();
  agg.n = field->degree();
  agg.d = d;
  agg.mode = mode;

  const int p = static_cast<int>(agg.p);
  std::vector<std::pair<int, PartitionKappa>> work;
  for (int r = 0; r <= d / 2; ++r)
    for (auto& k : enum_omega(p, r + 1, d + 2)) work.emplace_back(r, k);

  std::vector<CensusRecord> records(work.size());
  if (jobs <= 1 || work.size() <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i)
      records[i] = census(field, work[i].second, mode, budget);
  } else {
    // Strided split; results land in their own slots, so order is fixed.
    std::vector<std::future<void>> pending;
    const std::size_t stride = std::min<std::size_t>(jobs, work.size());
    for (std::size_t t = 0; t < stride; ++t) {
      pending.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < work.size(); i += stride)
          records[i] = census(field, work[i].second, mode, budget);
      }));
    }
    for (auto& f : pending) f.get();
  }

  const BigInt pm1 = agg.p - 1;
  for (int r = 0; r <= d / 2; ++r) {
    StratumTotal st;
    st.r = r;
    st.prank = BigInt(r) * pm1;
    st.count = 0;
    agg.strata.push_back(st);
  }
  agg.total = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    agg.strata[work[i].first].count += records[i].count;
    agg.total += records[i].count;
  }
  for (auto& st : agg.strata) {
    if (st.count % pm1 != 0)
      throw ConsistencyError("#S for r=" + std::to_string(st.r) +
                             " is not divisible by p - 1");
    st.as_count = st.count / pm1;
  }
  if (agg.total % pm1 != 0)
    throw ConsistencyError("#S_g is not divisible by p - 1");
  agg.as_total = agg.total / pm1;
  agg.records = std::move(records);
  return agg;
}

}  // namespace ascensus
