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

#include "ascensus/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "ascensus/errors.hpp"

namespace ascensus {

PartitionKappa PartitionKappa::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw InvalidKappa("a partition needs at least one part");
  int top = 0;
  for (int e : parts) {
    if (e < 2)
      throw InvalidKappa("part " + std::to_string(e) +
                         " is below 2 (pole orders start at 1)");
    top = std::max(top, e);
  }
  PartitionKappa k;
  k.kappa_.assign(static_cast<std::size_t>(top - 1), 0);
  for (int e : parts) ++k.kappa_[e - 2];
  return k;
}

PartitionKappa PartitionKappa::from_multiplicities(std::vector<int> kappa) {
  for (int m : kappa)
    if (m < 0) throw InvalidKappa("negative multiplicity");
  while (!kappa.empty() && kappa.back() == 0) kappa.pop_back();
  if (kappa.empty()) throw InvalidKappa("multiplicity vector is all zero");
  PartitionKappa k;
  k.kappa_ = std::move(kappa);
  return k;
}

PartitionKappa PartitionKappa::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i || i - start > 6)
      throw ParseError("bad partition \"" + text + "\"; expected e.g. 5+3+2");
    parts.push_back(std::stoi(text.substr(start, i - start)));
    if (i == text.size()) break;
    if (text[i] != '+')
      throw ParseError("bad partition \"" + text + "\"; expected e.g. 5+3+2");
    ++i;
  }
  try {
    return from_parts(std::move(parts));
  } catch (const InvalidKappa& e) {
    throw ParseError(e.what());
  }
}

int PartitionKappa::d_plus_2() const noexcept {
  int s = 0;
  for (std::size_t j = 0; j < kappa_.size(); ++j)
    s += static_cast<int>(j + 2) * kappa_[j];
  return s;
}

int PartitionKappa::r_plus_1() const noexcept {
  return std::accumulate(kappa_.begin(), kappa_.end(), 0);
}

std::vector<int> PartitionKappa::parts() const {
  std::vector<int> out;
  for (std::size_t j = kappa_.size(); j-- > 0;)
    for (int c = 0; c < kappa_[j]; ++c) out.push_back(static_cast<int>(j + 2));
  return out;
}

std::string PartitionKappa::to_string() const {
  std::string s;
  for (int e : parts()) {
    if (!s.empty()) s += '+';
    s += std::to_string(e);
  }
  return s;
}

bool PartitionKappa::in_omega(int p) const noexcept {
  for (std::size_t j = 0; j < kappa_.size(); ++j)
    if (kappa_[j] && (j + 1) % static_cast<std::size_t>(p) == 0) return false;
  return true;
}

LambdaStats lambda_stats(const PartitionKappa& kappa) {
  LambdaStats s;
  for (int m : kappa.multiplicities()) {
    if (m >= 1) ++s.lambda1;
    if (m >= 2) ++s.lambda2;
  }
  return s;
}

namespace {

// Partitions of `total` into exactly `count` parts from [2, max_part] passing
// `allowed`, as descending lists in lexicographically increasing order.
// The filter is applied while descending, so dead branches are cut early.
std::vector<PartitionKappa> enumerate(int total, int count, int max_part,
                                      const std::function<bool(int)>& allowed) {
  std::vector<PartitionKappa> out;
  if (count < 1 || total < 2 * count) return out;
  std::vector<int> prefix;
  std::function<void(int, int, int)> rec = [&](int rest, int left, int cap) {
    if (left == 0) {
      if (rest == 0) out.push_back(PartitionKappa::from_parts(prefix));
      return;
    }
    int hi = std::min(cap, rest - 2 * (left - 1));
    for (int e = 2; e <= hi; ++e) {
      if (static_cast<long>(e) * left < rest) continue;  // cannot reach rest
      if (!allowed(e)) continue;
      prefix.push_back(e);
      rec(rest - e, left - 1, e);
      prefix.pop_back();
    }
  };
  rec(total, count, max_part);
  return out;
}

}  // namespace

std::vector<PartitionKappa> enum_omega(int p, int r_plus_1, int d_plus_2) {
  return enumerate(d_plus_2, r_plus_1, d_plus_2,
                   [p](int e) { return e % p != 1; });
}

std::vector<PartitionKappa> enum_theta(int r_plus_1, int d_plus_2) {
  return enumerate(d_plus_2, r_plus_1, d_plus_2, [](int) { return true; });
}

std::vector<PartitionKappa> enum_theta_all(int d_plus_2) {
  std::vector<PartitionKappa> out;
  for (int k = 1; 2 * k <= d_plus_2; ++k) {
    auto part = enum_theta(k, d_plus_2);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<PartitionKappa> enum_mp(int p, int r_plus_1, int d_plus_2) {
  return enumerate(d_plus_2, r_plus_1, p,
                   [p](int e) { return e % p != 1; });
}

BigInt count_omega(int p, int r_plus_1, int d_plus_2) {
  return enum_omega(p, r_plus_1, d_plus_2).size();
}

BigInt count_theta(int r_plus_1, int d_plus_2) {
  return enum_theta(r_plus_1, d_plus_2).size();
}

BigInt count_theta_total(int d_plus_2) {
  return enum_theta_all(d_plus_2).size();
}

BigInt count_mp(int p, int r_plus_1, int d_plus_2) {
  return enum_mp(p, r_plus_1, d_plus_2).size();
}

BigInt count_mp_total(int p, int d_plus_2) {
  BigInt total = 0;
  for (int r = 0; r <= (d_plus_2 - 2) / 2; ++r)
    total += count_mp(p, r + 1, d_plus_2);
  return total;
}

int component_dimension(int p, const PartitionKappa& kappa) {
  int dim = kappa.d() - 1;
  for (int e : kappa.parts()) dim -= (e - 1) / p;
  return dim;
}

GenusPrank genus_and_prank(int p, const PartitionKappa& kappa) {
  GenusPrank out;
  out.twice_genus = BigInt(kappa.d()) * (p - 1);
  out.genus_integral = out.twice_genus % 2 == 0;
  out.genus = out.genus_integral ? BigInt(out.twice_genus / 2) : BigInt(0);
  out.prank = BigInt(kappa.r()) * (p - 1);
  out.ordinary = kappa.is_ordinary();
  return out;
}

}  // namespace ascensus
