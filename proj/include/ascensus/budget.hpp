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

#ifndef ASCENSUS_BUDGET_HPP_
#define ASCENSUS_BUDGET_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>

#include "ascensus/errors.hpp"

namespace ascensus {

/// Caps on exhaustive work. `enumeration_cap` bounds element lists and
/// candidate-polynomial tables; `naive_pairs` bounds the (g, h) pairs the
/// naive census oracle may visit.
struct Budget {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  std::uint64_t naive_pairs = 10'000'000;

  /// Default budget with AS_CENSUS_BUDGET (if set) replacing the
  /// enumeration cap.
  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("AS_CENSUS_BUDGET"); env && *env) {
      try {
        b.enumeration_cap = std::stoull(env);
      } catch (const std::exception&) {
        throw ParseError("AS_CENSUS_BUDGET is not a nonnegative integer: " +
                         std::string(env));
      }
    }
    return b;
  }
};

}  // namespace ascensus

#endif  // ASCENSUS_BUDGET_HPP_
