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

// Tabular output shared by the CLI: JSON (schema "as-census/1"), RFC 4180
// CSV, and aligned text. Exact integers and fractions are emitted as
// strings so that no consumer rounds them.

#ifndef ASCENSUS_REPORT_HPP_
#define ASCENSUS_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ascensus/census.hpp"
#include "ascensus/densities.hpp"
#include "ascensus/partitions.hpp"

namespace ascensus {

inline constexpr const char* kSchema = "as-census/1";

enum class Format { kJson, kCsv, kPretty };

/// Throws ParseError for anything but json, csv, pretty.
Format parse_format(const std::string& name);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

struct Document {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Table> tables;
  std::vector<std::string> notes;
};

enum class PartitionFamily { kOmega, kTheta, kMp };

/// Throws ParseError for anything but omega, theta, mp.
PartitionFamily parse_family(const std::string& name);
std::string to_string(PartitionFamily family);

/// One row per partition of d + 2 in the family, r = 0..floor(d/2), with
/// r, lambda_1, lambda_2, component dimension, genus, and p-rank. For theta
/// without p, the p-dependent columns are null.
Table partitions_table(PartitionFamily family, std::optional<int> p, int d);

Table census_table(const std::vector<CensusRecord>& records);
Table strata_table(const AggregateCensus& agg);
Table density_table(const DensityTable& table, int precision);
Table convergence_table(const std::vector<ConvergenceRow>& rows,
                        int precision);

/// Fixed-point decimal rendering of an exact rational.
std::string to_decimal(const BigRational& v, int precision);

std::string csv_escape(const std::string& cell);
std::string render(const Document& doc, Format format);

}  // namespace ascensus

#endif  // ASCENSUS_REPORT_HPP_
