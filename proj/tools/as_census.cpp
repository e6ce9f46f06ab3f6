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

// as-census: partitions, densities, convergence tables and censuses of
// admissible Artin-Schreier functions.
//
// Exit codes: 0 success, 1 undefined density or other failure, 2 usage,
// 3 budget exceeded, 4 internal consistency (bound violation or oracle
// mismatch).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ascensus/census.hpp"
#include "ascensus/densities.hpp"
#include "ascensus/errors.hpp"
#include "ascensus/field.hpp"
#include "ascensus/partitions.hpp"
#include "ascensus/report.hpp"

namespace {

using namespace ascensus;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConsistency = 4;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string format = "pretty";
  std::string out;
  unsigned jobs = 1;
  int precision = 6;
  std::uint64_t naive_budget = Budget{}.naive_pairs;

  std::optional<int> p;
  std::optional<int> n;
  std::optional<std::uint64_t> q;
  std::optional<int> d;
  std::string family;
  std::string density_mode;
  std::string kappa;
  std::string census_mode = "constructive";
  std::vector<int> q_exponents;
  std::vector<int> primes;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

int require_prime(const std::optional<int>& v) {
  int p = require(v, "--p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw UsageError("--p " + std::to_string(p) + " is not prime");
  return p;
}

int require_d(const RunConfig& cfg) {
  int d = require(cfg.d, "--d");
  if (d < 1) throw UsageError("--d must be at least 1");
  return d;
}

// Extension degree from --n or --q (q must be a power of p).
int resolve_degree(const RunConfig& cfg, int p) {
  if (cfg.n && cfg.q) throw UsageError("give either --n or --q, not both");
  if (cfg.n) {
    if (*cfg.n < 1) throw UsageError("--n must be at least 1");
    return *cfg.n;
  }
  if (cfg.q) {
    std::uint64_t v = 1;
    for (int n = 1; n <= 64; ++n) {
      if (v > *cfg.q / static_cast<std::uint64_t>(p)) break;
      v *= static_cast<std::uint64_t>(p);
      if (v == *cfg.q) return n;
    }
    throw UsageError("--q " + std::to_string(*cfg.q) + " is not a power of p = " +
                     std::to_string(p));
  }
  return 1;
}

void emit(const RunConfig& cfg, const Document& doc) {
  const auto text = render(doc, parse_format(cfg.format));
  if (cfg.out.empty()) {
    std::cout << text;
    if (cfg.format == "csv")
      for (const auto& note : doc.notes) std::cerr << "note: " << note << "\n";
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error("cannot open --out path " + cfg.out);
  file << text;
}

Budget budget_for(const RunConfig& cfg) {
  Budget b = Budget::from_env();
  b.naive_pairs = cfg.naive_budget;
  return b;
}

int run_partitions(const RunConfig& cfg) {
  const int d = require_d(cfg);
  std::string fam_name = cfg.family.empty() ? (cfg.p ? "omega" : "theta")
                                            : cfg.family;
  const auto family = parse_family(fam_name);
  std::optional<int> p;
  if (family != PartitionFamily::kTheta || cfg.p) p = require_prime(cfg.p);

  Document doc;
  doc.kind = "partitions";
  doc.params["family"] = fam_name;
  doc.params["p"] = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json();
  doc.params["d"] = d;
  doc.tables.push_back(partitions_table(family, p, d));
  if (family == PartitionFamily::kMp && *p == 2 && d % 2 == 1) {
    doc.notes.push_back(
        "M_2(d+2) = 0 for odd d: with p = 2 every part must be 2, so d + 2 "
        "must be even");
  }
  emit(cfg, doc);
  return 0;
}

int run_density(const RunConfig& cfg) {
  const int d = require_d(cfg);
  Document doc;
  doc.kind = "density";
  doc.params["mode"] = cfg.density_mode;
  DensityTable table;
  if (cfg.density_mode == "geometric") {
    const int p = require_prime(cfg.p);
    doc.params["p"] = p;
    doc.params["d"] = d;
    table = geometric_table(p, d);
  } else if (cfg.density_mode == "arithmetic") {
    doc.params["d"] = d;
    table = arithmetic_table(d);
  } else {
    throw UsageError("density mode must be geometric or arithmetic");
  }
  doc.tables.push_back(density_table(table, cfg.precision));
  if (table.expected_speed) {
    Table speed;
    speed.name = "expected_speed";
    speed.columns = {"d", "speed_num", "speed_den", "speed_decimal"};
    speed.rows.push_back({d, table.expected_speed->num.str(),
                          table.expected_speed->den.str(),
                          to_decimal(table.expected_speed->value(),
                                     cfg.precision)});
    doc.tables.push_back(std::move(speed));
  }
  emit(cfg, doc);
  return 0;
}

int run_converge(const RunConfig& cfg) {
  const int d = require_d(cfg);
  const Budget budget = budget_for(cfg);
  Document doc;
  doc.kind = "converge";
  std::vector<ConvergenceRow> rows;
  if (!cfg.q_exponents.empty()) {
    if (!cfg.primes.empty())
      throw UsageError("give either --q-exponents or --primes, not both");
    const int p = require_prime(cfg.p);
    for (int n : cfg.q_exponents)
      if (n < 1) throw UsageError("--q-exponents entries must be >= 1");
    doc.params["mode"] = "geometric";
    doc.params["p"] = p;
    doc.params["d"] = d;
    doc.params["q_exponents"] = cfg.q_exponents;
    rows = empirical_geometric(p, d, cfg.q_exponents, budget, cfg.jobs);
  } else if (!cfg.primes.empty()) {
    for (int p : cfg.primes)
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw UsageError("--primes entry " + std::to_string(p) +
                         " is not prime");
    doc.params["mode"] = "arithmetic";
    doc.params["d"] = d;
    doc.params["primes"] = cfg.primes;
    rows = empirical_arithmetic(d, cfg.primes, budget, cfg.jobs);
  } else {
    throw UsageError("converge needs --q-exponents (with --p) or --primes");
  }
  doc.tables.push_back(convergence_table(rows, cfg.precision));
  emit(cfg, doc);
  return 0;
}

int run_census(const RunConfig& cfg) {
  const int p = require_prime(cfg.p);
  const int n = resolve_degree(cfg, p);
  const int d = require_d(cfg);
  std::vector<CensusMode> modes;
  if (cfg.census_mode == "constructive") {
    modes = {CensusMode::kConstructive};
  } else if (cfg.census_mode == "naive") {
    modes = {CensusMode::kNaive};
  } else if (cfg.census_mode == "both") {
    modes = {CensusMode::kConstructive, CensusMode::kNaive};
  } else {
    throw UsageError("--mode must be constructive, naive, or both");
  }
  const Budget budget = budget_for(cfg);
  auto field = GaloisField::make(static_cast<std::uint32_t>(p),
                                 static_cast<std::uint32_t>(n));

  Document doc;
  doc.kind = "census";
  doc.params["p"] = p;
  doc.params["n"] = n;
  doc.params["q"] = field->order();
  doc.params["d"] = d;
  doc.params["mode"] = cfg.census_mode;

  std::vector<CensusRecord> records;
  std::vector<AggregateCensus> aggregates;
  if (!cfg.kappa.empty()) {
    auto kappa = PartitionKappa::parse(cfg.kappa);
    validate_kappa(kappa, d);
    doc.params["kappa"] = kappa.to_string();
    for (auto mode : modes) records.push_back(census(field, kappa, mode, budget));
  } else {
    for (auto mode : modes) aggregates.push_back(aggregate(field, d, mode, budget, cfg.jobs));
    // Interleave modes per kappa so paired rows sit together.
    for (std::size_t i = 0; i < aggregates.front().records.size(); ++i)
      for (const auto& agg : aggregates) records.push_back(agg.records[i]);
  }

  doc.tables.push_back(census_table(records));
  for (const auto& agg : aggregates) {
    auto t = strata_table(agg);
    t.name = "strata_" + to_string(agg.mode);
    doc.tables.push_back(std::move(t));
  }
  if (p == 2 && d % 2 == 1) {
    doc.notes.push_back("M_2(d+2) = 0 for p = 2 and odd d, so the geometric "
                        "limit density is undefined");
  }

  int status = 0;
  std::string problem;
  for (const auto& rec : records) {
    auto rep = verify_bounds(rec);
    if (!rep.ok) {
      status = kExitConsistency;
      problem = "bound violation: " + rep.detail;
    }
    if (!divisibility_holds(rec)) {
      status = kExitConsistency;
      problem = "divisibility failure for kappa " + rec.kappa.to_string();
    }
  }
  if (modes.size() == 2) {
    for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
      if (records[i].count != records[i + 1].count) {
        status = kExitConsistency;
        problem = "oracle mismatch for kappa " + records[i].kappa.to_string() +
                  ": constructive " + records[i].count.str() + " vs naive " +
                  records[i + 1].count.str();
      }
    }
  }
  if (status) doc.notes.push_back(problem);
  emit(cfg, doc);
  if (status) std::cerr << "as-census: " << problem << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-rank statistics for Artin-Schreier covers"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
    sub->add_option("--precision", cfg.precision, "digits for decimal columns")
        ->check(CLI::Range(0, 60));
  };

  auto* partitions = app.add_subcommand("partitions", "list partitions of d+2");
  partitions->add_option("--p", cfg.p, "prime");
  partitions->add_option("--d", cfg.d, "d, with genus d(p-1)/2")->required();
  partitions->add_option("--family", cfg.family, "omega | theta | mp")
      ->check(CLI::IsMember({"omega", "theta", "mp"}));
  add_common(partitions);

  auto* density = app.add_subcommand("density", "limiting p-rank densities");
  density->add_option("mode", cfg.density_mode, "geometric | arithmetic")
      ->required()
      ->check(CLI::IsMember({"geometric", "arithmetic"}));
  density->add_option("--p", cfg.p, "prime (geometric)");
  density->add_option("--d", cfg.d, "d")->required();
  add_common(density);

  auto* converge = app.add_subcommand("converge", "finite-field ratios vs limits");
  converge->add_option("--p", cfg.p, "prime (geometric)");
  converge->add_option("--d", cfg.d, "d")->required();
  converge->add_option("--q-exponents", cfg.q_exponents, "e.g. 1,2,3")
      ->delimiter(',');
  converge->add_option("--primes", cfg.primes, "e.g. 3,5,7")->delimiter(',');
  converge->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::Range(1u, 256u));
  converge->add_option("--naive-budget", cfg.naive_budget);
  add_common(converge);

  auto* census_cmd = app.add_subcommand("census", "exact counts of admissible functions");
  census_cmd->add_option("--p", cfg.p, "prime")->required();
  census_cmd->add_option("--n", cfg.n, "extension degree, q = p^n");
  census_cmd->add_option("--q", cfg.q, "field size, a power of p");
  census_cmd->add_option("--d", cfg.d, "d")->required();
  census_cmd->add_option("--kappa", cfg.kappa, "single partition, e.g. 5+3+2");
  census_cmd->add_option("--mode", cfg.census_mode, "constructive | naive | both")
      ->check(CLI::IsMember({"constructive", "naive", "both"}));
  census_cmd->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::Range(1u, 256u));
  census_cmd->add_option("--naive-budget", cfg.naive_budget,
                         "max (g, h) pairs for the naive oracle");
  add_common(census_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*partitions) return run_partitions(cfg);
    if (*density) return run_density(cfg);
    if (*converge) return run_converge(cfg);
    if (*census_cmd) return run_census(cfg);
  } catch (const UsageError& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidPrime& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidDegree& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidKappa& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "as-census: budget exceeded (" << e.parameter()
              << "): " << e.what() << "\n";
    return kExitBudget;
  } catch (const BoundViolation& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const OracleMismatch& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const ConsistencyError& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const UndefinedDensity& e) {
    std::cerr << "as-census: " << e.what()
              << " (the geometric limit needs d even when p = 2)\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "as-census: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
