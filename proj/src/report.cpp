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

#include "ascensus/report.hpp"

#include <algorithm>
#include <sstream>

#include "ascensus/errors.hpp"

namespace ascensus {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "pretty") return Format::kPretty;
  throw ParseError("unknown format \"" + name + "\" (json|csv|pretty)");
}

PartitionFamily parse_family(const std::string& name) {
  if (name == "omega") return PartitionFamily::kOmega;
  if (name == "theta") return PartitionFamily::kTheta;
  if (name == "mp") return PartitionFamily::kMp;
  throw ParseError("unknown family \"" + name + "\" (omega|theta|mp)");
}

std::string to_string(PartitionFamily family) {
  switch (family) {
    case PartitionFamily::kOmega:
      return "omega";
    case PartitionFamily::kTheta:
      return "theta";
    case PartitionFamily::kMp:
      return "mp";
  }
  return "?";
}

std::string to_decimal(const BigRational& v, int precision) {
  BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), precision);
  // Round half up on the scaled value.
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  std::string digits = scaled.str();
  if (precision > 0) {
    if (static_cast<int>(digits.size()) <= precision)
      digits.insert(0, precision + 1 - digits.size(), '0');
    digits.insert(digits.size() - precision, ".");
  }
  return (negative && scaled != 0 ? "-" : "") + digits;
}

namespace {

ordered_json big(const BigInt& v) { return v.str(); }

ordered_json opt_rational(const std::optional<BigRational>& v,
                          const char* missing) {
  if (!v) return missing;
  return v->str();
}

std::string cell_text(const ordered_json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  return cell.dump();
}

}  // namespace

Table partitions_table(PartitionFamily family, std::optional<int> p, int d) {
  Table t;
  t.name = "partitions";
  t.columns = {"family", "p",         "d",         "r",
               "partition", "lambda1", "lambda2",   "dimension",
               "g",      "tau"};
  for (int r = 0; r <= d / 2; ++r) {
    std::vector<PartitionKappa> parts;
    switch (family) {
      case PartitionFamily::kOmega:
        parts = enum_omega(*p, r + 1, d + 2);
        break;
      case PartitionFamily::kTheta:
        parts = enum_theta(r + 1, d + 2);
        break;
      case PartitionFamily::kMp:
        parts = enum_mp(*p, r + 1, d + 2);
        break;
    }
    for (const auto& k : parts) {
      auto lam = lambda_stats(k);
      std::vector<ordered_json> row{to_string(family),
                                    p ? ordered_json(*p) : ordered_json(),
                                    d,
                                    r,
                                    k.to_string(),
                                    lam.lambda1,
                                    lam.lambda2};
      if (p) {
        auto gp = genus_and_prank(*p, k);
        row.push_back(component_dimension(*p, k));
        row.push_back(gp.genus_integral ? big(gp.genus)
                                        : ordered_json(gp.twice_genus.str() +
                                                       "/2"));
        row.push_back(big(gp.prank));
      } else {
        row.insert(row.end(), 3, ordered_json());
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table census_table(const std::vector<CensusRecord>& records) {
  Table t;
  t.name = "records";
  t.columns = {"q",     "p",     "d",    "kappa",  "count",      "lower",
               "upper", "mode",  "regime", "bound_check", "divisible"};
  for (const auto& rec : records) {
    auto rep = verify_bounds(rec);
    const bool sandwich = rec.bounds.regime == CensusBounds::Regime::kSandwich;
    t.rows.push_back({rec.q, rec.p, rec.d, rec.kappa.to_string(),
                      big(rec.count),
                      opt_rational(rec.bounds.lower,
                                   sandwich ? "vacuous" : "none"),
                      rec.bounds.upper.str(), to_string(rec.mode),
                      sandwich ? "sandwich" : "degenerate",
                      rep.ok ? "ok" : "violated", divisibility_holds(rec)});
  }
  return t;
}

Table strata_table(const AggregateCensus& agg) {
  Table t;
  t.name = "strata";
  t.columns = {"q", "p", "d", "r", "tau", "count", "as_count", "mode"};
  for (const auto& st : agg.strata) {
    t.rows.push_back({agg.q, agg.p, agg.d, st.r, big(st.prank),
                      big(st.count), big(st.as_count), to_string(agg.mode)});
  }
  t.rows.push_back({agg.q, agg.p, agg.d, "total", ordered_json(),
                    big(agg.total), big(agg.as_total), to_string(agg.mode)});
  return t;
}

namespace {

const std::vector<std::string> kRatioColumns = {
    "mode",      "p",         "q",         "d",         "r",
    "g",         "tau",       "ratio_num", "ratio_den", "limit_num",
    "limit_den", "gap_decimal"};

}  // namespace

Table density_table(const DensityTable& table, int precision) {
  Table t;
  t.name = "densities";
  t.columns = kRatioColumns;
  t.columns.push_back("limit_decimal");
  for (const auto& row : table.rows) {
    ordered_json p, g, tau;
    if (table.p) {
      p = *table.p;
      BigInt twice_g = BigInt(table.d) * (*table.p - 1);
      g = twice_g % 2 == 0 ? big(twice_g / 2) : ordered_json(twice_g.str() + "/2");
      tau = big(BigInt(row.r) * (*table.p - 1));
    }
    t.rows.push_back({to_string(table.mode), p, ordered_json(), table.d, row.r,
                      g, tau, ordered_json(), ordered_json(),
                      big(row.density.num), big(row.density.den),
                      ordered_json(),
                      to_decimal(row.density.value(), precision)});
  }
  return t;
}

Table convergence_table(const std::vector<ConvergenceRow>& rows,
                        int precision) {
  Table t;
  t.name = "convergence";
  t.columns = kRatioColumns;
  for (const auto& row : rows) {
    BigRational diff = row.ratio.value() - row.limit.value();
    if (diff < 0) diff = -diff;
    t.rows.push_back(
        {to_string(row.mode), row.p, row.q, row.d, row.r,
         row.genus_integral ? big(row.genus) : ordered_json(),
         big(row.prank), big(row.ratio.num), big(row.ratio.den),
         big(row.limit.num), big(row.limit.den), to_decimal(diff, precision)});
  }
  return t;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string render_json(const Document& doc) {
  ordered_json j;
  j["schema"] = kSchema;
  j["kind"] = doc.kind;
  j["params"] = doc.params;
  for (const auto& t : doc.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        obj[t.columns[i]] = i < row.size() ? row[i] : ordered_json();
      rows.push_back(std::move(obj));
    }
    j[t.name] = std::move(rows);
  }
  j["notes"] = doc.notes;
  return j.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) os << "\r\n";
    first = false;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << "\r\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "")
           << csv_escape(i < row.size() ? cell_text(row[i]) : "");
      }
      os << "\r\n";
    }
  }
  return os.str();
}

std::string render_pretty(const Document& doc) {
  std::ostringstream os;
  os << "# " << doc.kind;
  for (const auto& [k, v] : doc.params.items())
    os << "  " << k << "=" << cell_text(v);
  os << "\n";
  for (const auto& t : doc.tables) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      width[i] = t.columns[i].size();
    std::vector<std::vector<std::string>> text;
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        line.push_back(i < row.size() ? cell_text(row[i]) : "");
        width[i] = std::max(width[i], line.back().size());
      }
      text.push_back(std::move(line));
    }
    os << "\n[" << t.name << "] " << t.rows.size() << " rows\n";
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size())
          os << std::string(width[i] - cells[i].size(), ' ');
      }
      os << "\n";
    };
    emit(t.columns);
    for (const auto& line : text) emit(line);
  }
  for (const auto& note : doc.notes) os << "# note: " << note << "\n";
  return os.str();
}

}  // namespace

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::kJson:
      return render_json(doc);
    case Format::kCsv:
      return render_csv(doc);
    case Format::kPretty:
      return render_pretty(doc);
  }
  return {};
}

}  // namespace ascensus
