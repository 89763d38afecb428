// Copyright 2026 The Authors.
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

#include "d2dcache/scenario_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace d2dcache {
namespace {

using nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

template <typename T>
T Get(const json& doc, const char* name) {
  try {
    return Field(doc, name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

const json& SquareRows(const json& doc, const char* name, int n) {
  const json& m = Field(doc, name);
  if (!m.is_array() || static_cast<int>(m.size()) != n) {
    throw ParseError(std::string("'") + name + "' must have " +
                     std::to_string(n) + " rows");
  }
  for (const json& row : m) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(std::string("'") + name + "' rows must have " +
                       std::to_string(n) + " entries");
    }
  }
  return m;
}

json RatesArray(const RateMatrix& rates) {
  json rows = json::array();
  for (int i = 0; i < rates.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < rates.size(); ++j) {
      if (i == j) {
        row.push_back("inf");
      } else {
        row.push_back(rates.finite(i, j));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RateMatrix ParseRates(const json& doc, int n) {
  const json& m = SquareRows(doc, "rates", n);
  RateMatrix rates(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const json& v = m[i][j];
      if (i == j) {
        if (!(v.is_string() && v.get<std::string>() == "inf")) {
          throw ParseError("rate diagonal must be the string \"inf\"");
        }
        continue;
      }
      if (!v.is_number()) {
        throw ParseError("rates[" + std::to_string(i) + "][" +
                         std::to_string(j) +
                         "] must be a number (\"inf\" only on the diagonal)");
      }
      const double r = v.get<double>();
      if (j > i) {
        rates.Set(i, j, r);
      } else if (r != rates.finite(j, i)) {
        throw ParseError("rate matrix is not symmetric at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return rates;
}

}  // namespace

std::string ScenarioToJson(const Scenario& s) {
  json budgets = json::array();
  for (int i = 0; i < s.n_users(); ++i) {
    const auto row = s.budgets().row(i);
    budgets.push_back(std::vector<int>(row.begin(), row.end()));
  }
  json doc;
  doc["n_users"] = s.n_users();
  doc["deadline_s"] = s.deadline_s();
  doc["capacity"] = s.capacity();
  doc["rates"] = RatesArray(s.rates());
  doc["budgets"] = std::move(budgets);
  doc["files"] = {{"popularity", s.library().popularity()},
                  {"thresholds", s.library().thresholds()}};
  return doc.dump(2) + "\n";
}

Scenario ScenarioFromJson(std::string_view text) {
  const json doc = Parse(text);
  const int n = Get<int>(doc, "n_users");
  if (n < 1) throw ParseError("n_users must be >= 1");
  RateMatrix rates = ParseRates(doc, n);
  const json& b = SquareRows(doc, "budgets", n);
  Matrix<int> budgets(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!b[i][j].is_number_integer()) {
        throw ParseError("budgets must be integers");
      }
      budgets(i, j) = b[i][j].get<int>();
    }
  }
  const json& files = Field(doc, "files");
  FileLibrary library(Get<std::vector<double>>(files, "popularity"),
                      Get<std::vector<int>>(files, "thresholds"));
  return Scenario(std::move(rates), std::move(budgets),
                  Get<double>(doc, "deadline_s"), Get<int>(doc, "capacity"),
                  std::move(library));
}

std::string RatesToJson(const RateMatrix& rates) {
  json doc;
  doc["n_users"] = rates.size();
  doc["rates"] = RatesArray(rates);
  return doc.dump(2) + "\n";
}

RateMatrix RatesFromJson(std::string_view text) {
  const json doc = Parse(text);
  const int n = Get<int>(doc, "n_users");
  if (n < 1) throw ParseError("n_users must be >= 1");
  return ParseRates(doc, n);
}

std::string PlacementToJson(const Placement& p,
                            const std::optional<PlacementInfo>& info) {
  json counts = json::array();
  for (int j = 0; j < p.n_users(); ++j) {
    const auto row = p.counts().row(j);
    counts.push_back(std::vector<int>(row.begin(), row.end()));
  }
  json doc;
  doc["n_users"] = p.n_users();
  doc["n_files"] = p.n_files();
  doc["counts"] = std::move(counts);
  if (info) {
    doc["strategy"] = info->strategy;
    doc["value"] = info->value;
  }
  return doc.dump(2) + "\n";
}

Placement PlacementFromJson(std::string_view text) {
  const json doc = Parse(text);
  const int n_users = Get<int>(doc, "n_users");
  const int n_files = Get<int>(doc, "n_files");
  if (n_users < 1 || n_files < 1) {
    throw ParseError("placement dimensions must be positive");
  }
  const json& counts = Field(doc, "counts");
  if (!counts.is_array() || static_cast<int>(counts.size()) != n_users) {
    throw ParseError("'counts' must have n_users rows");
  }
  Placement p(n_users, n_files);
  for (int j = 0; j < n_users; ++j) {
    const json& row = counts[j];
    if (!row.is_array() || static_cast<int>(row.size()) != n_files) {
      throw ParseError("'counts' rows must have n_files entries");
    }
    for (int f = 0; f < n_files; ++f) {
      if (!row[f].is_number_integer()) {
        throw ParseError("segment counts must be integers");
      }
      p(j, f) = row[f].get<int>();
    }
  }
  return p;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

}  // namespace d2dcache
