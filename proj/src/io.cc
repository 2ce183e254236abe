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

#include "wsmc/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace wsmc {

using nlohmann::json;

json instance_to_json(const Instance& instance) {
  json sets = json::array();
  for (const SetRecord& s : instance.sets()) {
    sets.push_back({{"weight", s.weight}, {"items", items_of(s.items)}});
  }
  return {{"items", instance.item_names()},
          {"demands", instance.demands()},
          {"sets", std::move(sets)}};
}

Instance instance_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw IngestError("instance JSON must be an object");
    for (const char* key : {"items", "demands", "sets"}) {
      if (!doc.contains(key)) {
        throw IngestError(std::string("instance JSON lacks \"") + key + "\"");
      }
    }
    auto names = doc.at("items").get<std::vector<std::string>>();
    auto demands = doc.at("demands").get<std::vector<int>>();
    if (names.size() > kMaxItems) {
      throw IngestError("instance has " + std::to_string(names.size()) +
                        " items; at most " + std::to_string(kMaxItems) +
                        " are supported");
    }
    std::vector<SetRecord> sets;
    const json& raw_sets = doc.at("sets");
    if (!raw_sets.is_array()) throw IngestError("\"sets\" must be an array");
    sets.reserve(raw_sets.size());
    for (std::size_t t = 0; t < raw_sets.size(); ++t) {
      const json& entry = raw_sets[t];
      if (!entry.contains("weight") || !entry.at("weight").is_number()) {
        throw IngestError("set " + std::to_string(t) +
                          " lacks a numeric \"weight\"");
      }
      SetRecord record;
      record.weight = entry.at("weight").get<double>();
      for (const json& item : entry.value("items", json::array())) {
        if (!item.is_number_integer() || item.get<long long>() < 0 ||
            item.get<long long>() >= static_cast<long long>(names.size())) {
          throw IngestError("set " + std::to_string(t) +
                            " references an invalid item index");
        }
        record.items |= ItemMask{1} << item.get<std::size_t>();
      }
      sets.push_back(record);
    }
    return Instance(std::move(names), std::move(demands), std::move(sets));
  } catch (const json::exception& e) {
    throw IngestError(std::string("malformed instance JSON: ") + e.what());
  } catch (const ArgumentError& e) {
    throw IngestError(e.what());
  }
}

std::string dump_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance load_instance_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IngestError(path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

void save_instance_json(const Instance& instance,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IngestError("cannot write " + path.string());
  out << dump_instance(instance);
}

namespace {

std::vector<std::string> split_record(const std::string& line,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) {
    throw IngestError("line " + std::to_string(line_no) +
                      ": unterminated quoted field");
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<bool> parse_flag(const std::string& cell) {
  const std::string v = lower(trim(cell));
  if (v == "1" || v == "true" || v == "yes" || v == "y" || v == "t") {
    return true;
  }
  if (v.empty() || v == "0" || v == "false" || v == "no" || v == "n" ||
      v == "f") {
    return false;
  }
  return std::nullopt;
}

std::optional<double> parse_number(const std::string& cell) {
  const std::string v = trim(cell);
  if (v.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) return std::nullopt;
  return value;
}

}  // namespace

Table parse_csv(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_record(line, line_no);
    if (!have_header) {
      for (auto& f : fields) f = trim(f);
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw IngestError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw IngestError("CSV input has no header row");
  return table;
}

Table load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  return parse_csv(in);
}

Instance ingest_tabular(const Table& table,
                        const std::vector<std::string>& item_columns,
                        const std::string& weight_column,
                        const std::vector<int>& demands) {
  auto column_index = [&](const std::string& name) {
    auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw IngestError("unknown column \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - table.header.begin());
  };
  if (item_columns.empty()) throw IngestError("no item columns given");
  if (item_columns.size() > kMaxItems) {
    throw IngestError("at most " + std::to_string(kMaxItems) +
                      " item columns are supported");
  }
  if (demands.size() != item_columns.size()) {
    throw IngestError("expected " + std::to_string(item_columns.size()) +
                      " demands, got " + std::to_string(demands.size()));
  }
  std::vector<std::size_t> item_idx;
  for (const auto& name : item_columns) item_idx.push_back(column_index(name));
  const std::size_t weight_idx = column_index(weight_column);

  std::vector<SetRecord> sets;
  sets.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = "row " + std::to_string(r + 1) + ", column ";
    SetRecord record;
    auto weight = parse_number(row.at(weight_idx));
    if (!weight || !std::isfinite(*weight)) {
      throw IngestError(where + "\"" + weight_column + "\": \"" +
                        row.at(weight_idx) + "\" is not a number");
    }
    if (*weight < 0.0) {
      throw IngestError(where + "\"" + weight_column +
                        "\": weight must be non-negative");
    }
    record.weight = *weight;
    for (std::size_t g = 0; g < item_idx.size(); ++g) {
      auto flag = parse_flag(row.at(item_idx[g]));
      if (!flag) {
        throw IngestError(where + "\"" + item_columns[g] + "\": \"" +
                          row.at(item_idx[g]) + "\" is not a 0/1 value");
      }
      if (*flag) record.items |= ItemMask{1} << g;
    }
    sets.push_back(record);
  }
  try {
    return Instance(item_columns, demands, std::move(sets));
  } catch (const ArgumentError& e) {
    throw IngestError(e.what());
  }
}

}  // namespace wsmc
