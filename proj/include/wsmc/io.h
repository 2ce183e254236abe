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

// Instance serialization and tabular ingestion.
//
// JSON layout:
//   {"items": ["name", ...], "demands": [int, ...],
//    "sets": [{"weight": number, "items": [itemIndex, ...]}, ...]}

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wsmc/instance.h"

namespace wsmc {

nlohmann::json instance_to_json(const Instance& instance);
/// Throws IngestError on schema violations.
Instance instance_from_json(const nlohmann::json& doc);

/// Pretty-printed JSON followed by a newline.
std::string dump_instance(const Instance& instance);

Instance load_instance_json(const std::filesystem::path& path);
void save_instance_json(const Instance& instance,
                        const std::filesystem::path& path);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 style CSV: comma separated, optional double quotes, first line is
/// the header. Throws IngestError on ragged rows or unterminated quotes.
Table parse_csv(std::istream& in);
Table load_csv(const std::filesystem::path& path);

/// One set per row. Item cells accept 0/1 and common truthy/falsy spellings
/// (true/false, yes/no, y/n, t/f, empty = 0). Throws IngestError naming the
/// offending row and column.
Instance ingest_tabular(const Table& table,
                        const std::vector<std::string>& item_columns,
                        const std::string& weight_column,
                        const std::vector<int>& demands);

}  // namespace wsmc
