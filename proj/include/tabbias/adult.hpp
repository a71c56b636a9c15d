// Copyright 2026 The tabbias Authors
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

#pragma once

#include <filesystem>
#include <string_view>

#include "tabbias/schema.hpp"

// UCI Adult census table: raw adult.data -> schema-conformant CSV.

namespace tabbias {

/// Directory holding bundled data files (schemas, toy data).
std::filesystem::path bundled_data_dir();

/// The 14 modelled columns: the 15 raw attributes minus native-country.
TableSchema adult_schema();

/// Parses the raw comma+space separated records. "?" becomes missing; the
/// native-country column is dropped; trailing periods on labels (as in
/// adult.test) are stripped. Blank lines are skipped.
RawTable convert_adult(std::string_view raw_text);

/// Reads `raw_path` and writes the converted CSV to `csv_path`.
/// Returns the number of rows written.
std::size_t convert_adult_file(const std::filesystem::path& raw_path, const std::filesystem::path& csv_path);

}  // namespace tabbias
