/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Benchmark dataset acquisition: download (or import) a raw interaction
// file, normalize it to the canonical tab-separated edge list, validate
// node/edge counts, and record a sidecar JSON descriptor with the SHA-256,
// source and orientation.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bilink/graph.hpp"

namespace bilink {

struct DatasetSpec {
  std::string name;
  std::vector<std::string> aliases;
  std::vector<std::string> urls;  // empty: no public mirror, import only
  // Expected canonical shape; the converter orients raw columns to match
  // (left column = the partition whose size is n_left) and refuses input
  // whose distinct-label counts fit neither orientation.
  uint32_t n_left = 0;
  uint32_t n_right = 0;
  uint64_t edges = 0;
  std::string left_desc;   // what the left partition represents, when known
  std::string right_desc;
  std::string note;
};

const std::vector<DatasetSpec>& dataset_registry();

/// Canonical-name lookup (case- and separator-insensitive, aliases
/// accepted).  Throws InvalidArgument listing the known names.
const DatasetSpec& resolve_dataset(const std::string& name);

/// Ensures `<dest_dir>/<name>.tsv` (+ `<name>.json` descriptor) exists and
/// is intact, downloading and converting when needed; returns the
/// canonical path.  A valid cached copy short-circuits (checksum
/// verified); a corrupt cache is an error.  `import_file` supplies the raw
/// file locally instead of downloading.
std::filesystem::path fetch_dataset(const std::string& name,
                                    const std::filesystem::path& dest_dir,
                                    const std::filesystem::path& import_file = {});

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace bilink
