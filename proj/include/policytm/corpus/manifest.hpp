// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "policytm/corpus/date.hpp"

namespace policytm {

// One source text listed in a manifest.
struct RawDocument {
  std::string id;
  std::filesystem::path path;
  std::string sector;
  Date date;
  std::string title;
};

// The fourteen policy sectors used to group ministries.
const std::vector<std::string>& default_sector_labels();

struct ManifestOptions {
  // Legal sector labels. Ignored when any_sector is set.
  std::vector<std::string> sector_labels = default_sector_labels();
  bool any_sector = false;
};

// Manifest format: one tab-separated record per line,
//
//   id <TAB> path <TAB> sector <TAB> date [<TAB> title]
//
// Blank lines and lines starting with '#' are skipped, as is an optional
// header line whose first field is literally "id". Relative paths resolve
// against base_dir.
std::vector<RawDocument> parse_manifest(std::istream& in,
                                        const std::filesystem::path& base_dir,
                                        const ManifestOptions& options = {});

// Throws IngestionError if the file is missing, ValidationError on bad records.
std::vector<RawDocument> load_manifest(const std::filesystem::path& manifest_path,
                                       const ManifestOptions& options = {});

std::string read_document_text(const RawDocument& doc);

}  // namespace policytm
