// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/corpus/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "policytm/error.hpp"

namespace policytm {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \r\n\t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \r\n\t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const std::vector<std::string>& default_sector_labels() {
  static const std::vector<std::string> labels = {
      "Agriculture and Food", "AYUSH",  "Chemicals",
      "Electronics & IT",     "Health", "Home Affairs",
      "Labour & Commerce",    "MHRD",   "PMO",
      "Power",                "Science & Technology",
      "Social Justice",       "Transport",
      "Urban",
  };
  return labels;
}

std::vector<RawDocument> parse_manifest(std::istream& in,
                                        const std::filesystem::path& base_dir,
                                        const ManifestOptions& options) {
  std::vector<RawDocument> docs;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    auto fields = split_tabs(line);
    for (auto& f : fields) f = trim(f);
    if (docs.empty() && seen.empty() && fields.front() == "id") continue;

    const std::string where = "manifest line " + std::to_string(line_no);
    if (fields.size() < 4 || fields.size() > 5) {
      throw ValidationError(where + ": expected 4 or 5 tab-separated fields, got " +
                            std::to_string(fields.size()));
    }
    RawDocument doc;
    doc.id = fields[0];
    if (doc.id.empty()) throw ValidationError(where + ": empty id");
    if (fields[1].empty()) throw ValidationError(where + ": empty path");
    doc.path = fields[1];
    if (doc.path.is_relative()) doc.path = base_dir / doc.path;
    doc.sector = fields[2];
    if (doc.sector.empty()) throw ValidationError(where + ": empty sector");
    if (!options.any_sector &&
        std::find(options.sector_labels.begin(), options.sector_labels.end(), doc.sector) ==
            options.sector_labels.end()) {
      throw ValidationError(where + ": unknown sector '" + doc.sector + "'");
    }
    const auto date = parse_iso_date(fields[3]);
    if (!date) {
      throw ValidationError(where + ": unparseable date '" + fields[3] +
                            "' (expected YYYY-MM-DD)");
    }
    doc.date = *date;
    if (fields.size() == 5) doc.title = fields[4];
    if (!seen.insert(doc.id).second) {
      throw ValidationError(where + ": duplicate id '" + doc.id + "'");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<RawDocument> load_manifest(const std::filesystem::path& manifest_path,
                                       const ManifestOptions& options) {
  std::ifstream in(manifest_path);
  if (!in) throw IngestionError("cannot open manifest " + manifest_path.string());
  return parse_manifest(in, manifest_path.parent_path(), options);
}

std::string read_document_text(const RawDocument& doc) {
  std::ifstream in(doc.path, std::ios::binary);
  if (!in) {
    throw IngestionError("cannot read document '" + doc.id + "' at " + doc.path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace policytm
