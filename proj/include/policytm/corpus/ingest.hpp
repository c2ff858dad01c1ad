// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "policytm/corpus/dtm.hpp"
#include "policytm/corpus/manifest.hpp"
#include "policytm/corpus/preprocess.hpp"

namespace policytm {

struct IngestOptions {
  PreprocessConfig preprocess = PreprocessConfig::standard();
  std::vector<std::string> abbreviations = default_abbreviations();
  // When non-empty, a document is kept only if its raw text contains one of
  // these keywords (case-insensitive substring match).
  std::vector<std::string> keywords;
  // When set, only documents of this sector are kept.
  std::optional<std::string> sector;
};

struct IngestResult {
  DocumentTermMatrix dtm;
  std::size_t documents_read = 0;
  std::size_t documents_kept = 0;
};

bool matches_keywords(std::string_view text, std::span<const std::string> keywords);

// Segments and preprocesses one document; sentences may come back empty.
std::vector<SentenceDocument> preprocess_document(const RawDocument& doc, std::string_view text,
                                                  const IngestOptions& options);

IngestResult ingest_corpus(std::span<const RawDocument> docs, const IngestOptions& options);

}  // namespace policytm
