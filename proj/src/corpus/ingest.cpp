// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/corpus/ingest.hpp"

#include <algorithm>
#include <cctype>

namespace policytm {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
  return out;
}

}  // namespace

bool matches_keywords(std::string_view text, std::span<const std::string> keywords) {
  if (keywords.empty()) return true;
  const std::string haystack = lowercase(text);
  return std::any_of(keywords.begin(), keywords.end(), [&](const std::string& k) {
    return !k.empty() && haystack.find(lowercase(k)) != std::string::npos;
  });
}

std::vector<SentenceDocument> preprocess_document(const RawDocument& doc, std::string_view text,
                                                  const IngestOptions& options) {
  std::vector<SentenceDocument> out;
  const auto sentences = segment_sentences(text, options.abbreviations);
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    out.push_back({doc.id, i, preprocess_sentence(sentences[i], options.preprocess), doc.sector,
                   doc.date});
  }
  return out;
}

IngestResult ingest_corpus(std::span<const RawDocument> docs, const IngestOptions& options) {
  options.preprocess.validate();
  IngestResult result;
  std::vector<SentenceDocument> sentences;
  for (const auto& doc : docs) {
    ++result.documents_read;
    if (options.sector && doc.sector != *options.sector) continue;
    const std::string text = read_document_text(doc);
    if (!matches_keywords(text, options.keywords)) continue;
    ++result.documents_kept;
    auto doc_sentences = preprocess_document(doc, text, options);
    sentences.insert(sentences.end(), std::make_move_iterator(doc_sentences.begin()),
                     std::make_move_iterator(doc_sentences.end()));
  }
  result.dtm = build_dtm(sentences);
  return result;
}

}  // namespace policytm
