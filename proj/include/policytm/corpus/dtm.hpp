// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/date.hpp"

namespace policytm {

using TermId = std::uint32_t;

// One preprocessed sentence; the unit treated as a document by the model.
struct SentenceDocument {
  std::string source_id;
  std::size_t index = 0;
  std::vector<std::string> tokens;
  std::string sector;
  std::optional<Date> date;
};

// Sorted, duplicate-free term list with a reverse index.
class Vocabulary {
 public:
  Vocabulary() = default;
  // `terms` is sorted and deduplicated on construction.
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  const std::string& term(TermId id) const { return terms_.at(id); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::optional<TermId> find(const std::string& term) const;

  // FNV-1a over the newline-joined terms; identifies a vocabulary in model files.
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId> index_;
};

struct TermCount {
  TermId term;
  std::uint32_t count;
  bool operator==(const TermCount&) const = default;
};

struct DtmRow {
  std::string source_id;
  std::size_t sentence_index = 0;
  std::string sector;
  std::optional<Date> date;
  std::vector<TermCount> terms;  // ascending term id, counts > 0
  std::uint32_t length = 0;      // sum of counts
};

class DocumentTermMatrix {
 public:
  DocumentTermMatrix() = default;
  DocumentTermMatrix(Vocabulary vocab, std::vector<DtmRow> rows, std::size_t skipped_rows);

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<DtmRow>& rows() const { return rows_; }
  const DtmRow& row(std::size_t d) const { return rows_.at(d); }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t skipped_rows() const { return skipped_rows_; }
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::vector<std::uint32_t> doc_lengths() const;

  // Throws ValidationError if row lengths, term ids or ordering are inconsistent.
  void validate() const;

 private:
  Vocabulary vocab_;
  std::vector<DtmRow> rows_;
  std::size_t skipped_rows_ = 0;
  std::uint64_t total_tokens_ = 0;
};

// Vocabulary is the sorted set of all tokens; zero-token sentences are
// dropped and counted. Throws ValidationError("empty corpus after
// preprocessing") when no row survives.
DocumentTermMatrix build_dtm(std::span<const SentenceDocument> docs);

// Keeps the rows accepted by `keep` and re-indexes onto the terms they use.
// The result may be empty.
DocumentTermMatrix select_rows(const DocumentTermMatrix& dtm,
                               const std::function<bool(const DtmRow&)>& keep);

DocumentTermMatrix select_rows(const DocumentTermMatrix& dtm, std::span<const std::size_t> indices);

// Distinct sector labels in first-appearance order.
std::vector<std::string> sectors_of(const DocumentTermMatrix& dtm);

inline constexpr int kDtmFormatVersion = 1;

nlohmann::json dtm_to_json(const DocumentTermMatrix& dtm);
DocumentTermMatrix dtm_from_json(const nlohmann::json& j);

}  // namespace policytm
