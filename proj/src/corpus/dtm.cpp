// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/corpus/dtm.hpp"

#include <algorithm>
#include <map>

#include "policytm/error.hpp"
#include "policytm/numeric.hpp"

namespace policytm {

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i], static_cast<TermId>(i));
  }
}

std::optional<TermId> Vocabulary::find(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Vocabulary::fingerprint() const {
  std::uint64_t h = fnv1a64("");
  for (const auto& t : terms_) {
    h = fnv1a64(t, h);
    h = fnv1a64("\n", h);
  }
  return h;
}

DocumentTermMatrix::DocumentTermMatrix(Vocabulary vocab, std::vector<DtmRow> rows,
                                       std::size_t skipped_rows)
    : vocab_(std::move(vocab)), rows_(std::move(rows)), skipped_rows_(skipped_rows) {
  for (const auto& r : rows_) total_tokens_ += r.length;
}

std::vector<std::uint32_t> DocumentTermMatrix::doc_lengths() const {
  std::vector<std::uint32_t> lengths;
  lengths.reserve(rows_.size());
  for (const auto& r : rows_) lengths.push_back(r.length);
  return lengths;
}

void DocumentTermMatrix::validate() const {
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < rows_.size(); ++d) {
    const auto& r = rows_[d];
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      const auto& tc = r.terms[i];
      if (tc.term >= vocab_.size()) {
        throw ValidationError("row " + std::to_string(d) + ": term id out of range");
      }
      if (tc.count == 0) throw ValidationError("row " + std::to_string(d) + ": zero count");
      if (i > 0 && r.terms[i - 1].term >= tc.term) {
        throw ValidationError("row " + std::to_string(d) + ": term ids not ascending");
      }
      sum += tc.count;
    }
    if (sum != r.length) {
      throw ValidationError("row " + std::to_string(d) + ": length does not match counts");
    }
    total += sum;
  }
  if (total != total_tokens_) throw ValidationError("token total mismatch");
}

DocumentTermMatrix build_dtm(std::span<const SentenceDocument> docs) {
  std::vector<std::string> all_terms;
  for (const auto& doc : docs) all_terms.insert(all_terms.end(), doc.tokens.begin(), doc.tokens.end());
  Vocabulary vocab(std::move(all_terms));

  std::vector<DtmRow> rows;
  std::size_t skipped = 0;
  std::uint64_t emitted = 0;
  for (const auto& doc : docs) {
    if (doc.tokens.empty()) {
      ++skipped;
      continue;
    }
    std::map<TermId, std::uint32_t> counts;
    for (const auto& tok : doc.tokens) ++counts[*vocab.find(tok)];
    DtmRow row;
    row.source_id = doc.source_id;
    row.sentence_index = doc.index;
    row.sector = doc.sector;
    row.date = doc.date;
    row.length = static_cast<std::uint32_t>(doc.tokens.size());
    row.terms.reserve(counts.size());
    for (const auto& [term, count] : counts) row.terms.push_back({term, count});
    emitted += doc.tokens.size();
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("empty corpus after preprocessing");
  DocumentTermMatrix dtm(std::move(vocab), std::move(rows), skipped);
  if (dtm.total_tokens() != emitted) throw ValidationError("token total mismatch");
  return dtm;
}

DocumentTermMatrix select_rows(const DocumentTermMatrix& dtm,
                               const std::function<bool(const DtmRow&)>& keep) {
  std::vector<const DtmRow*> kept;
  std::vector<bool> used(dtm.vocab_size(), false);
  for (const auto& r : dtm.rows()) {
    if (!keep(r)) continue;
    kept.push_back(&r);
    for (const auto& tc : r.terms) used[tc.term] = true;
  }
  std::vector<std::string> terms;
  std::vector<TermId> remap(dtm.vocab_size(), 0);
  for (TermId t = 0; t < dtm.vocab_size(); ++t) {
    if (!used[t]) continue;
    remap[t] = static_cast<TermId>(terms.size());
    terms.push_back(dtm.vocab().term(t));
  }
  std::vector<DtmRow> rows;
  rows.reserve(kept.size());
  for (const DtmRow* r : kept) {
    DtmRow copy = *r;
    for (auto& tc : copy.terms) tc.term = remap[tc.term];
    rows.push_back(std::move(copy));
  }
  // Source vocabulary is sorted, so the filtered list already is too.
  return DocumentTermMatrix(Vocabulary(std::move(terms)), std::move(rows), 0);
}

DocumentTermMatrix select_rows(const DocumentTermMatrix& dtm, std::span<const std::size_t> indices) {
  std::vector<bool> wanted(dtm.num_rows(), false);
  for (std::size_t i : indices) wanted.at(i) = true;
  const DtmRow* base = dtm.rows().data();
  return select_rows(dtm, [&](const DtmRow& row) {
    return wanted[static_cast<std::size_t>(&row - base)];
  });
}

std::vector<std::string> sectors_of(const DocumentTermMatrix& dtm) {
  std::vector<std::string> sectors;
  for (const auto& r : dtm.rows()) {
    if (std::find(sectors.begin(), sectors.end(), r.sector) == sectors.end()) {
      sectors.push_back(r.sector);
    }
  }
  return sectors;
}

nlohmann::json dtm_to_json(const DocumentTermMatrix& dtm) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : dtm.rows()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& tc : r.terms) terms.push_back({tc.term, tc.count});
    rows.push_back({
        {"source", r.source_id},
        {"sentence", r.sentence_index},
        {"sector", r.sector},
        {"date", r.date ? nlohmann::json(format_iso_date(*r.date)) : nlohmann::json(nullptr)},
        {"terms", std::move(terms)},
    });
  }
  return {
      {"format", "policytm.dtm"},
      {"version", kDtmFormatVersion},
      {"vocab", dtm.vocab().terms()},
      {"rows", std::move(rows)},
      {"skipped_rows", dtm.skipped_rows()},
      {"total_tokens", dtm.total_tokens()},
  };
}

DocumentTermMatrix dtm_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.dtm") throw FormatError("not a policytm.dtm document");
    if (j.at("version").get<int>() != kDtmFormatVersion) {
      throw FormatError("unsupported dtm version " + j.at("version").dump());
    }
    auto terms = j.at("vocab").get<std::vector<std::string>>();
    if (!std::is_sorted(terms.begin(), terms.end()) ||
        std::adjacent_find(terms.begin(), terms.end()) != terms.end()) {
      throw FormatError("dtm vocabulary is not sorted and unique");
    }
    std::vector<DtmRow> rows;
    for (const auto& jr : j.at("rows")) {
      DtmRow r;
      r.source_id = jr.at("source").get<std::string>();
      r.sentence_index = jr.at("sentence").get<std::size_t>();
      r.sector = jr.at("sector").get<std::string>();
      if (!jr.at("date").is_null()) {
        auto date = parse_iso_date(jr.at("date").get<std::string>());
        if (!date) throw FormatError("bad row date " + jr.at("date").dump());
        r.date = *date;
      }
      for (const auto& tc : jr.at("terms")) {
        r.terms.push_back({tc.at(0).get<TermId>(), tc.at(1).get<std::uint32_t>()});
        r.length += r.terms.back().count;
      }
      rows.push_back(std::move(r));
    }
    DocumentTermMatrix dtm(Vocabulary(std::move(terms)), std::move(rows),
                           j.at("skipped_rows").get<std::size_t>());
    dtm.validate();
    if (j.contains("total_tokens") && j["total_tokens"].get<std::uint64_t>() != dtm.total_tokens()) {
      throw FormatError("dtm total_tokens does not match rows");
    }
    return dtm;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed dtm document: ") + e.what());
  } catch (const ValidationError& e) {
    throw FormatError(std::string("inconsistent dtm document: ") + e.what());
  }
}

}  // namespace policytm
