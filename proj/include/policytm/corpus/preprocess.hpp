// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace policytm {

struct PreprocessConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> lemma_exceptions;
  // Each phrase is a sequence of >= 2 cleaned, lemmatized tokens.
  std::vector<std::vector<std::string>> phrase_dictionary;
  std::size_t min_token_length = 2;
  bool drop_numeric = true;

  // Bundled English stopwords and irregular-form lemmas.
  static PreprocessConfig standard();

  // Lowercases additions and appends them to the stopword set.
  void add_stopwords(std::span<const std::string> words);

  // Adds a surface -> lemma mapping and closes the exception map so that every
  // lemma maps to itself. Throws ConfigError on cycles.
  void add_lemma_exception(std::string surface, std::string lemma);

  // Normalizes each phrase through the same cleaning and lemmatization that
  // running text receives, so "Supply chains" matches "supply chain".
  // Throws ConfigError when a phrase keeps fewer than two tokens.
  void add_phrases(std::span<const std::string> phrases);

  // Throws ConfigError if an invariant does not hold.
  void validate() const;
};

const std::vector<std::string>& standard_stopwords();
const std::vector<std::string>& default_abbreviations();

// Reads a one-entry-per-line UTF-8 list. '#' starts a comment; blank lines
// are ignored. Throws IngestionError if the file cannot be opened.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

// Splits on '.', '?' or '!' followed by whitespace or end of text, and on
// blank lines. A period closing a word listed in `abbreviations`
// (lowercase, with its trailing period) does not end a sentence.
std::vector<std::string> segment_sentences(
    std::string_view text,
    std::span<const std::string> abbreviations = default_abbreviations());

// Lowercases and splits on every non-alphanumeric byte, then drops tokens
// with digits (if drop_numeric), tokens shorter than min_token_length and
// stopwords.
std::vector<std::string> tokenize_and_clean(std::string_view sentence,
                                            const PreprocessConfig& config);

// Exception-dictionary lookup, else rule-based stripping of plural, -ing and
// -ed endings applied until no rule fires. Idempotent.
std::string lemmatize(std::string_view token, const PreprocessConfig& config);

// Longest-match, left-to-right replacement of dictionary phrases by a single
// underscore-joined term.
std::vector<std::string> merge_phrases(const std::vector<std::string>& tokens,
                                       const PreprocessConfig& config);

// tokenize_and_clean, lemmatize, re-filter lemmas, merge_phrases.
std::vector<std::string> preprocess_sentence(std::string_view sentence,
                                             const PreprocessConfig& config);

}  // namespace policytm
