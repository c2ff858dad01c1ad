// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/corpus/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "policytm/error.hpp"

namespace policytm {

namespace {

char to_lower_ascii(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_alnum_ascii(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isalnum(u);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Porter-style consonant test: 'y' is a vowel when it follows a consonant.
bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of vowel-consonant sequences in the stem.
int measure(std::string_view w) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

bool has_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

// Stem endings that in English almost always carried a silent e:
// announc(e), mov(e), judg(e), urg(e), acquir(e), captur(e), releas(e).
bool needs_silent_e(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  const char last = stem[n - 1];
  if (last == 'c' || last == 'v') return true;
  if (ends_with(stem, "dg") || ends_with(stem, "rg") || ends_with(stem, "uir")) return true;
  if (ends_with(stem, "ur") && is_consonant(stem, n - 3)) return true;
  if (last == 's') {
    if (ends_with(stem, "us")) return false;
    return !is_consonant(stem, n - 2) || stem[n - 2] == 'n' || stem[n - 2] == 'r' ||
           stem[n - 2] == 'p';
  }
  return false;
}

// Restores a plausible base form after -ed / -ing removal.
std::string repair_stem(std::string stem) {
  if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz")) {
    stem += 'e';
  } else if (ends_double_consonant(stem)) {
    const char last = stem.back();
    if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
  } else if (measure(stem) == 1 && ends_cvc(stem)) {
    stem += 'e';
  } else if (needs_silent_e(stem)) {
    stem += 'e';
  }
  return stem;
}

// Applies the first matching inflection rule. Returns the input unchanged
// when none applies.
std::string strip_once(const std::string& w) {
  const std::size_t n = w.size();
  if (n > 4 && (ends_with(w, "ies") || ends_with(w, "ied"))) {
    return w.substr(0, n - 3) + "y";
  }
  if (ends_with(w, "sses")) return w.substr(0, n - 2);
  if (n > 4 && (ends_with(w, "xes") || ends_with(w, "ches") || ends_with(w, "shes") ||
                ends_with(w, "zzes"))) {
    return w.substr(0, n - 2);
  }
  if (n > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return w.substr(0, n - 1);
  }
  if (ends_with(w, "eed")) {
    if (n > 3 && measure(std::string_view(w).substr(0, n - 3)) > 0) return w.substr(0, n - 1);
    return w;
  }
  if (n > 2 && ends_with(w, "ed")) {
    const std::string stem = w.substr(0, n - 2);
    if (has_vowel(stem)) return repair_stem(stem);
  }
  if (n > 3 && ends_with(w, "ing")) {
    const std::string stem = w.substr(0, n - 3);
    if (has_vowel(stem) && stem.size() >= 2) return repair_stem(stem);
  }
  return w;
}

}  // namespace

const std::vector<std::string>& standard_stopwords() {
  static const std::vector<std::string> words = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "an",
      "and", "any", "are", "aren", "as", "at", "be", "because", "been", "before",
      "being", "below", "between", "both", "but", "by", "can", "could", "couldn", "did",
      "didn", "do", "does", "doesn", "doing", "don", "down", "during", "each", "etc",
      "even", "ever", "every", "few", "for", "from", "further", "had", "hadn", "has",
      "hasn", "have", "haven", "having", "he", "her", "here", "hers", "herself", "him",
      "himself", "his", "how", "however", "i", "if", "in", "into", "is", "isn",
      "it", "its", "itself", "just", "ll", "may", "me", "might", "more", "most",
      "must", "mustn", "my", "myself", "needn", "no", "nor", "not", "now", "of",
      "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out",
      "over", "own", "per", "re", "same", "shall", "shan", "she", "should", "shouldn",
      "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those", "through", "thus",
      "to", "too", "under", "until", "up", "upon", "us", "ve", "very", "via",
      "was", "wasn", "we", "were", "weren", "what", "when", "where", "whether", "which",
      "while", "who", "whom", "whose", "why", "will", "with", "within", "without",
      "won", "would", "wouldn", "yet", "you", "your", "yours", "yourself",
      "yourselves",
  };
  return words;
}

const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> abbreviations = {
      "capt.", "col.", "dept.", "dr.", "e.g.", "gen.", "govt.", "hon.", "i.e.", "jr.",
      "lt.", "mr.", "mrs.", "ms.", "no.",  "nos.", "prof.", "sh.", "shri.", "smt.",
      "sr.",   "st.",  "u.s.",  "vs.",
  };
  return abbreviations;
}

PreprocessConfig PreprocessConfig::standard() {
  PreprocessConfig config;
  config.stopwords.insert(standard_stopwords().begin(), standard_stopwords().end());
  static const std::pair<const char*, const char*> irregular[] = {
      {"are", "be"},         {"been", "be"},         {"being", "be"},
      {"is", "be"},          {"was", "be"},          {"were", "be"},
      {"did", "do"},         {"does", "do"},         {"done", "do"},
      {"had", "have"},       {"has", "have"},        {"having", "have"},
      {"went", "go"},        {"gone", "go"},         {"goes", "go"},
      {"made", "make"},      {"making", "make"},     {"took", "take"},
      {"taken", "take"},     {"gave", "give"},       {"given", "give"},
      {"children", "child"}, {"men", "man"},         {"women", "woman"},
      {"people", "people"},  {"news", "news"},       {"data", "data"},
      {"series", "series"},  {"species", "species"}, {"viruses", "virus"},
      {"buses", "bus"},      {"statuses", "status"}, {"used", "use"},
      {"using", "use"},      {"during", "during"},   {"morning", "morning"},
      {"evening", "evening"}, {"thing", "thing"},    {"things", "thing"},
      {"hundred", "hundred"}, {"proceed", "proceed"}, {"including", "include"},
      {"provided", "provide"}, {"providing", "provide"}, {"advised", "advise"},
      {"released", "release"}, {"increased", "increase"}, {"increasing", "increase"},
      {"ensured", "ensure"}, {"ensuring", "ensure"},  {"issued", "issue"},
      {"continued", "continue"}, {"produced", "produce"}, {"reduced", "reduce"},
      {"closed", "close"},   {"caused", "cause"},    {"causes", "cause"},
      {"measures", "measure"}, {"diseases", "disease"}, {"purposes", "purpose"},
      {"analyses", "analysis"}, {"crises", "crisis"}, {"lakhs", "lakh"},
      {"postponed", "postpone"}, {"focused", "focus"}, {"focusing", "focus"},
      {"determined", "determine"}, {"examined", "examine"}, {"combined", "combine"},
  };
  for (const auto& [surface, lemma] : irregular) config.add_lemma_exception(surface, lemma);
  return config;
}

void PreprocessConfig::add_stopwords(std::span<const std::string> words) {
  for (const auto& w : words) {
    std::string lower(w);
    std::transform(lower.begin(), lower.end(), lower.begin(), to_lower_ascii);
    if (!lower.empty()) stopwords.insert(std::move(lower));
  }
}

void PreprocessConfig::add_lemma_exception(std::string surface, std::string lemma) {
  std::transform(surface.begin(), surface.end(), surface.begin(), to_lower_ascii);
  std::transform(lemma.begin(), lemma.end(), lemma.begin(), to_lower_ascii);
  if (surface.empty() || lemma.empty()) throw ConfigError("empty lemma exception entry");
  // The lemma of a lemma must be itself.
  auto target = lemma_exceptions.find(lemma);
  if (target != lemma_exceptions.end() && target->second != lemma) {
    lemma = target->second;
  }
  if (lemma == surface) {
    lemma_exceptions[surface] = surface;
    return;
  }
  lemma_exceptions[surface] = lemma;
  lemma_exceptions.try_emplace(lemma, lemma);
  // Earlier entries pointing at `surface` now resolve one step further.
  for (auto& [from, to] : lemma_exceptions) {
    if (to == surface) to = lemma;
  }
  if (lemma_exceptions[lemma] != lemma) {
    throw ConfigError("lemma exception cycle through '" + surface + "'");
  }
}

void PreprocessConfig::add_phrases(std::span<const std::string> phrases) {
  for (const auto& phrase : phrases) {
    std::vector<std::string> tokens;
    for (auto& t : tokenize_and_clean(phrase, *this)) {
      std::string lemma = lemmatize(t, *this);
      if (lemma.size() >= min_token_length && !stopwords.contains(lemma)) {
        tokens.push_back(std::move(lemma));
      }
    }
    if (tokens.size() < 2) {
      throw ConfigError("phrase '" + phrase + "' keeps fewer than two tokens after cleaning");
    }
    if (std::find(phrase_dictionary.begin(), phrase_dictionary.end(), tokens) ==
        phrase_dictionary.end()) {
      phrase_dictionary.push_back(std::move(tokens));
    }
  }
}

void PreprocessConfig::validate() const {
  if (min_token_length < 1) throw ConfigError("min_token_length must be >= 1");
  for (const auto& w : stopwords) {
    if (std::any_of(w.begin(), w.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)); })) {
      throw ConfigError("stopword '" + w + "' is not lowercase");
    }
  }
  for (const auto& phrase : phrase_dictionary) {
    if (phrase.size() < 2) throw ConfigError("phrase with fewer than two tokens");
  }
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open word list " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r\n");
    entries.push_back(line.substr(b, e - b + 1));
  }
  return entries;
}

std::vector<std::string> segment_sentences(std::string_view text,
                                           std::span<const std::string> abbreviations) {
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t from, std::size_t to) {
    while (from < to && is_space(text[from])) ++from;
    while (to > from && is_space(text[to - 1])) --to;
    if (to > from) sentences.emplace_back(text.substr(from, to - from));
  };
  auto is_abbreviation = [&](std::size_t period) {
    std::size_t b = period;
    while (b > 0 && !is_space(text[b - 1])) --b;
    std::string word(text.substr(b, period - b + 1));
    std::transform(word.begin(), word.end(), word.begin(), to_lower_ascii);
    // Drop leading quotes or brackets glued to the word.
    const auto first = word.find_first_not_of("\"'([");
    if (first == std::string::npos) return false;
    word.erase(0, first);
    return std::find(abbreviations.begin(), abbreviations.end(), word) != abbreviations.end();
  };

  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == '.' || c == '?' || c == '!') {
      std::size_t j = i;
      while (j < n && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
      const std::size_t last_delim = j - 1;
      while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' || text[j] == ']')) ++j;
      const bool boundary = j == n || is_space(text[j]);
      const bool abbreviation = j == i + 1 && c == '.' && is_abbreviation(last_delim);
      if (boundary && !abbreviation) {
        emit(start, j);
        start = j;
      }
      i = j;
      continue;
    }
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < n && text[j] != '\n' && is_space(text[j])) ++j;
      if (j < n && text[j] == '\n') {
        emit(start, i);
        start = j + 1;
        i = j + 1;
        continue;
      }
    }
    ++i;
  }
  emit(start, n);
  return sentences;
}

std::vector<std::string> tokenize_and_clean(std::string_view sentence,
                                            const PreprocessConfig& config) {
  std::vector<std::string> tokens;
  std::string current;
  bool has_digit = false;
  auto flush = [&] {
    if (current.empty()) return;
    const bool keep = !(config.drop_numeric && has_digit) &&
                      current.size() >= config.min_token_length &&
                      !config.stopwords.contains(current);
    if (keep) tokens.push_back(current);
    current.clear();
    has_digit = false;
  };
  for (char c : sentence) {
    if (is_alnum_ascii(c)) {
      if (std::isdigit(static_cast<unsigned char>(c))) has_digit = true;
      current.push_back(to_lower_ascii(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string lemmatize(std::string_view token, const PreprocessConfig& config) {
  std::string word(token);
  // Every rule shortens the word, so this terminates.
  while (true) {
    if (auto hit = config.lemma_exceptions.find(word); hit != config.lemma_exceptions.end()) {
      return hit->second;
    }
    std::string next = strip_once(word);
    if (next == word || next.empty()) return word;
    word = std::move(next);
  }
}

std::vector<std::string> merge_phrases(const std::vector<std::string>& tokens,
                                       const PreprocessConfig& config) {
  if (config.phrase_dictionary.empty()) return tokens;
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::vector<std::string>* best = nullptr;
    for (const auto& phrase : config.phrase_dictionary) {
      if (phrase.size() > tokens.size() - i) continue;
      if (best && phrase.size() <= best->size()) continue;
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
        best = &phrase;
      }
    }
    if (!best) {
      out.push_back(tokens[i++]);
      continue;
    }
    std::string joined = (*best)[0];
    for (std::size_t k = 1; k < best->size(); ++k) joined += "_" + (*best)[k];
    out.push_back(std::move(joined));
    i += best->size();
  }
  return out;
}

std::vector<std::string> preprocess_sentence(std::string_view sentence,
                                             const PreprocessConfig& config) {
  std::vector<std::string> lemmas;
  for (const auto& token : tokenize_and_clean(sentence, config)) {
    std::string lemma = lemmatize(token, config);
    if (lemma.size() >= config.min_token_length && !config.stopwords.contains(lemma)) {
      lemmas.push_back(std::move(lemma));
    }
  }
  return merge_phrases(lemmas, config);
}

}  // namespace policytm
