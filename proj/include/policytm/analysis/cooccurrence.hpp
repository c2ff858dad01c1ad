// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "policytm/corpus/dtm.hpp"

namespace policytm {

enum class NodeWeighting {
  kTotalFrequency,      // occurrences of the term
  kCooccurrenceDegree,  // sum of incident edge weights
};

std::string_view node_weighting_name(NodeWeighting w);

// Undirected network over selected terms. An edge counts the sentence rows
// containing both endpoints; zero-weight edges are absent.
struct CooccurrenceNetwork {
  std::map<std::string, std::uint64_t> node_weight;
  std::map<std::string, std::uint64_t> doc_frequency;
  // Keys are ordered pairs with first < second.
  std::map<std::pair<std::string, std::string>, std::uint64_t> edges;
  std::optional<std::uint64_t> threshold;
  NodeWeighting weighting = NodeWeighting::kTotalFrequency;

  std::uint64_t edge_weight(const std::string& a, const std::string& b) const;

  bool operator==(const CooccurrenceNetwork&) const = default;
};

// Throws DomainError naming the first term missing from the vocabulary.
CooccurrenceNetwork build_cooccurrence(const DocumentTermMatrix& dtm,
                                       const std::set<std::string>& terms,
                                       NodeWeighting weighting = NodeWeighting::kTotalFrequency,
                                       std::optional<std::uint64_t> threshold = std::nullopt);

// Symmetric matrix over the network's terms in lexicographic order.
// Off-diagonal cells hold edge weights; the diagonal holds document frequency.
struct Heatmap {
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint64_t>> cells;

  bool operator==(const Heatmap&) const = default;
};

Heatmap cooccurrence_heatmap(const CooccurrenceNetwork& network);

nlohmann::json network_to_json(const CooccurrenceNetwork& network);
CooccurrenceNetwork network_from_json(const nlohmann::json& j);
std::string network_nodes_tsv(const CooccurrenceNetwork& network);
std::string network_edges_tsv(const CooccurrenceNetwork& network);

std::string heatmap_to_tsv(const Heatmap& heatmap);
Heatmap heatmap_from_tsv(std::string_view text);

}  // namespace policytm
