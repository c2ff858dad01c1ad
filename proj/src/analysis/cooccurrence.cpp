// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/analysis/cooccurrence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "policytm/error.hpp"

namespace policytm {

std::string_view node_weighting_name(NodeWeighting w) {
  return w == NodeWeighting::kTotalFrequency ? "total_frequency" : "cooccurrence_degree";
}

std::uint64_t CooccurrenceNetwork::edge_weight(const std::string& a, const std::string& b) const {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = edges.find(key);
  return it == edges.end() ? 0 : it->second;
}

CooccurrenceNetwork build_cooccurrence(const DocumentTermMatrix& dtm,
                                       const std::set<std::string>& terms,
                                       NodeWeighting weighting,
                                       std::optional<std::uint64_t> threshold) {
  // Term ids are assigned in sorted order, so iterating the sorted set gives
  // ascending ids and local index i < j implies term i < term j.
  std::vector<TermId> ids;
  std::vector<int> local(dtm.vocab_size(), -1);
  for (const auto& term : terms) {
    const auto id = dtm.vocab().find(term);
    if (!id) throw DomainError("term '" + term + "' is not in the vocabulary");
    local[*id] = static_cast<int>(ids.size());
    ids.push_back(*id);
  }
  const std::size_t n = ids.size();
  std::vector<std::uint64_t> frequency(n, 0), docs(n, 0);
  std::map<std::pair<int, int>, std::uint64_t> pair_counts;
  std::vector<int> present;
  for (const auto& row : dtm.rows()) {
    present.clear();
    for (const auto& tc : row.terms) {
      const int li = local[tc.term];
      if (li < 0) continue;
      present.push_back(li);
      frequency[li] += tc.count;
      ++docs[li];
    }
    for (std::size_t a = 0; a < present.size(); ++a)
      for (std::size_t b = a + 1; b < present.size(); ++b) ++pair_counts[{present[a], present[b]}];
  }

  CooccurrenceNetwork net;
  net.threshold = threshold;
  net.weighting = weighting;
  std::vector<std::uint64_t> degree(n, 0);
  for (const auto& [pair, count] : pair_counts) {
    net.edges.emplace(std::make_pair(dtm.vocab().term(ids[pair.first]), dtm.vocab().term(ids[pair.second])),
                      count);
    degree[pair.first] += count;
    degree[pair.second] += count;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& term = dtm.vocab().term(ids[i]);
    net.doc_frequency[term] = docs[i];
    net.node_weight[term] = weighting == NodeWeighting::kTotalFrequency ? frequency[i] : degree[i];
  }
  return net;
}

Heatmap cooccurrence_heatmap(const CooccurrenceNetwork& network) {
  Heatmap h;
  for (const auto& [term, w] : network.node_weight) h.labels.push_back(term);
  const std::size_t n = h.labels.size();
  h.cells.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    auto df = network.doc_frequency.find(h.labels[i]);
    h.cells[i][i] = df == network.doc_frequency.end() ? 0 : df->second;
  }
  for (const auto& [pair, weight] : network.edges) {
    const auto i = static_cast<std::size_t>(
        std::lower_bound(h.labels.begin(), h.labels.end(), pair.first) - h.labels.begin());
    const auto j = static_cast<std::size_t>(
        std::lower_bound(h.labels.begin(), h.labels.end(), pair.second) - h.labels.begin());
    if (i >= n || j >= n) continue;
    h.cells[i][j] = weight;
    h.cells[j][i] = weight;
  }
  return h;
}

nlohmann::json network_to_json(const CooccurrenceNetwork& network) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [term, w] : network.node_weight) {
    nodes.push_back({{"id", term}, {"weight", w}, {"doc_frequency", network.doc_frequency.at(term)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [pair, w] : network.edges) {
    edges.push_back({{"source", pair.first}, {"target", pair.second}, {"weight", w}});
  }
  return {{"format", "policytm.network"},
          {"version", 1},
          {"threshold", network.threshold ? nlohmann::json(*network.threshold) : nlohmann::json(nullptr)},
          {"node_weighting", node_weighting_name(network.weighting)},
          {"edge_weighting", "sentences_containing_both"},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

CooccurrenceNetwork network_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.network") throw FormatError("not a network document");
    CooccurrenceNetwork net;
    if (!j.at("threshold").is_null()) net.threshold = j.at("threshold").get<std::uint64_t>();
    const auto weighting = j.at("node_weighting").get<std::string>();
    if (weighting == node_weighting_name(NodeWeighting::kTotalFrequency)) {
      net.weighting = NodeWeighting::kTotalFrequency;
    } else if (weighting == node_weighting_name(NodeWeighting::kCooccurrenceDegree)) {
      net.weighting = NodeWeighting::kCooccurrenceDegree;
    } else {
      throw FormatError("unknown node weighting '" + weighting + "'");
    }
    for (const auto& n : j.at("nodes")) {
      const auto id = n.at("id").get<std::string>();
      net.node_weight[id] = n.at("weight").get<std::uint64_t>();
      net.doc_frequency[id] = n.at("doc_frequency").get<std::uint64_t>();
    }
    for (const auto& e : j.at("edges")) {
      auto a = e.at("source").get<std::string>();
      auto b = e.at("target").get<std::string>();
      if (!(a < b)) throw FormatError("edge endpoints must be ordered and distinct");
      net.edges[{std::move(a), std::move(b)}] = e.at("weight").get<std::uint64_t>();
    }
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed network document: ") + e.what());
  }
}

std::string network_nodes_tsv(const CooccurrenceNetwork& network) {
  std::string out = "# node weight: " + std::string(node_weighting_name(network.weighting)) + "\n";
  out += "term\tweight\tdoc_frequency\n";
  for (const auto& [term, w] : network.node_weight) {
    out += term + "\t" + std::to_string(w) + "\t" + std::to_string(network.doc_frequency.at(term)) + "\n";
  }
  return out;
}

std::string network_edges_tsv(const CooccurrenceNetwork& network) {
  std::string out = "source\ttarget\tweight\n";
  for (const auto& [pair, w] : network.edges) {
    out += pair.first + "\t" + pair.second + "\t" + std::to_string(w) + "\n";
  }
  return out;
}

std::string heatmap_to_tsv(const Heatmap& heatmap) {
  std::string out = "# off-diagonal: sentences containing both terms; diagonal: document frequency\n";
  out += "term";
  for (const auto& l : heatmap.labels) out += "\t" + l;
  out += "\n";
  for (std::size_t i = 0; i < heatmap.labels.size(); ++i) {
    out += heatmap.labels[i];
    for (auto v : heatmap.cells[i]) out += "\t" + std::to_string(v);
    out += "\n";
  }
  return out;
}

Heatmap heatmap_from_tsv(std::string_view text) {
  Heatmap h;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  auto split = [](const std::string& s) {
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto tab = s.find('\t', start);
      f.push_back(s.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    return f;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    if (header) {
      h.labels.assign(fields.begin() + 1, fields.end());
      header = false;
      continue;
    }
    if (h.cells.size() >= h.labels.size() || fields.size() != h.labels.size() + 1 ||
        fields[0] != h.labels[h.cells.size()]) {
      throw FormatError("heatmap row does not match the header");
    }
    std::vector<std::uint64_t> row;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), v);
      if (ec != std::errc() || p != fields[i].data() + fields[i].size()) {
        throw FormatError("heatmap cell is not a count: '" + fields[i] + "'");
      }
      row.push_back(v);
    }
    h.cells.push_back(std::move(row));
  }
  if (h.cells.size() != h.labels.size()) throw FormatError("heatmap is not square");
  return h;
}

}  // namespace policytm
