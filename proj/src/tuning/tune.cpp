// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/tuning/tune.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <thread>

#include "policytm/error.hpp"
#include "policytm/lda/model.hpp"
#include "policytm/numeric.hpp"

namespace policytm {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::size_t MetricCurve::best_k() const {
  if (points.empty()) throw DomainError("best_k: empty curve");
  auto best = points.begin();
  for (auto it = points.begin(); it != points.end(); ++it) {
    const bool better = direction == Direction::kMaximize ? it->second > best->second
                                                          : it->second < best->second;
    if (better) best = it;
  }
  return best->first;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t k) {
  return mix64(mix64(base_seed) ^ (0x632be59bd9b4e019ULL * (static_cast<std::uint64_t>(k) + 1)));
}

Selection select_k(std::span<const MetricCurve> curves) {
  if (curves.empty()) throw DomainError("select_k: no curves");
  std::map<std::size_t, std::vector<Metric>> votes;
  for (const auto& curve : curves) votes[curve.best_k()].push_back(curve.metric);
  Selection selection;
  std::size_t most = 0;
  // std::map iterates ascending, so the first maximum is the smaller K.
  for (const auto& [k, metrics] : votes) {
    if (metrics.size() > most) {
      most = metrics.size();
      selection.k = k;
      selection.agreeing = metrics;
    }
  }
  return selection;
}

TuneReport tune(const DocumentTermMatrix& dtm, KRange range, std::span<const Metric> metrics,
                const FitConfig& base, const TuneOptions& options) {
  if (range.min > range.max) throw ConfigError("empty K range");
  if (range.min < 2) throw ConfigError("K range must start at 2 or above");
  if (range.max > dtm.total_tokens()) {
    throw ConfigError("K range exceeds the corpus token count (" +
                      std::to_string(dtm.total_tokens()) + ")");
  }
  if (metrics.empty()) throw ConfigError("no metrics selected");
  const bool wants_arun = std::find(metrics.begin(), metrics.end(), Metric::kArun2010) != metrics.end();
  if (wants_arun && range.max > dtm.vocab_size()) {
    throw ConfigError("arun2010 needs K <= vocabulary size (" + std::to_string(dtm.vocab_size()) +
                      ")");
  }

  const std::size_t count = range.max - range.min + 1;
  std::vector<std::vector<double>> values(count, std::vector<double>(metrics.size()));
  std::vector<std::uint64_t> seeds(count);
  std::vector<std::exception_ptr> failures(count);

  auto run_one = [&](std::size_t idx) {
    try {
      FitConfig config = base;
      config.num_topics = range.min + idx;
      config.seed = derive_seed(base.seed, config.num_topics);
      seeds[idx] = config.seed;
      const LdaModel model = fit(dtm, config);
      for (std::size_t m = 0; m < metrics.size(); ++m) {
        switch (metrics[m]) {
          case Metric::kGriffiths2004:
            values[idx][m] = metric_griffiths2004(model.loglik_trace);
            break;
          case Metric::kCaoJuan2009:
            values[idx][m] = metric_caojuan2009(model.phi);
            break;
          case Metric::kArun2010:
            values[idx][m] = metric_arun2010(model.phi, model.theta, model.doc_lengths);
            break;
          case Metric::kDeveaud2014:
            values[idx][m] = metric_deveaud2014(model.phi);
            break;
        }
      }
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  TuneReport report;
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    MetricCurve curve{metrics[m], metric_direction(metrics[m]), {}};
    for (std::size_t i = 0; i < count; ++i) curve.points.emplace_back(range.min + i, values[i][m]);
    report.per_metric_best.emplace_back(curve.metric, curve.best_k());
    report.curves.push_back(std::move(curve));
  }
  const Selection selection = select_k(report.curves);
  report.recommended_k = selection.k;
  report.agreeing = selection.agreeing;
  for (std::size_t i = 0; i < count; ++i) report.seeds.emplace_back(range.min + i, seeds[i]);
  return report;
}

nlohmann::json tune_report_to_json(const TuneReport& report) {
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : report.curves) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& [k, v] : c.points) points.push_back({{"k", k}, {"value", v}});
    curves.push_back({{"metric", metric_name(c.metric)},
                      {"direction", direction_name(c.direction)},
                      {"points", std::move(points)}});
  }
  nlohmann::json best = nlohmann::json::object();
  for (const auto& [m, k] : report.per_metric_best) best[std::string(metric_name(m))] = k;
  nlohmann::json agreeing = nlohmann::json::array();
  for (Metric m : report.agreeing) agreeing.push_back(metric_name(m));
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& [k, s] : report.seeds) seeds.push_back({{"k", k}, {"seed", std::to_string(s)}});
  return {{"format", "policytm.tune"},    {"version", kTuneFormatVersion},
          {"curves", std::move(curves)},  {"per_metric_best", std::move(best)},
          {"recommended_k", report.recommended_k}, {"agreeing", std::move(agreeing)},
          {"seeds", std::move(seeds)}};
}

TuneReport tune_report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "policytm.tune") throw FormatError("not a policytm.tune document");
    if (j.at("version").get<int>() != kTuneFormatVersion) throw FormatError("unsupported tune version");
    TuneReport r;
    for (const auto& jc : j.at("curves")) {
      MetricCurve c{parse_metric(jc.at("metric").get<std::string>()), Direction::kMaximize, {}};
      c.direction = metric_direction(c.metric);
      if (jc.at("direction").get<std::string>() != direction_name(c.direction)) {
        throw FormatError("curve direction does not match its metric");
      }
      for (const auto& p : jc.at("points")) {
        c.points.emplace_back(p.at("k").get<std::size_t>(), p.at("value").get<double>());
      }
      r.curves.push_back(std::move(c));
    }
    for (const auto& c : r.curves) {
      r.per_metric_best.emplace_back(
          c.metric, j.at("per_metric_best").at(std::string(metric_name(c.metric))).get<std::size_t>());
    }
    r.recommended_k = j.at("recommended_k").get<std::size_t>();
    for (const auto& m : j.at("agreeing")) r.agreeing.push_back(parse_metric(m.get<std::string>()));
    for (const auto& s : j.at("seeds")) {
      r.seeds.emplace_back(s.at("k").get<std::size_t>(), std::stoull(s.at("seed").get<std::string>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed tune document: ") + e.what());
  }
}

std::string curves_to_tsv(std::span<const MetricCurve> curves) {
  std::string out = "metric\tK\tvalue\tdirection\n";
  for (const auto& c : curves) {
    for (const auto& [k, v] : c.points) {
      out += std::string(metric_name(c.metric)) + "\t" + std::to_string(k) + "\t" +
             format_value(v) + "\t" + std::string(direction_name(c.direction)) + "\n";
    }
  }
  return out;
}

}  // namespace policytm
