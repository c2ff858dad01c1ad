// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include "policytm/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "policytm/analysis/cooccurrence.hpp"
#include "policytm/analysis/frequency.hpp"
#include "policytm/analysis/temporal.hpp"
#include "policytm/corpus/ingest.hpp"
#include "policytm/error.hpp"
#include "policytm/lda/model.hpp"
#include "policytm/report/export.hpp"
#include "policytm/report/pipeline.hpp"
#include "policytm/report/topic_table.hpp"
#include "policytm/tuning/tune.hpp"

namespace policytm {

namespace {

namespace fs = std::filesystem;

struct FitFlags {
  CLI::Option* alpha_opt = nullptr;
  double alpha = 0.0;
  double eta = 0.1;
  std::size_t iterations = 2000;
  std::size_t burn_in = 500;
  std::size_t lag = 10;
  std::uint64_t seed = 1;
  bool average = false;

  void add(CLI::App* app) {
    alpha_opt = app->add_option("--alpha", alpha, "Document-topic concentration (default 50/K)");
    app->add_option("--eta", eta, "Topic-word concentration")->capture_default_str();
    app->add_option("--iters", iterations, "Gibbs sweeps")->capture_default_str();
    app->add_option("--burn-in", burn_in, "Sweeps before likelihood sampling")->capture_default_str();
    app->add_option("--lag", lag, "Sweeps between likelihood samples")->capture_default_str();
    app->add_option("--seed", seed, "Base random seed")->capture_default_str();
    app->add_flag("--average", average, "Average phi/theta over samples (labels may switch)");
  }

  FitConfig config(std::size_t k) const {
    FitConfig c;
    c.num_topics = k;
    if (alpha_opt && alpha_opt->count() > 0) c.alpha = alpha;
    c.eta = eta;
    c.iterations = iterations;
    c.burn_in = burn_in;
    c.sample_lag = lag;
    c.seed = seed;
    c.average_samples = average;
    return c;
  }
};

struct IngestFlags {
  std::string manifest;
  std::string stopwords;
  std::string phrases;
  std::vector<std::string> keywords;
  bool any_sector = false;

  void add(CLI::App* app, bool manifest_required) {
    auto* m = app->add_option("--manifest", manifest, "Tab-separated document manifest");
    if (manifest_required) m->required();
    app->add_option("--stopwords", stopwords, "Extra stopword list, one per line");
    app->add_option("--phrases", phrases, "Phrase dictionary, one phrase per line");
    app->add_option("--keywords", keywords, "Keep only documents mentioning one of these")
        ->delimiter(',');
    app->add_flag("--any-sector", any_sector, "Accept sector labels outside the default set");
  }

  IngestResult run(const std::optional<std::string>& sector) const {
    IngestOptions options;
    if (!stopwords.empty()) {
      const auto words = read_word_list(stopwords);
      options.preprocess.add_stopwords(words);
    }
    if (!phrases.empty()) {
      const auto list = read_word_list(phrases);
      options.preprocess.add_phrases(list);
    }
    options.keywords = keywords;
    options.sector = sector;
    ManifestOptions manifest_options;
    manifest_options.any_sector = any_sector;
    const auto docs = load_manifest(manifest, manifest_options);
    return ingest_corpus(docs, options);
  }
};

std::optional<std::string> optional_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

DocumentTermMatrix load_corpus(const std::string& path, const std::optional<std::string>& sector) {
  DocumentTermMatrix dtm = dtm_from_json(load_json(path));
  if (!sector) return dtm;
  DocumentTermMatrix sub =
      select_rows(dtm, [&](const DtmRow& row) { return row.sector == *sector; });
  if (sub.num_rows() == 0) throw ValidationError("no rows for sector '" + *sector + "'");
  return sub;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// Sectors in the default label order first, then any others by appearance.
std::vector<std::string> ordered_sectors(const DocumentTermMatrix& dtm) {
  auto present = sectors_of(dtm);
  std::vector<std::string> out;
  for (const auto& label : default_sector_labels()) {
    if (std::find(present.begin(), present.end(), label) != present.end()) out.push_back(label);
  }
  for (const auto& s : present) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

void write_network_outputs(const fs::path& dir, const DocumentTermMatrix& dtm,
                           std::uint64_t min_count, NodeWeighting weighting) {
  const FrequencyTable freq = term_frequencies(dtm);
  const auto terms = high_frequency_terms(freq, min_count);
  const auto net = build_cooccurrence(dtm, terms, weighting, min_count);
  write_file_atomic(dir / "frequencies.tsv", frequencies_to_tsv(freq));
  save_json(dir / "frequencies.json", frequencies_to_json(freq));
  save_json(dir / "network.json", network_to_json(net));
  write_file_atomic(dir / "network_nodes.tsv", network_nodes_tsv(net));
  write_file_atomic(dir / "network_edges.tsv", network_edges_tsv(net));
  write_file_atomic(dir / "heatmap.tsv", heatmap_to_tsv(cooccurrence_heatmap(net)));
}

void write_temporal_outputs(const fs::path& dir, const TemporalReport& report) {
  save_json(dir / "temporal.json", temporal_report_to_json(report));
  write_file_atomic(dir / "temporal_topics.txt", render_temporal_topics(report));
  write_file_atomic(dir / "series.tsv", frequency_series_to_tsv(report.series));
}

NodeWeighting parse_node_weighting(const std::string& s) {
  if (s == "total") return NodeWeighting::kTotalFrequency;
  if (s == "degree") return NodeWeighting::kCooccurrenceDegree;
  throw ConfigError("--node-weight must be 'total' or 'degree'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic modelling pipeline for dated, sector-labelled policy text", "policytm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // ingest
  IngestFlags ingest_flags;
  std::string ingest_out, ingest_sector;
  auto* ingest = app.add_subcommand("ingest", "Manifest and texts to a document-term matrix");
  ingest_flags.add(ingest, true);
  ingest->add_option("--out", ingest_out, "Output DTM file")->required();
  ingest->add_option("--sector", ingest_sector, "Keep only this sector");

  // tune
  std::string tune_corpus, tune_out, tune_sector, tune_metrics = "griffiths,cao,arun,deveaud";
  std::size_t k_min = 2, k_max = 15;
  unsigned threads = 0;
  FitFlags tune_fit;
  auto* tune_cmd = app.add_subcommand("tune", "Evaluate K-selection metrics over a range of K");
  tune_cmd->add_option("--corpus", tune_corpus, "DTM file")->required();
  tune_cmd->add_option("--out", tune_out, "Output directory")->required();
  tune_cmd->add_option("--k-min", k_min)->capture_default_str();
  tune_cmd->add_option("--k-max", k_max)->capture_default_str();
  tune_cmd->add_option("--metrics", tune_metrics, "Comma-separated: griffiths,cao,arun,deveaud")
      ->capture_default_str();
  tune_cmd->add_option("--sector", tune_sector, "Restrict to one sector");
  tune_cmd->add_option("--threads", threads, "Concurrent fits (0 = all cores)");
  tune_fit.add(tune_cmd);

  // fit
  std::string fit_corpus, fit_out, fit_sector;
  std::size_t fit_k = 0;
  bool with_theta = false;
  FitFlags fit_flags;
  auto* fit_cmd = app.add_subcommand("fit", "Fit one LDA model");
  fit_cmd->add_option("--corpus", fit_corpus, "DTM file")->required();
  fit_cmd->add_option("--k", fit_k, "Number of topics")->required();
  fit_cmd->add_option("--out", fit_out, "Output model file")->required();
  fit_cmd->add_option("--sector", fit_sector, "Restrict to one sector");
  fit_cmd->add_flag("--theta", with_theta, "Store document-topic proportions in the model file");
  fit_flags.add(fit_cmd);

  // topics
  std::string topics_model, topics_out, topics_sector;
  std::size_t top_n = 5;
  auto* topics_cmd = app.add_subcommand("topics", "Ranked topic-term tables from a model");
  topics_cmd->add_option("--model", topics_model, "Model file")->required();
  topics_cmd->add_option("--out", topics_out, "Output directory")->required();
  topics_cmd->add_option("--top", top_n, "Terms per topic")->capture_default_str();
  topics_cmd->add_option("--sector", topics_sector, "Sector label for the table header");

  // cooccur
  std::string co_corpus, co_out, co_sector, node_weight = "total";
  std::uint64_t min_count = kDefaultHighFrequencyThreshold;
  auto* co_cmd = app.add_subcommand("cooccur", "High-frequency co-occurrence network and heatmap");
  co_cmd->add_option("--corpus", co_corpus, "DTM file")->required();
  co_cmd->add_option("--out", co_out, "Output directory")->required();
  co_cmd->add_option("--min-count", min_count, "High-frequency threshold")->capture_default_str();
  co_cmd->add_option("--sector", co_sector, "Restrict to one sector");
  co_cmd->add_option("--node-weight", node_weight, "total | degree")->capture_default_str();

  // temporal
  std::string tm_corpus, tm_out, tm_sector, bucket = "month";
  std::size_t tm_k = 0, tm_top = 5;
  FitFlags tm_fit;
  auto* tm_cmd = app.add_subcommand("temporal", "Per-period fits and term frequency series");
  tm_cmd->add_option("--corpus", tm_corpus, "DTM file")->required();
  tm_cmd->add_option("--out", tm_out, "Output directory")->required();
  tm_cmd->add_option("--k", tm_k, "Topics per period")->required();
  tm_cmd->add_option("--bucket", bucket, "month | week")->capture_default_str();
  tm_cmd->add_option("--top", tm_top, "Terms per topic")->capture_default_str();
  tm_cmd->add_option("--sector", tm_sector, "Restrict to one sector");
  tm_fit.add(tm_cmd);

  // report
  IngestFlags rp_ingest;
  std::string rp_corpus, rp_out, rp_metrics = "griffiths,cao,arun,deveaud", rp_bucket = "month";
  std::vector<std::string> rp_sectors;
  std::size_t rp_k_min = 2, rp_k_max = 15, rp_top = 5;
  std::uint64_t rp_min_count = kDefaultHighFrequencyThreshold;
  unsigned rp_threads = 0;
  FitFlags rp_fit;
  auto* rp_cmd = app.add_subcommand("report", "Tune, fit and tabulate every sector, plus networks and temporal reports");
  rp_ingest.add(rp_cmd, false);
  rp_cmd->add_option("--corpus", rp_corpus, "DTM file (instead of --manifest)");
  rp_cmd->add_option("--out", rp_out, "Output directory")->required();
  rp_cmd->add_option("--sector", rp_sectors, "Sectors to report (repeatable; default all)");
  rp_cmd->add_option("--k-min", rp_k_min)->capture_default_str();
  rp_cmd->add_option("--k-max", rp_k_max)->capture_default_str();
  rp_cmd->add_option("--metrics", rp_metrics)->capture_default_str();
  rp_cmd->add_option("--top", rp_top)->capture_default_str();
  rp_cmd->add_option("--min-count", rp_min_count)->capture_default_str();
  rp_cmd->add_option("--bucket", rp_bucket)->capture_default_str();
  rp_cmd->add_option("--threads", rp_threads, "Concurrent fits (0 = all cores)");
  rp_fit.add(rp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    if (*ingest) {
      const auto result = ingest_flags.run(optional_string(ingest_sector));
      save_json(ingest_out, dtm_to_json(result.dtm));
      out << "ingested " << result.documents_kept << "/" << result.documents_read << " documents, "
          << result.dtm.num_rows() << " sentences (" << result.dtm.skipped_rows()
          << " empty skipped), " << result.dtm.total_tokens() << " tokens, V="
          << result.dtm.vocab_size() << "\n";
    } else if (*tune_cmd) {
      const auto dtm = load_corpus(tune_corpus, optional_string(tune_sector));
      const auto metrics = parse_metric_list(tune_metrics);
      const auto report = tune(dtm, {k_min, k_max}, metrics, tune_fit.config(2), {threads});
      const fs::path dir = tune_out;
      write_file_atomic(dir / "curves.tsv", curves_to_tsv(report.curves));
      save_json(dir / "tune.json", tune_report_to_json(report));
      out << "recommended K=" << report.recommended_k << " (";
      for (std::size_t i = 0; i < report.agreeing.size(); ++i) {
        out << (i ? "; " : "") << metric_label(report.agreeing[i]);
      }
      out << ")\n";
    } else if (*fit_cmd) {
      const auto dtm = load_corpus(fit_corpus, optional_string(fit_sector));
      const auto model = fit(dtm, fit_flags.config(fit_k));
      print_warnings(model.warnings, err);
      save_json(fit_out, model_to_json(model, with_theta));
      out << "fitted K=" << fit_k << " on " << dtm.num_rows() << " sentences\n";
    } else if (*topics_cmd) {
      const auto model = model_from_json(load_json(topics_model));
      const auto report = topic_table(model, top_n, topics_sector);
      const fs::path dir = topics_out;
      const std::string text = render_topic_table(report);
      save_json(dir / "topics.json", topic_report_to_json(report));
      write_file_atomic(dir / "topics.txt", text);
      out << text;
    } else if (*co_cmd) {
      const auto dtm = load_corpus(co_corpus, optional_string(co_sector));
      write_network_outputs(co_out, dtm, min_count, parse_node_weighting(node_weight));
      out << "wrote co-occurrence network to " << co_out << "\n";
    } else if (*tm_cmd) {
      const auto dtm = load_corpus(tm_corpus, optional_string(tm_sector));
      TemporalOptions options;
      options.period = parse_period(bucket);
      options.fit = tm_fit.config(tm_k);
      options.top_n = tm_top;
      const auto report = temporal_analysis(dtm, tm_sector, options);
      for (const auto& b : report.buckets) print_warnings(b.warnings, err);
      write_temporal_outputs(tm_out, report);
      out << "wrote " << report.buckets.size() << " " << period_name(options.period)
          << " bucket reports to " << tm_out << "\n";
    } else if (*rp_cmd) {
      if (rp_ingest.manifest.empty() == rp_corpus.empty()) {
        throw ConfigError("report needs exactly one of --manifest or --corpus");
      }
      const fs::path dir = rp_out;
      DocumentTermMatrix dtm;
      if (!rp_ingest.manifest.empty()) {
        dtm = rp_ingest.run(std::nullopt).dtm;
        save_json(dir / "corpus.dtm.json", dtm_to_json(dtm));
      } else {
        dtm = load_corpus(rp_corpus, std::nullopt);
      }
      const auto metrics = parse_metric_list(rp_metrics);
      const Period period = parse_period(rp_bucket);
      const auto sectors = rp_sectors.empty() ? ordered_sectors(dtm) : rp_sectors;

      std::vector<SectorTuning> summary;
      std::string all_topics;
      nlohmann::json index = nlohmann::json::array();
      for (const auto& sector : sectors) {
        const auto sub = select_rows(dtm, [&](const DtmRow& r) { return r.sector == sector; });
        if (sub.num_rows() == 0) throw ValidationError("no rows for sector '" + sector + "'");
        const fs::path sdir = dir / "sectors" / slugify(sector);

        std::size_t hi = std::min<std::size_t>(rp_k_max, sub.total_tokens());
        if (std::find(metrics.begin(), metrics.end(), Metric::kArun2010) != metrics.end()) {
          hi = std::min(hi, sub.vocab_size());
        }
        if (hi < rp_k_max) {
          err << "warning: " << sector << ": K range capped at " << hi << "\n";
        }
        const FitConfig base = rp_fit.config(2);
        SectorTuning row{sector, sub.num_rows(), sub.total_tokens(), sub.vocab_size(),
                         tune(sub, {rp_k_min, hi}, metrics, base, {rp_threads})};
        write_file_atomic(sdir / "curves.tsv", curves_to_tsv(row.tune.curves));
        save_json(sdir / "tune.json", tune_report_to_json(row.tune));

        // Refit with the tuning seed for the chosen K, reproducing that fit.
        FitConfig chosen = base;
        chosen.num_topics = row.tune.recommended_k;
        chosen.seed = derive_seed(base.seed, chosen.num_topics);
        const auto model = fit(sub, chosen);
        print_warnings(model.warnings, err);
        save_json(sdir / "model.json", model_to_json(model, false));
        const auto topics = topic_table(model, std::min(rp_top, sub.vocab_size()), sector);
        save_json(sdir / "topics.json", topic_report_to_json(topics));
        const std::string text = render_topic_table(topics);
        write_file_atomic(sdir / "topics.txt", text);
        all_topics += text + "\n";
        const auto freq = term_frequencies(sub);
        write_file_atomic(sdir / "frequencies.tsv", frequencies_to_tsv(freq));

        TemporalOptions topts;
        topts.period = period;
        topts.fit = chosen;
        topts.top_n = rp_top;
        const auto temporal = temporal_analysis(sub, sector, topts);
        for (const auto& b : temporal.buckets) print_warnings(b.warnings, err);
        write_temporal_outputs(dir / "temporal" / slugify(sector), temporal);

        index.push_back({{"sector", sector},
                         {"slug", slugify(sector)},
                         {"rows", row.rows},
                         {"tokens", row.tokens},
                         {"vocab_size", row.vocab_size},
                         {"recommended_k", row.tune.recommended_k},
                         {"temporal_buckets", temporal.buckets.size()}});
        out << sector << ": K=" << row.tune.recommended_k << "\n";
        summary.push_back(std::move(row));
      }
      write_file_atomic(dir / "tuning_summary.tsv", render_tuning_summary(summary));
      write_file_atomic(dir / "topics.txt", all_topics);
      write_network_outputs(dir / "cooccurrence", dtm, rp_min_count, NodeWeighting::kTotalFrequency);
      save_json(dir / "report.json", {{"format", "policytm.report"},
                                      {"version", 1},
                                      {"min_count", rp_min_count},
                                      {"period", period_name(period)},
                                      {"top", rp_top},
                                      {"sectors", std::move(index)}});
      out << "wrote report for " << summary.size() << " sectors to " << dir.string() << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace policytm
