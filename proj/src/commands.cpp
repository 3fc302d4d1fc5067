#include "coauth/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <json.hpp>

#include "coauth/centrality.hpp"
#include "coauth/csv.hpp"
#include "coauth/error.hpp"
#include "coauth/evolve.hpp"
#include "coauth/graph.hpp"
#include "coauth/graph_metrics.hpp"
#include "coauth/kernels.hpp"
#include "coauth/stats.hpp"

namespace coauth {

namespace fs = std::filesystem;

namespace {

void validate(const RunConfig& c, bool needs_input) {
  if (needs_input && c.input_path.empty()) throw ConfigError("--input is required");
  if (!c.input_path.empty() && !fs::is_regular_file(c.input_path)) {
    throw ConfigError("input file not found: " + c.input_path.string());
  }
  if (c.merge_map_path && !fs::is_regular_file(*c.merge_map_path)) {
    throw ConfigError("merge map not found: " + c.merge_map_path->string());
  }
  if (c.series_path && !fs::is_regular_file(*c.series_path)) {
    throw ConfigError("series file not found: " + c.series_path->string());
  }
  if (c.output_dir.empty()) throw ConfigError("--output-dir is required");
  if (c.allowed_doc_types.empty()) throw ConfigError("--doc-types must name at least one type");
  if (!(c.damping > 0.0 && c.damping < 1.0)) throw ConfigError("--damping must lie in (0, 1)");
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.max_iter < 1) throw ConfigError("--max-iter must be at least 1");
  if (c.top_n < 1) throw ConfigError("--top-n must be at least 1");
  if (c.histogram_bins < 1) throw ConfigError("--bins must be at least 1");
  for (std::size_t i = 1; i < c.slice_boundaries.size(); ++i) {
    if (c.slice_boundaries[i] <= c.slice_boundaries[i - 1]) {
      throw ConfigError("--slices must be strictly increasing");
    }
  }
  fs::create_directories(c.output_dir);
}

void write_file(const RunConfig& c, const std::string& name,
                const std::function<void(std::ostream&)>& body) {
  csv::write_atomically(c.output_dir / name, body);
}

void write_manifest(const RunConfig& c, const std::string& command, nlohmann::ordered_json extra) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input"] = c.input_path.string();
  j["merge_map"] = c.merge_map_path ? nlohmann::ordered_json(c.merge_map_path->string())
                                    : nlohmann::ordered_json(nullptr);
  j["doc_types"] = c.allowed_doc_types;
  j["damping"] = c.damping;
  j["tol"] = c.tol;
  j["max_iter"] = c.max_iter;
  j["top_n"] = c.top_n;
  j["restrict_to_largest"] = c.restrict_to_largest;
  j["series"] = c.series_path ? nlohmann::ordered_json(c.series_path->string())
                              : nlohmann::ordered_json(nullptr);
  j["bins"] = c.histogram_bins;
  j["simd"] = kernels::active().name;
  for (auto& [key, value] : extra.items()) j[key] = value;
  write_file(c, "run.json", [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

std::pair<int, int> year_range(const std::vector<BiblioRecord>& records) {
  const auto [lo, hi] = std::minmax_element(
      records.begin(), records.end(),
      [](const BiblioRecord& a, const BiblioRecord& b) { return a.year < b.year; });
  return {lo->year, hi->year};
}

// The network the centrality commands work on.
CoauthGraph analysis_graph(const RunConfig& c, const std::vector<BiblioRecord>& records,
                           std::ostream& log) {
  auto g = build_graph(records);
  if (!c.restrict_to_largest) return g;
  auto largest = largest_component(g);
  log << "largest component: " << largest.graph.vertex_count() << " of " << g.vertex_count()
      << " authors\n";
  return std::move(largest.graph);
}

}  // namespace

Corpus load_corpus(const RunConfig& config) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input " + config.input_path.string());
  ParseDiagnostics diag;
  auto parsed = parse_records(in, &diag);

  Corpus corpus;
  corpus.parsed = parsed.size();
  corpus.anonymous_rejected = diag.anonymous_rejected;
  auto kept = filter_documents(parsed, config.allowed_doc_types);
  corpus.dropped_by_type = parsed.size() - kept.size();
  if (kept.empty()) throw CorpusError("no records after filtering");
  auto normalized = normalize_records(kept);

  if (config.merge_map_path) {
    std::ifstream map_in(*config.merge_map_path, std::ios::binary);
    if (!map_in) throw ConfigError("cannot open merge map " + config.merge_map_path->string());
    corpus.records = apply_merge_map(normalized, load_merge_map(map_in));
  } else {
    corpus.records = std::move(normalized);
  }
  return corpus;
}

namespace {

Corpus load_and_report(const RunConfig& c, std::ostream& log) {
  auto corpus = load_corpus(c);
  log << "parsed " << corpus.parsed << " records, kept " << corpus.records.size() << " ("
      << corpus.dropped_by_type << " dropped by document type, " << corpus.anonymous_rejected
      << " anonymous rows rejected)\n";
  return corpus;
}

}  // namespace

void cmd_stats(const RunConfig& config, std::ostream& log) {
  validate(config, true);
  const auto corpus = load_and_report(config, log);
  const auto g = build_graph(corpus.records);
  const auto summary = summary_stats(corpus.records, g, config.threads);

  write_file(config, "summary.csv", [&](std::ostream& out) { write_summary_csv(out, summary); });
  write_file(config, "edges.tsv", [&](std::ostream& out) { write_edge_list(out, g); });
  write_file(config, "isolated.txt", [&](std::ostream& out) { write_isolated_vertices(out, g); });
  write_manifest(config, "stats", {{"records", corpus.records.size()}});
}

void cmd_centrality(const RunConfig& config, std::ostream& log) {
  validate(config, true);
  const auto corpus = load_and_report(config, log);
  const auto g = analysis_graph(config, corpus.records, log);

  const CentralityVector vectors[] = {
      closeness_centrality(g, config.threads),
      betweenness_centrality(g, config.threads),
      degree_centrality(g),
      pagerank(g, {config.damping, config.tol, config.max_iter}),
  };
  for (const auto& cv : vectors) {
    const std::string name(measure_name(cv.measure));
    write_file(config, "centrality_" + name + ".csv",
               [&](std::ostream& out) { write_centrality_csv(out, cv); });
    write_file(config, "rank_" + name + ".csv", [&](std::ostream& out) {
      write_rank_table_csv(out, rank_table(cv, config.top_n));
    });
    write_file(config, "histogram_" + name + ".csv", [&](std::ostream& out) {
      write_histogram_csv(out, histogram(cv.scores, config.histogram_bins));
    });
  }
  write_manifest(config, "centrality", {{"vertices", g.vertex_count()}});
}

void cmd_evolve(const RunConfig& config, std::ostream& log) {
  validate(config, true);
  const auto corpus = load_and_report(config, log);
  const auto [first_year, last_year] = year_range(corpus.records);
  const int start = config.start_year.value_or(first_year);
  const std::vector<int> boundaries =
      config.slice_boundaries.empty() ? std::vector<int>{last_year} : config.slice_boundaries;

  if (const auto outside = count_outside(corpus.records, start, boundaries.back())) {
    log << "warning: " << outside << " records fall outside " << start << "-" << boundaries.back()
        << " and are excluded\n";
  }
  const auto slices = cumulative_slices(corpus.records, start, boundaries);
  std::vector<SliceReport> reports;
  for (const auto& s : slices) reports.push_back(slice_report(s, config.threads));
  const auto growth = growth_series(corpus.records, start, boundaries.back());

  write_file(config, "growth.csv", [&](std::ostream& out) { write_growth_csv(out, growth); });
  write_file(config, "slices.csv",
             [&](std::ostream& out) { write_slice_reports_csv(out, reports); });
  write_manifest(config, "evolve", {{"start_year", start}, {"slices", boundaries}});
}

void cmd_correlate(const RunConfig& config, std::ostream& log) {
  validate(config, true);
  const auto corpus = load_and_report(config, log);
  const auto g = analysis_graph(config, corpus.records, log);

  const auto all_citations = author_citations(corpus.records);
  std::map<AuthorKey, std::uint64_t> citations;
  std::vector<double> citation_series;
  for (const auto& key : g.keys()) {
    const auto count = all_citations.at(key);
    citations.emplace(key, count);
    citation_series.push_back(static_cast<double>(count));
  }

  const auto closeness = closeness_centrality(g, config.threads);
  const auto betweenness = betweenness_centrality(g, config.threads);
  const auto degree = degree_centrality(g);
  const auto pr = pagerank(g, {config.damping, config.tol, config.max_iter});

  const NamedSeries series[] = {{"Citations", citation_series},
                                {"Closeness", closeness.scores},
                                {"Betweenness", betweenness.scores},
                                {"Degree", degree.scores},
                                {"PageRank", pr.scores}};
  const auto report = correlation_matrix(series);
  const CentralityVector others[] = {closeness, betweenness, degree};
  const auto profile = ranking_profile(pr, others, citations);

  write_file(config, "correlation.csv",
             [&](std::ostream& out) { write_correlation_csv(out, report); });
  write_file(config, "correlation_sig.csv",
             [&](std::ostream& out) { write_significance_csv(out, report); });
  write_file(config, "ranking_profile.csv",
             [&](std::ostream& out) { write_ranking_profile_csv(out, profile); });
  write_manifest(config, "correlate", {{"vertices", g.vertex_count()}});
}

void cmd_fit(const RunConfig& config, std::ostream& log) {
  if (config.input_path.empty() && !config.series_path) {
    throw ConfigError("fit needs --input or --series");
  }
  validate(config, false);

  std::vector<GrowthRow> growth;
  std::optional<Corpus> corpus;
  if (!config.input_path.empty()) corpus = load_and_report(config, log);
  if (config.series_path) {
    std::ifstream in(*config.series_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open series " + config.series_path->string());
    growth = read_growth_csv(in);
  } else {
    const auto [first_year, last_year] = year_range(corpus->records);
    growth = growth_series(corpus->records, config.start_year.value_or(first_year), last_year);
  }

  std::vector<Point> papers;
  std::vector<Point> authors;
  for (std::size_t i = 0; i < growth.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    papers.push_back({t, static_cast<double>(growth[i].papers)});
    authors.push_back({t, static_cast<double>(growth[i].authors)});
  }
  std::vector<NamedFit> fits{{"papers", power_fit(papers)}, {"authors", power_fit(authors)}};

  if (corpus) {
    const auto g = analysis_graph(config, corpus->records, log);
    const auto dist = degree_distribution(g);
    write_file(config, "degree_distribution.csv",
               [&](std::ostream& out) { write_degree_distribution_csv(out, dist); });
    if (dist.size() >= 3) {
      std::vector<Point> pts;
      for (const auto& d : dist) pts.push_back({static_cast<double>(d.degree), d.probability});
      fits.push_back({"degree", power_fit(pts)});
    } else {
      log << "note: only " << dist.size() << " distinct degrees, degree fit skipped\n";
    }
  }

  write_file(config, "fits.csv", [&](std::ostream& out) { write_power_fits_csv(out, fits); });
  write_manifest(config, "fit", {{"growth_points", growth.size()}});
}

int run_command(const std::string& name, const RunConfig& config, std::ostream& log) {
  try {
    if (name == "stats") {
      cmd_stats(config, log);
    } else if (name == "centrality") {
      cmd_centrality(config, log);
    } else if (name == "evolve") {
      cmd_evolve(config, log);
    } else if (name == "correlate") {
      cmd_correlate(config, log);
    } else if (name == "fit") {
      cmd_fit(config, log);
    } else {
      log << "error: unknown command '" << name << "'\n";
      return kExitUsage;
    }
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace coauth
