// coauth: coauthorship network analysis from bibliographic exports.
#include <iostream>
#include <utility>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coauth/commands.hpp"

namespace {

std::set<std::string> split_types(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coauthorship network analysis: statistics, centrality, evolution, correlation"};
  app.require_subcommand(1);

  coauth::RunConfig config;
  std::string input;
  std::string output_dir;
  std::string merge_map;
  std::string series;
  std::string doc_types = "Article,Review";
  int start_year = 0;
  bool whole_graph = false;

  const std::pair<const char*, const char*> commands[] = {
      {"stats", "Network summary, edge list and isolated authors"},
      {"centrality", "Degree, closeness, betweenness and PageRank scores with rank tables"},
      {"evolve", "Yearly growth and cumulative time-slice reports"},
      {"correlate", "Spearman correlations between citations and centralities"},
      {"fit", "Power-law fits of growth series and degree distribution"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "Tab-delimited bibliographic export");
    sub->add_option("--output-dir", output_dir, "Directory for CSV outputs")->required();
    sub->add_option("--merge-map", merge_map, "CSV of variant,canonical author names");
    sub->add_option("--doc-types", doc_types, "Comma-separated document types to keep")
        ->capture_default_str();
    sub->add_option("--start-year", start_year, "First year of the cumulative slices");
    sub->add_option("--slices", config.slice_boundaries, "Slice end years, e.g. 1992,1997")
        ->delimiter(',');
    sub->add_option("--damping", config.damping, "PageRank damping factor")->capture_default_str();
    sub->add_option("--tol", config.tol, "PageRank L1 tolerance")->capture_default_str();
    sub->add_option("--max-iter", config.max_iter, "PageRank iteration cap")->capture_default_str();
    sub->add_option("--top-n", config.top_n, "Rows per ranking table")->capture_default_str();
    sub->add_flag("--whole-graph", whole_graph, "Use the whole graph, not the largest component");
    sub->add_option("--series", series, "Pre-tabulated year,papers,authors CSV (fit)");
    sub->add_option("--bins", config.histogram_bins, "Histogram bins")->capture_default_str();
    sub->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return coauth::kExitUsage;
  }

  config.input_path = input;
  config.output_dir = output_dir;
  if (!merge_map.empty()) config.merge_map_path = merge_map;
  if (!series.empty()) config.series_path = series;
  if (start_year != 0) config.start_year = start_year;
  config.allowed_doc_types = split_types(doc_types);
  config.restrict_to_largest = !whole_graph;

  const std::string command = app.get_subcommands().front()->get_name();
  return coauth::run_command(command, config, std::cerr);
}
