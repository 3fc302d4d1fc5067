#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coauth/ingest.hpp"

namespace coauth {

struct RunConfig {
  std::filesystem::path input_path;
  std::optional<std::filesystem::path> merge_map_path;
  std::set<std::string> allowed_doc_types{"Article", "Review"};
  std::optional<int> start_year;   // default: earliest year in the corpus
  std::vector<int> slice_boundaries;  // default: one slice ending at the latest year
  double damping = 0.85;
  double tol = 1e-12;
  int max_iter = 1000;
  std::size_t top_n = 30;
  bool restrict_to_largest = true;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> series_path;  // fit: pre-tabulated year,papers,authors
  std::size_t histogram_bins = 20;
  unsigned threads = 0;  // 0 = hardware concurrency; never changes results
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitConvergence = 3 };

// Parsed, filtered, normalized and merged input.
struct Corpus {
  std::vector<BiblioRecord> records;
  std::size_t parsed = 0;
  std::size_t anonymous_rejected = 0;
  std::size_t dropped_by_type = 0;
};

Corpus load_corpus(const RunConfig& config);

// Each command writes its CSV outputs plus run.json into config.output_dir
// and reports progress lines on `log`. Errors propagate as exceptions.
void cmd_stats(const RunConfig& config, std::ostream& log);
void cmd_centrality(const RunConfig& config, std::ostream& log);
void cmd_evolve(const RunConfig& config, std::ostream& log);
void cmd_correlate(const RunConfig& config, std::ostream& log);
void cmd_fit(const RunConfig& config, std::ostream& log);

// Runs the named command and converts failures into exit codes
// (1 usage/config, 2 data, 3 convergence), printing the message on `log`.
int run_command(const std::string& name, const RunConfig& config, std::ostream& log);

}  // namespace coauth
