#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

/// Network of every paper published in [start_year, end_year].
struct TimeSlice {
  int start_year = 0;
  int end_year = 0;
  CoauthGraph graph;
  std::size_t records_in_slice = 0;
};

struct SliceReport {
  int start_year = 0;
  int end_year = 0;
  std::size_t authors = 0;
  std::size_t papers = 0;
  double mean_collaborators = 0.0;
  std::size_t largest_size = 0;
  double largest_ratio = 0.0;
  double largest_avg_distance = 0.0;  // 0 when the largest component is one vertex
};

struct GrowthRow {
  int year = 0;
  std::size_t papers = 0;   // cumulative
  std::size_t authors = 0;  // cumulative distinct

  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

// One cumulative slice per boundary. `boundaries` must be non-empty, strictly
// increasing and >= start_year (DomainError otherwise).
std::vector<TimeSlice> cumulative_slices(std::span<const BiblioRecord> records, int start_year,
                                         std::span<const int> boundaries);

// Records whose year falls outside [first, last].
std::size_t count_outside(std::span<const BiblioRecord> records, int first, int last);

SliceReport slice_report(const TimeSlice& slice, unsigned threads = 0);

// Cumulative papers and first-seen authors for each year in [start_year, end_year],
// counting records published from start_year on.
std::vector<GrowthRow> growth_series(std::span<const BiblioRecord> records, int start_year,
                                     int end_year);

void write_slice_reports_csv(std::ostream& out, std::span<const SliceReport> reports);
void write_growth_csv(std::ostream& out, std::span<const GrowthRow> rows);
// Reads `year,papers,authors` with a header row.
std::vector<GrowthRow> read_growth_csv(std::istream& in);

}  // namespace coauth
