#include "coauth/evolve.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

#include "coauth/csv.hpp"
#include "coauth/error.hpp"
#include "coauth/graph_metrics.hpp"

namespace coauth {

std::vector<TimeSlice> cumulative_slices(std::span<const BiblioRecord> records, int start_year,
                                         std::span<const int> boundaries) {
  if (boundaries.empty()) throw DomainError("cumulative_slices: no slice boundaries");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (boundaries[i] < start_year) {
      throw DomainError("cumulative_slices: boundary " + std::to_string(boundaries[i]) +
                        " precedes start year " + std::to_string(start_year));
    }
    if (i > 0 && boundaries[i] <= boundaries[i - 1]) {
      throw DomainError("cumulative_slices: boundaries must be strictly increasing");
    }
  }

  std::vector<TimeSlice> slices;
  slices.reserve(boundaries.size());
  std::vector<BiblioRecord> selected;
  for (int end : boundaries) {
    selected.clear();
    for (const auto& r : records) {
      if (r.year >= start_year && r.year <= end) selected.push_back(r);
    }
    TimeSlice slice;
    slice.start_year = start_year;
    slice.end_year = end;
    slice.graph = build_graph(selected);
    slice.records_in_slice = selected.size();
    slices.push_back(std::move(slice));
  }
  return slices;
}

std::size_t count_outside(std::span<const BiblioRecord> records, int first, int last) {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const auto& r) {
    return r.year < first || r.year > last;
  }));
}

SliceReport slice_report(const TimeSlice& slice, unsigned threads) {
  if (slice.graph.vertex_count() == 0) {
    throw DomainError("slice_report: slice " + std::to_string(slice.start_year) + "-" +
                      std::to_string(slice.end_year) + " has no authors");
  }
  SliceReport r;
  r.start_year = slice.start_year;
  r.end_year = slice.end_year;
  r.authors = slice.graph.vertex_count();
  r.papers = slice.records_in_slice;
  r.mean_collaborators = mean_degree(slice.graph);

  const auto largest = largest_component(slice.graph);
  r.largest_size = largest.graph.vertex_count();
  r.largest_ratio = static_cast<double>(r.largest_size) / static_cast<double>(r.authors);
  r.largest_avg_distance = r.largest_size < 2 ? 0.0 : mean_distance(largest.graph, threads);
  return r;
}

std::vector<GrowthRow> growth_series(std::span<const BiblioRecord> records, int start_year,
                                     int end_year) {
  if (start_year > end_year) throw DomainError("growth_series: start year after end year");

  std::vector<const BiblioRecord*> sorted;
  for (const auto& r : records) {
    if (r.year >= start_year && r.year <= end_year) sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BiblioRecord* a, const BiblioRecord* b) { return a->year < b->year; });

  std::vector<GrowthRow> rows;
  std::unordered_set<std::string> seen;
  std::size_t papers = 0;
  auto it = sorted.begin();
  for (int year = start_year; year <= end_year; ++year) {
    for (; it != sorted.end() && (*it)->year == year; ++it) {
      ++papers;
      for (const auto& a : (*it)->authors) seen.insert(a);
    }
    rows.push_back({year, papers, seen.size()});
  }
  return rows;
}

void write_slice_reports_csv(std::ostream& out, std::span<const SliceReport> reports) {
  out << "start,end,authors,papers,mean_collaborators,largest_size,largest_ratio,"
         "largest_avg_distance\n";
  for (const auto& r : reports) {
    out << r.start_year << ',' << r.end_year << ',' << r.authors << ',' << r.papers << ','
        << csv::format_double(r.mean_collaborators) << ',' << r.largest_size << ','
        << csv::format_double(r.largest_ratio) << ','
        << csv::format_double(r.largest_avg_distance) << '\n';
  }
}

void write_growth_csv(std::ostream& out, std::span<const GrowthRow> rows) {
  out << "year,papers,authors\n";
  for (const auto& r : rows) out << r.year << ',' << r.papers << ',' << r.authors << '\n';
}

namespace {

template <typename T>
T parse_field(const std::string& field, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw RowError(line, "expected integer, got '" + field + "'");
  }
  return value;
}

}  // namespace

std::vector<GrowthRow> read_growth_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  std::vector<GrowthRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    csv::chomp(line);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = csv::split_line(line);
    if (header) {
      if (fields != std::vector<std::string>{"year", "papers", "authors"}) {
        throw FormatError("growth series header must be `year,papers,authors`");
      }
      header = false;
      continue;
    }
    if (fields.size() != 3) throw RowError(line_no, "expected 3 fields");
    rows.push_back({parse_field<int>(fields[0], line_no), parse_field<std::size_t>(fields[1], line_no),
                    parse_field<std::size_t>(fields[2], line_no)});
  }
  if (header) throw FormatError("growth series has no header row");
  return rows;
}

}  // namespace coauth
