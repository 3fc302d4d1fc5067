#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coauth/centrality.hpp"
#include "coauth/graph.hpp"

namespace coauth {

struct Point {
  double x;
  double y;
};

/// y = coefficient * x^exponent, fitted by least squares on (ln x, ln y).
/// r_squared is the coefficient of determination of that log-log regression.
struct PowerFit {
  double coefficient = 0.0;
  double exponent = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

struct DegreeFrequency {
  std::uint32_t degree;
  double probability;

  friend bool operator==(const DegreeFrequency&, const DegreeFrequency&) = default;
};

struct SpearmanResult {
  double rho;
  double p_value;  // two-sided, Student t with n-2 degrees of freedom
};

struct NamedSeries {
  std::string name;
  std::vector<double> values;
};

struct CorrelationReport {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rho;
  std::vector<std::vector<bool>> significant_01;  // p < 0.01
  std::size_t n = 0;
};

struct Histogram {
  std::vector<double> bin_edges;  // bins + 1 entries
  std::vector<std::size_t> counts;
  bool normalized = false;

  std::size_t bins() const noexcept { return counts.size(); }
  std::vector<double> probabilities() const;
};

/// Per-vertex ordinal ranks under several orderings, rows sorted by the
/// baseline measure. columns[0] is the baseline; the last column is citations.
struct RankingProfile {
  std::vector<std::string> columns;
  std::vector<AuthorKey> authors;
  std::vector<std::vector<std::size_t>> ranks;  // ranks[row][column]
};

// Needs >= 3 points with strictly positive coordinates (DomainError) and at
// least two distinct x values (RankError).
PowerFit power_fit(std::span<const Point> points);

// p(k) = (#vertices of degree k) / (#vertices) for every k >= 1 that occurs.
// Isolated vertices count in the denominator only. DomainError if there is
// no vertex with an edge.
std::vector<DegreeFrequency> degree_distribution(const CoauthGraph& g);

// 1-based ranks, ties share the average of the positions they span.
std::vector<double> average_ranks(std::span<const double> values);

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys);

CorrelationReport correlation_matrix(std::span<const NamedSeries> series);

// Equal-width bins over [min, max]; the last bin is closed on the right.
// A constant input yields a single bin.
Histogram histogram(std::span<const double> values, std::size_t bins, bool normalized = false);

RankingProfile ranking_profile(const CentralityVector& baseline,
                               std::span<const CentralityVector> others,
                               const std::map<AuthorKey, std::uint64_t>& citations);

struct NamedFit {
  std::string series;
  PowerFit fit;
};

void write_power_fits_csv(std::ostream& out, std::span<const NamedFit> fits);
void write_correlation_csv(std::ostream& out, const CorrelationReport& report);
void write_significance_csv(std::ostream& out, const CorrelationReport& report);
void write_histogram_csv(std::ostream& out, const Histogram& h);
void write_degree_distribution_csv(std::ostream& out, std::span<const DegreeFrequency> dist);
void write_ranking_profile_csv(std::ostream& out, const RankingProfile& profile);

}  // namespace coauth
