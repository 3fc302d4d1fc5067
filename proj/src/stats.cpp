#include "coauth/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <boost/math/distributions/students_t.hpp>

#include "coauth/csv.hpp"
#include "coauth/error.hpp"
#include "coauth/kernels.hpp"

namespace coauth {

namespace {

// Subtracts the mean in place and returns it.
double center(std::vector<double>& v) {
  const double mean = kernels::sum(v) / static_cast<double>(v.size());
  for (auto& x : v) x -= mean;
  return mean;
}

}  // namespace

PowerFit power_fit(std::span<const Point> points) {
  if (points.size() < 3) throw DomainError("power_fit: need at least 3 points");
  std::vector<double> lx;
  std::vector<double> ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0)) {
      throw DomainError("power_fit: coordinates must be strictly positive");
    }
    lx.push_back(std::log(p.x));
    ly.push_back(std::log(p.y));
  }
  if (std::all_of(points.begin(), points.end(), [&](const Point& p) { return p.x == points[0].x; })) {
    throw RankError("power_fit: all x values are equal");
  }

  const double mean_x = center(lx);
  const double mean_y = center(ly);
  const double sxx = kernels::dot(lx, lx);
  const double sxy = kernels::dot(lx, ly);
  const double syy = kernels::dot(ly, ly);
  const double slope = sxy / sxx;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - slope * lx[i];
    ss_res += r * r;
  }

  PowerFit fit;
  fit.exponent = slope;
  fit.coefficient = std::exp(mean_y - slope * mean_x);
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  fit.n_points = points.size();
  return fit;
}

std::vector<DegreeFrequency> degree_distribution(const CoauthGraph& g) {
  std::map<std::uint32_t, std::size_t> tally;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) ++tally[g.degree(v)];
  }
  if (tally.empty()) throw DomainError("degree_distribution: no vertex has an edge");
  const double n = static_cast<double>(g.vertex_count());
  std::vector<DegreeFrequency> out;
  out.reserve(tally.size());
  for (const auto& [k, count] : tally) out.push_back({k, static_cast<double>(count) / n});
  return out;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i+1 .. j share their mean.
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("spearman: series lengths differ");
  const std::size_t n = xs.size();
  if (n < 3) throw UndefinedCorrelationError("spearman: need at least 3 observations");

  auto rx = average_ranks(xs);
  auto ry = average_ranks(ys);
  center(rx);
  center(ry);
  const double sxx = kernels::dot(rx, rx);
  const double syy = kernels::dot(ry, ry);
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedCorrelationError("spearman: a series has no rank variance");
  }
  const double rho = std::clamp(kernels::dot(rx, ry) / std::sqrt(sxx * syy), -1.0, 1.0);
  if (std::fabs(rho) == 1.0) return {rho, 0.0};

  const double df = static_cast<double>(n - 2);
  const double t = rho * std::sqrt(df / (1.0 - rho * rho));
  const boost::math::students_t dist(df);
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
  return {rho, std::min(1.0, p)};
}

CorrelationReport correlation_matrix(std::span<const NamedSeries> series) {
  if (series.size() < 2) throw DomainError("correlation_matrix: need at least 2 series");
  const std::size_t m = series.size();
  CorrelationReport report;
  report.n = series[0].values.size();
  report.rho.assign(m, std::vector<double>(m, 1.0));
  report.significant_01.assign(m, std::vector<bool>(m, true));
  for (const auto& s : series) report.labels.push_back(s.name);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      SpearmanResult r{};
      try {
        r = spearman(series[i].values, series[j].values);
      } catch (const UndefinedCorrelationError& e) {
        throw UndefinedCorrelationError(series[i].name + " vs " + series[j].name + ": " + e.what());
      } catch (const DomainError& e) {
        throw DomainError(series[i].name + " vs " + series[j].name + ": " + e.what());
      }
      report.rho[i][j] = report.rho[j][i] = r.rho;
      report.significant_01[i][j] = report.significant_01[j][i] = r.p_value < 0.01;
    }
  }
  return report;
}

std::vector<double> Histogram::probabilities() const {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  std::vector<double> p;
  p.reserve(counts.size());
  for (auto c : counts) p.push_back(total == 0.0 ? 0.0 : static_cast<double>(c) / total);
  return p;
}

Histogram histogram(std::span<const double> values, std::size_t bins, bool normalized) {
  if (values.empty()) throw DomainError("histogram: no values");
  if (bins < 1) throw DomainError("histogram: bins must be at least 1");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  Histogram h;
  h.normalized = normalized;
  if (lo == hi) {
    h.bin_edges = {lo, hi};
    h.counts = {values.size()};
    return h;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  h.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i < bins; ++i) h.bin_edges[i] = lo + width * static_cast<double>(i);
  h.bin_edges[bins] = hi;
  h.counts.assign(bins, 0);

  for (double v : values) {
    auto idx = static_cast<std::size_t>(std::min<double>(std::floor((v - lo) / width),
                                                         static_cast<double>(bins - 1)));
    // Snap to the stored edges so membership matches [edge_i, edge_i+1).
    while (idx > 0 && v < h.bin_edges[idx]) --idx;
    while (idx + 1 < bins && v >= h.bin_edges[idx + 1]) ++idx;
    ++h.counts[idx];
  }
  return h;
}

RankingProfile ranking_profile(const CentralityVector& baseline,
                               std::span<const CentralityVector> others,
                               const std::map<AuthorKey, std::uint64_t>& citations) {
  for (const auto& o : others) {
    if (o.keys != baseline.keys) {
      throw DomainError("ranking_profile: " + std::string(measure_name(o.measure)) +
                        " covers a different vertex set than the baseline");
    }
  }
  if (citations.size() != baseline.size()) {
    throw DomainError("ranking_profile: citations cover a different vertex set");
  }
  CentralityVector cited;
  cited.keys = baseline.keys;
  cited.scores.reserve(baseline.size());
  for (const auto& key : baseline.keys) {
    auto it = citations.find(key);
    if (it == citations.end()) {
      throw DomainError("ranking_profile: no citation count for '" + key.str() + "'");
    }
    cited.scores.push_back(static_cast<double>(it->second));
  }

  std::vector<std::vector<std::size_t>> columns;
  RankingProfile profile;
  profile.columns.emplace_back(measure_name(baseline.measure));
  columns.push_back(ordinal_ranks(baseline));
  for (const auto& o : others) {
    profile.columns.emplace_back(measure_name(o.measure));
    columns.push_back(ordinal_ranks(o));
  }
  profile.columns.emplace_back("citations");
  columns.push_back(ordinal_ranks(cited));

  const std::size_t n = baseline.size();
  std::vector<std::size_t> by_rank(n);
  for (std::size_t v = 0; v < n; ++v) by_rank[columns[0][v] - 1] = v;
  for (std::size_t v : by_rank) {
    profile.authors.push_back(baseline.keys[v]);
    std::vector<std::size_t> row;
    row.reserve(columns.size());
    for (const auto& c : columns) row.push_back(c[v]);
    profile.ranks.push_back(std::move(row));
  }
  return profile;
}

void write_power_fits_csv(std::ostream& out, std::span<const NamedFit> fits) {
  out << "series,coefficient,exponent,r_squared,n\n";
  for (const auto& f : fits) {
    out << csv::escape(f.series) << ',' << csv::format_double(f.fit.coefficient) << ','
        << csv::format_double(f.fit.exponent) << ',' << csv::format_double(f.fit.r_squared) << ','
        << f.fit.n_points << '\n';
  }
}

namespace {

template <typename Cell>
void write_matrix(std::ostream& out, const std::vector<std::string>& labels, Cell&& cell) {
  out << "series";
  for (const auto& l : labels) out << ',' << csv::escape(l);
  out << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << csv::escape(labels[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) out << ',' << cell(i, j);
    out << '\n';
  }
}

}  // namespace

void write_correlation_csv(std::ostream& out, const CorrelationReport& report) {
  write_matrix(out, report.labels,
               [&](std::size_t i, std::size_t j) { return csv::format_double(report.rho[i][j]); });
}

void write_significance_csv(std::ostream& out, const CorrelationReport& report) {
  write_matrix(out, report.labels, [&](std::size_t i, std::size_t j) {
    return report.significant_01[i][j] ? '1' : '0';
  });
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    out << csv::format_double(h.bin_edges[i]) << ',' << csv::format_double(h.bin_edges[i + 1])
        << ',' << h.counts[i] << '\n';
  }
}

void write_degree_distribution_csv(std::ostream& out, std::span<const DegreeFrequency> dist) {
  out << "degree,probability\n";
  for (const auto& d : dist) out << d.degree << ',' << csv::format_double(d.probability) << '\n';
}

void write_ranking_profile_csv(std::ostream& out, const RankingProfile& profile) {
  out << "author";
  for (const auto& c : profile.columns) out << ',' << c << "_rank";
  out << '\n';
  for (std::size_t r = 0; r < profile.authors.size(); ++r) {
    out << csv::escape(profile.authors[r].str());
    for (auto rank : profile.ranks[r]) out << ',' << rank;
    out << '\n';
  }
}

}  // namespace coauth
