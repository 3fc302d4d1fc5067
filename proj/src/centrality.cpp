#include "coauth/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "bfs.hpp"
#include "coauth/csv.hpp"
#include "coauth/error.hpp"
#include "coauth/kernels.hpp"
#include "coauth/parallel.hpp"

namespace coauth {

namespace {

constexpr std::size_t kSourceBlock = 32;

CentralityVector blank(const CoauthGraph& g, Measure m) {
  CentralityVector cv;
  cv.measure = m;
  cv.keys.assign(g.keys().begin(), g.keys().end());
  cv.scores.assign(g.vertex_count(), 0.0);
  return cv;
}

// Single-source Brandes pass: adds the pair dependencies of `source` into `acc`.
struct BrandesPass {
  detail::BfsScratch bfs;
  std::vector<double> sigma;
  std::vector<double> delta;

  explicit BrandesPass(std::size_t n) : bfs(n), sigma(n, 0.0), delta(n, 0.0) {}

  void run(const CoauthGraph& g, VertexId source, std::vector<double>& acc) {
    for (VertexId v : bfs.order) {
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    bfs.run(g, source);
    sigma[source] = 1.0;
    for (VertexId v : bfs.order) {
      const auto next = bfs.dist[v] + 1;
      for (VertexId w : g.neighbors(v)) {
        if (bfs.dist[w] == next) sigma[w] += sigma[v];
      }
    }
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
      const VertexId w = *it;
      const auto prev = bfs.dist[w] - 1;
      const double share = (1.0 + delta[w]) / sigma[w];
      for (VertexId v : g.neighbors(w)) {
        if (bfs.dist[v] == prev) delta[v] += sigma[v] * share;
      }
      if (w != source) acc[w] += delta[w];
    }
  }
};

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::pagerank: return "pagerank";
  }
  return "unknown";
}

CentralityVector degree_centrality(const CoauthGraph& g) {
  auto cv = blank(g, Measure::degree);
  for (VertexId v = 0; v < g.vertex_count(); ++v) cv.scores[v] = g.degree(v);
  return cv;
}

CentralityVector closeness_centrality(const CoauthGraph& g, unsigned threads) {
  auto cv = blank(g, Measure::closeness);
  const std::size_t n = g.vertex_count();
  const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    detail::BfsScratch bfs(n);
    for (std::size_t s = b * kSourceBlock; s < std::min(n, (b + 1) * kSourceBlock); ++s) {
      bfs.run(g, static_cast<VertexId>(s));
      double total = 0.0;
      for (std::size_t i = 1; i < bfs.order.size(); ++i) {
        total += 1.0 / static_cast<double>(bfs.dist[bfs.order[i]]);
      }
      cv.scores[s] = total;
    }
  });
  return cv;
}

CentralityVector betweenness_centrality(const CoauthGraph& g, unsigned threads) {
  auto cv = blank(g, Measure::betweenness);
  const std::size_t n = g.vertex_count();
  const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
  const std::size_t wave = std::max<std::size_t>(1, resolve_threads(threads)) * 2;

  std::vector<std::vector<double>> partial;
  for (std::size_t first = 0; first < blocks; first += wave) {
    const std::size_t count = std::min(wave, blocks - first);
    partial.resize(count);
    parallel_for(count, threads, [&](std::size_t j) {
      const std::size_t b = first + j;
      auto& acc = partial[j];
      acc.assign(n, 0.0);
      BrandesPass pass(n);
      for (std::size_t s = b * kSourceBlock; s < std::min(n, (b + 1) * kSourceBlock); ++s) {
        pass.run(g, static_cast<VertexId>(s), acc);
      }
    });
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t v = 0; v < n; ++v) cv.scores[v] += partial[j][v];
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (auto& s : cv.scores) s *= 0.5;
  return cv;
}

CentralityVector pagerank(const CoauthGraph& g, const PageRankOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("pagerank: graph has no vertices");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw DomainError("pagerank: damping must lie in (0, 1)");
  }
  if (!(options.tol > 0.0)) throw DomainError("pagerank: tol must be positive");
  if (options.max_iter < 1) throw DomainError("pagerank: max_iter must be at least 1");

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> inv_degree(n);
  std::vector<VertexId> dangling;
  for (VertexId v = 0; v < n; ++v) {
    const auto k = g.degree(v);
    inv_degree[v] = k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
    if (k == 0) dangling.push_back(v);
  }

  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);
  std::vector<double> share(n);
  double residual = 0.0;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    kernels::multiply(rank, inv_degree, share);
    const double dangling_mass = kernels::gather_sum(rank, dangling);
    const double base = (1.0 - d) * inv_n + d * dangling_mass * inv_n;
    for (VertexId v = 0; v < n; ++v) {
      next[v] = base + d * kernels::gather_sum(share, g.neighbors(v));
    }
    residual = kernels::l1_distance(next, rank);
    rank.swap(next);
    if (residual < options.tol) {
      auto cv = blank(g, Measure::pagerank);
      const double total = kernels::sum(rank);
      for (std::size_t v = 0; v < n; ++v) cv.scores[v] = rank[v] / total;
      return cv;
    }
  }
  throw ConvergenceError("pagerank did not converge in " + std::to_string(options.max_iter) +
                             " iterations (L1 residual " + csv::format_double(residual) + ")",
                         residual);
}

namespace {

std::vector<std::size_t> ranking_order(const CentralityVector& cv) {
  std::vector<std::size_t> order(cv.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cv.scores[a] != cv.scores[b]) return cv.scores[a] > cv.scores[b];
    return cv.keys[a] < cv.keys[b];
  });
  return order;
}

}  // namespace

RankTable rank_table(const CentralityVector& cv, std::size_t top_n) {
  if (top_n < 1) throw DomainError("rank_table: top_n must be at least 1");
  const auto order = ranking_order(cv);
  RankTable table;
  const std::size_t rows = std::min(top_n, order.size());
  table.rows.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    table.rows.push_back({i + 1, cv.keys[order[i]], cv.scores[order[i]]});
  }
  return table;
}

std::vector<std::size_t> ordinal_ranks(const CentralityVector& cv) {
  const auto order = ranking_order(cv);
  std::vector<std::size_t> ranks(cv.size());
  for (std::size_t i = 0; i < order.size(); ++i) ranks[order[i]] = i + 1;
  return ranks;
}

void write_centrality_csv(std::ostream& out, const CentralityVector& cv) {
  out << "author,measure,score\n";
  const auto name = measure_name(cv.measure);
  for (std::size_t v = 0; v < cv.size(); ++v) {
    out << csv::escape(cv.keys[v].str()) << ',' << name << ',' << csv::format_double(cv.scores[v])
        << '\n';
  }
}

void write_rank_table_csv(std::ostream& out, const RankTable& table) {
  out << "rank,author,score\n";
  for (const auto& row : table.rows) {
    out << row.rank << ',' << csv::escape(row.author.str()) << ','
        << csv::format_double(row.score) << '\n';
  }
}

}  // namespace coauth
