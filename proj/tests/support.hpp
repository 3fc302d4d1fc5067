#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the code under test except to build graphs from records.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coauth/graph.hpp"
#include "coauth/ingest.hpp"

namespace coauth::test {

inline std::string vertex_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "V%03zu, X", i);
  return buf;
}

inline BiblioRecord paper(std::string id, std::vector<std::string> authors, int year = 2000,
                          std::uint64_t cited = 0) {
  BiblioRecord r;
  r.record_id = std::move(id);
  r.authors = std::move(authors);
  r.year = year;
  r.doc_type = "Article";
  r.times_cited = cited;
  r.source = "J TEST";
  return r;
}

// Dense symmetric adjacency; vertex i is named vertex_name(i) so graph ids
// coincide with matrix indices.
struct Dense {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;

  explicit Dense(std::size_t size) : n(size), adj(size, std::vector<bool>(size, false)) {}
  void link(std::size_t a, std::size_t b) { adj[a][b] = adj[b][a] = true; }
  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj[v].begin(), adj[v].end(), true));
  }

  // One two-author paper per edge, one solo paper per vertex.
  std::vector<BiblioRecord> records() const {
    std::vector<BiblioRecord> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(paper("S" + std::to_string(i), {vertex_name(i)}));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adj[i][j]) {
          out.push_back(paper("E" + std::to_string(i) + "_" + std::to_string(j),
                              {vertex_name(i), vertex_name(j)}));
        }
      }
    }
    return out;
  }
  CoauthGraph graph() const { return build_graph(records()); }
};

inline Dense random_dense(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Dense d(size(rng));
  const double p = 0.1 + 0.6 * unit(rng);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = i + 1; j < d.n; ++j) {
      if (unit(rng) < p) d.link(i, j);
    }
  }
  return d;
}

inline Dense path_graph(std::size_t n) {
  Dense d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d.link(i, i + 1);
  return d;
}

inline Dense complete_graph(std::size_t n) {
  Dense d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.link(i, j);
  return d;
}

inline Dense cycle_graph(std::size_t n) {
  Dense d = path_graph(n);
  d.link(0, n - 1);
  return d;
}

inline Dense star_graph(std::size_t leaves) {
  Dense d(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) d.link(0, i);
  return d;
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Dense& d) {
  std::vector<std::vector<int>> dist(d.n, std::vector<int>(d.n, kInf));
  for (std::size_t i = 0; i < d.n; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < d.n; ++j)
      if (d.adj[i][j]) dist[i][j] = 1;
  }
  for (std::size_t k = 0; k < d.n; ++k)
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = 0; j < d.n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

// Enumerates every geodesic explicitly and credits each interior vertex with
// 1/(number of geodesics) per path, over unordered pairs.
inline std::vector<double> betweenness_by_enumeration(const Dense& d) {
  const auto dist = floyd_warshall(d);
  std::vector<double> score(d.n, 0.0);
  std::vector<std::size_t> path;
  for (std::size_t j = 0; j < d.n; ++j) {
    for (std::size_t k = j + 1; k < d.n; ++k) {
      if (dist[j][k] >= kInf || dist[j][k] < 2) continue;
      std::vector<std::vector<std::size_t>> geodesics;
      std::function<void(std::size_t)> walk = [&](std::size_t cur) {
        if (cur == k) {
          geodesics.push_back(path);
          return;
        }
        for (std::size_t nxt = 0; nxt < d.n; ++nxt) {
          if (d.adj[cur][nxt] && dist[j][nxt] == dist[j][cur] + 1 &&
              dist[nxt][k] == dist[j][k] - dist[j][nxt]) {
            path.push_back(nxt);
            walk(nxt);
            path.pop_back();
          }
        }
      };
      path.assign(1, j);
      walk(j);
      std::vector<double> through(d.n, 0.0);
      for (const auto& g : geodesics)
        for (std::size_t p = 1; p + 1 < g.size(); ++p) through[g[p]] += 1.0;
      for (std::size_t i = 0; i < d.n; ++i) score[i] += through[i] / static_cast<double>(geodesics.size());
    }
  }
  return score;
}

inline std::vector<double> closeness_by_floyd(const Dense& d) {
  const auto dist = floyd_warshall(d);
  std::vector<double> out(d.n, 0.0);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j)
      if (i != j && dist[i][j] < kInf) out[i] += 1.0 / dist[i][j];
  return out;
}

// Solves (I - d P) x = (1-d)/n 1 by Gaussian elimination, where P is the
// column-stochastic transition matrix with uniform columns for dangling vertices.
inline std::vector<double> pagerank_by_linear_solve(const Dense& g, double damping) {
  const std::size_t n = g.n;
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    a[v][v] = 1.0;
    a[v][n] = (1.0 - damping) / static_cast<double>(n);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto k = g.degree(u);
    for (std::size_t v = 0; v < n; ++v) {
      const double p = k == 0 ? 1.0 / static_cast<double>(n) : (g.adj[u][v] ? 1.0 / static_cast<double>(k) : 0.0);
      a[v][u] -= damping * p;
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

inline std::vector<double> clustering_by_pairs(const Dense& d) {
  std::vector<double> local;
  for (std::size_t v = 0; v < d.n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < d.n; ++u)
      if (d.adj[v][u]) nb.push_back(u);
    if (nb.size() < 2) continue;
    double closed = 0, pairs = 0;
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        pairs += 1;
        if (d.adj[nb[a]][nb[b]]) closed += 1;
      }
    local.push_back(closed / pairs);
  }
  return local;
}

// Quadratic rank assignment: rank = #smaller + (#equal + 1) / 2.
inline std::vector<double> ranks_by_counting(const std::vector<double>& xs) {
  std::vector<double> r(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double less = 0, equal = 0;
    for (double y : xs) {
      if (y < xs[i]) less += 1;
      if (y == xs[i]) equal += 1;
    }
    r[i] = less + (equal + 1) / 2;
  }
  return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks_by_counting(x), ranks_by_counting(y));
}

// Random corpus: `papers` papers over a pool of `pool` authors, years in
// [first, last], 1..max_authors authors each.
inline std::vector<BiblioRecord> random_corpus(std::mt19937_64& rng, std::size_t papers,
                                               std::size_t pool, int first, int last,
                                               std::size_t max_authors = 4) {
  std::uniform_int_distribution<std::size_t> who(0, pool - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_authors);
  std::uniform_int_distribution<int> year(first, last);
  std::uniform_int_distribution<std::uint64_t> cited(0, 500);
  std::vector<BiblioRecord> out;
  for (std::size_t p = 0; p < papers; ++p) {
    std::vector<std::string> names;
    const auto k = count(rng);
    while (names.size() < k) {
      auto name = vertex_name(who(rng));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    out.push_back(paper("P" + std::to_string(p), names, year(rng), cited(rng)));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace coauth::test
