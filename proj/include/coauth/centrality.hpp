#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

enum class Measure { degree, closeness, betweenness, pagerank };

std::string_view measure_name(Measure m);

/// Scores for one measure, indexed like the vertices of the graph it was
/// computed on. Keeps its own copy of the author keys so it can be ranked and
/// exported without the graph.
struct CentralityVector {
  Measure measure = Measure::degree;
  std::vector<AuthorKey> keys;
  std::vector<double> scores;

  std::size_t size() const noexcept { return scores.size(); }
};

struct RankRow {
  std::size_t rank;  // 1-based ordinal
  AuthorKey author;
  double score;

  friend bool operator==(const RankRow&, const RankRow&) = default;
};

enum class TieRule { author_key_ascending };

struct RankTable {
  std::vector<RankRow> rows;
  TieRule tie_rule = TieRule::author_key_ascending;
};

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-12;  // on the L1 change between sweeps
  int max_iter = 1000;
};

// Number of distinct neighbors.
CentralityVector degree_centrality(const CoauthGraph& g);

// Harmonic closeness: sum of 1/d(v, u) over vertices u reachable from v.
// Unreachable vertices contribute nothing, so disconnected graphs are fine.
CentralityVector closeness_centrality(const CoauthGraph& g, unsigned threads = 0);

// Unnormalized betweenness over unordered pairs (Brandes accumulation).
// Sources are processed in fixed-size blocks whose partial sums are added in
// block order, so the result is bitwise identical for any thread count.
CentralityVector betweenness_centrality(const CoauthGraph& g, unsigned threads = 0);

// Power iteration on the undirected graph read as symmetric arcs. Degree-0
// vertices spread their mass uniformly. Throws ConvergenceError (carrying
// the last L1 change) when max_iter sweeps do not reach tol, and DomainError
// on an empty graph or out-of-range options.
CentralityVector pagerank(const CoauthGraph& g, const PageRankOptions& options = {});

// Score descending, author key ascending on ties; at most top_n rows.
RankTable rank_table(const CentralityVector& cv, std::size_t top_n);

// 1-based ordinal rank of every vertex under the rank_table ordering.
std::vector<std::size_t> ordinal_ranks(const CentralityVector& cv);

// `author,measure,score`, vertex order, 17 significant digits.
void write_centrality_csv(std::ostream& out, const CentralityVector& cv);
// `rank,author,score`
void write_rank_table_csv(std::ostream& out, const RankTable& table);

}  // namespace coauth
