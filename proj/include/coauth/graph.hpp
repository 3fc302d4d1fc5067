#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "coauth/ingest.hpp"

namespace coauth {

using VertexId = std::uint32_t;

struct WeightedEdge {
  VertexId a;
  VertexId b;  // a < b
  std::uint32_t weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected coauthorship graph in compressed sparse row form.
///
/// Vertex ids follow the lexicographic order of the author keys, so two graphs
/// built from the same papers in any order are identical. Neighbor lists are
/// sorted by id. Edge weights count jointly authored papers; distance and
/// centrality code ignores them.
class CoauthGraph {
 public:
  CoauthGraph() = default;

  std::size_t vertex_count() const noexcept { return keys_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint32_t> weights(VertexId v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  const AuthorKey& key(VertexId v) const noexcept { return keys_[v]; }
  std::span<const AuthorKey> keys() const noexcept { return keys_; }
  std::optional<VertexId> find(const AuthorKey& key) const;

  /// Papers authored by `v`.
  std::uint32_t papers_of(VertexId v) const noexcept { return papers_of_[v]; }

  std::size_t paper_count() const noexcept { return paper_count_; }
  std::size_t authorship_count() const noexcept { return authorship_count_; }

  /// Unordered edges, sorted by (a, b).
  std::vector<WeightedEdge> edges() const;

  /// Subgraph induced by `vertices` (any order, no duplicates). Paper counts
  /// are exact when `vertices` is a union of connected components, because
  /// every paper's authors then fall entirely inside or outside the subgraph.
  CoauthGraph induced_subgraph(std::span<const VertexId> vertices) const;

  friend bool operator==(const CoauthGraph&, const CoauthGraph&) = default;

 private:
  friend CoauthGraph build_graph(std::span<const BiblioRecord> records);

  std::vector<AuthorKey> keys_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint32_t> papers_of_;
  // Papers whose smallest author key is this vertex; lets induced subgraphs
  // recover their paper count.
  std::vector<std::uint32_t> lead_papers_;
  std::size_t paper_count_ = 0;
  std::size_t authorship_count_ = 0;
};

// Clique expansion: each paper adds +1 to every pair of its authors.
// Expects normalized, merged records with no repeated author per paper.
CoauthGraph build_graph(std::span<const BiblioRecord> records);

// `author_a<TAB>author_b<TAB>weight`, one line per edge, lines sorted.
void write_edge_list(std::ostream& out, const CoauthGraph& g);
// One degree-0 author per line, sorted.
void write_isolated_vertices(std::ostream& out, const CoauthGraph& g);

}  // namespace coauth
