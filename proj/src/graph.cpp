#include "coauth/graph.hpp"

#include <algorithm>
#include <ostream>

#include "coauth/error.hpp"

namespace coauth {

namespace {

struct Arc {
  VertexId from;
  VertexId to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

}  // namespace

std::optional<VertexId> CoauthGraph::find(const AuthorKey& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<VertexId>(it - keys_.begin());
}

std::vector<WeightedEdge> CoauthGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const auto nbrs = neighbors(v);
    const auto w = weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] > v) out.push_back({v, nbrs[i], w[i]});
    }
  }
  return out;
}

CoauthGraph CoauthGraph::induced_subgraph(std::span<const VertexId> vertices) const {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw DomainError("induced_subgraph: duplicate vertex");
  }
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> remap(vertex_count(), kAbsent);
  for (VertexId i = 0; i < keep.size(); ++i) {
    if (keep[i] >= vertex_count()) throw DomainError("induced_subgraph: unknown vertex");
    remap[keep[i]] = i;
  }

  CoauthGraph sub;
  sub.keys_.reserve(keep.size());
  sub.offsets_.reserve(keep.size() + 1);
  for (VertexId old : keep) {
    sub.keys_.push_back(keys_[old]);
    sub.papers_of_.push_back(papers_of_[old]);
    sub.lead_papers_.push_back(lead_papers_[old]);
    sub.authorship_count_ += papers_of_[old];
    sub.paper_count_ += lead_papers_[old];
    const auto nbrs = neighbors(old);
    const auto w = weights(old);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      // Ascending old ids map to ascending new ids, so lists stay sorted.
      if (remap[nbrs[i]] != kAbsent) {
        sub.adjacency_.push_back(remap[nbrs[i]]);
        sub.weights_.push_back(w[i]);
      }
    }
    sub.offsets_.push_back(sub.adjacency_.size());
  }
  return sub;
}

CoauthGraph build_graph(std::span<const BiblioRecord> records) {
  CoauthGraph g;
  for (const auto& r : records) {
    for (const auto& a : r.authors) g.keys_.emplace_back(a);
  }
  std::sort(g.keys_.begin(), g.keys_.end());
  g.keys_.erase(std::unique(g.keys_.begin(), g.keys_.end()), g.keys_.end());

  const std::size_t n = g.keys_.size();
  g.papers_of_.assign(n, 0);
  g.lead_papers_.assign(n, 0);

  std::vector<Arc> arcs;
  std::vector<VertexId> ids;
  for (const auto& r : records) {
    ids.clear();
    for (const auto& a : r.authors) ids.push_back(*g.find(AuthorKey(a)));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) continue;

    ++g.paper_count_;
    g.authorship_count_ += ids.size();
    ++g.lead_papers_[ids.front()];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ++g.papers_of_[ids[i]];
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        arcs.push_back({ids[i], ids[j]});
        arcs.push_back({ids[j], ids[i]});
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());

  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < arcs.size();) {
    std::size_t j = i;
    while (j < arcs.size() && arcs[j] == arcs[i]) ++j;
    g.adjacency_.push_back(arcs[i].to);
    g.weights_.push_back(static_cast<std::uint32_t>(j - i));
    ++g.offsets_[arcs[i].from + 1];
    i = j;
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

void write_edge_list(std::ostream& out, const CoauthGraph& g) {
  for (const auto& e : g.edges()) {
    out << g.key(e.a).str() << '\t' << g.key(e.b).str() << '\t' << e.weight << '\n';
  }
}

void write_isolated_vertices(std::ostream& out, const CoauthGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << g.key(v).str() << '\n';
  }
}

}  // namespace coauth
