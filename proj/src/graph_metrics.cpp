#include "coauth/graph_metrics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bfs.hpp"
#include "coauth/csv.hpp"
#include "coauth/error.hpp"
#include "coauth/parallel.hpp"

namespace coauth {

std::vector<VertexId> ComponentPartition::members(std::uint32_t component) const {
  std::vector<VertexId> out;
  out.reserve(component < sizes.size() ? sizes[component] : 0);
  for (VertexId v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == component) out.push_back(v);
  }
  return out;
}

ComponentPartition connected_components(const CoauthGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};

  // Label in vertex order, so each raw label's root is its smallest member.
  std::vector<std::uint32_t> raw(n, kNone);
  std::vector<std::size_t> raw_sizes;
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (raw[root] != kNone) continue;
    const auto label = static_cast<std::uint32_t>(raw_sizes.size());
    raw[root] = label;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (raw[w] == kNone) {
          raw[w] = label;
          queue.push_back(w);
        }
      }
    }
    raw_sizes.push_back(queue.size());
  }

  std::vector<std::uint32_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return raw_sizes[a] > raw_sizes[b];
  });
  std::vector<std::uint32_t> relabel(raw_sizes.size());
  ComponentPartition out;
  out.sizes.reserve(raw_sizes.size());
  for (std::uint32_t id = 0; id < order.size(); ++id) {
    relabel[order[id]] = id;
    out.sizes.push_back(raw_sizes[order[id]]);
  }
  out.assignment.resize(n);
  for (VertexId v = 0; v < n; ++v) out.assignment[v] = relabel[raw[v]];
  return out;
}

LargestComponent largest_component(const CoauthGraph& g) {
  if (g.vertex_count() == 0) throw DomainError("largest_component: graph has no vertices");
  const auto parts = connected_components(g);
  const auto members = parts.members(0);
  LargestComponent out;
  out.ratio = static_cast<double>(members.size()) / static_cast<double>(g.vertex_count());
  out.graph = members.size() == g.vertex_count() ? g : g.induced_subgraph(members);
  return out;
}

std::map<VertexId, std::uint32_t> shortest_path_lengths(const CoauthGraph& g, VertexId source) {
  if (source >= g.vertex_count()) throw DomainError("shortest_path_lengths: unknown source vertex");
  detail::BfsScratch bfs(g.vertex_count());
  bfs.run(g, source);
  std::map<VertexId, std::uint32_t> out;
  for (VertexId v : bfs.order) out.emplace(v, static_cast<std::uint32_t>(bfs.dist[v]));
  return out;
}

std::map<VertexId, std::uint32_t> shortest_path_lengths(const CoauthGraph& g,
                                                        const AuthorKey& source) {
  const auto id = g.find(source);
  if (!id) throw DomainError("shortest_path_lengths: unknown author '" + source.str() + "'");
  return shortest_path_lengths(g, *id);
}

namespace {

// Sum of hop distances over ordered pairs within one component.
double component_mean_distance(const CoauthGraph& g, std::span<const VertexId> members,
                               unsigned threads) {
  const std::size_t k = members.size();
  if (k < 2) throw DomainError("mean_distance: no pair of connected vertices");

  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (k + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> partial(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    detail::BfsScratch bfs(g.vertex_count());
    std::uint64_t total = 0;
    for (std::size_t i = c * kChunk; i < std::min(k, (c + 1) * kChunk); ++i) {
      bfs.run(g, members[i]);
      for (VertexId v : bfs.order) total += static_cast<std::uint64_t>(bfs.dist[v]);
    }
    partial[c] = total;
  });
  const std::uint64_t ordered_sum = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  // Integer sums are exact, so chunking cannot perturb the result.
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1);
  return static_cast<double>(ordered_sum) / pairs;
}

}  // namespace

double mean_distance(const CoauthGraph& g, unsigned threads) {
  if (g.vertex_count() == 0) throw DomainError("mean_distance: graph has no vertices");
  const auto parts = connected_components(g);
  const auto members = parts.members(0);
  return component_mean_distance(g, members, threads);
}

double clustering_coefficient(const CoauthGraph& g) {
  double total = 0.0;
  std::size_t eligible = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
      // Count neighbors of nbrs[i] that are also neighbors of v and sort after it.
      const auto other = g.neighbors(nbrs[i]);
      auto a = std::upper_bound(nbrs.begin(), nbrs.end(), nbrs[i]);
      auto b = std::upper_bound(other.begin(), other.end(), nbrs[i]);
      while (a != nbrs.end() && b != other.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++links;
          ++a;
          ++b;
        }
      }
    }
    total += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    ++eligible;
  }
  return eligible == 0 ? 0.0 : total / static_cast<double>(eligible);
}

double mean_degree(const CoauthGraph& g) {
  if (g.vertex_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

SummaryStats summary_stats(std::span<const BiblioRecord> records, const CoauthGraph& g,
                           unsigned threads) {
  if (records.empty() || g.paper_count() == 0) throw DomainError("summary_stats: no papers");
  SummaryStats s;
  s.papers = records.size();
  s.authors = g.vertex_count();
  const auto incidences = static_cast<double>(g.authorship_count());
  s.papers_per_author = incidences / static_cast<double>(s.authors);
  s.authors_per_paper = incidences / static_cast<double>(s.papers);
  s.avg_collaborators = mean_degree(g);

  const auto parts = connected_components(g);
  const auto members = parts.members(0);
  s.largest_component_ratio = static_cast<double>(members.size()) / static_cast<double>(s.authors);
  s.mean_distance = members.size() < 2 ? 0.0 : component_mean_distance(g, members, threads);
  s.clustering_coefficient = clustering_coefficient(g);
  return s;
}

void write_summary_csv(std::ostream& out, const SummaryStats& s) {
  out << "papers,authors,papers_per_author,authors_per_paper,avg_collaborators,"
         "largest_component_ratio,mean_distance,clustering_coefficient\n";
  out << s.papers << ',' << s.authors << ',' << csv::format_double(s.papers_per_author) << ','
      << csv::format_double(s.authors_per_paper) << ',' << csv::format_double(s.avg_collaborators)
      << ',' << csv::format_double(s.largest_component_ratio) << ','
      << csv::format_double(s.mean_distance) << ','
      << csv::format_double(s.clustering_coefficient) << '\n';
}

}  // namespace coauth
