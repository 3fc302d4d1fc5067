#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

/// Connected components. Id 0 is the largest component; equal sizes are
/// ordered by their smallest author key.
struct ComponentPartition {
  std::vector<std::uint32_t> assignment;  // vertex -> component id
  std::vector<std::size_t> sizes;         // component id -> vertex count

  std::size_t count() const noexcept { return sizes.size(); }
  std::vector<VertexId> members(std::uint32_t component) const;
};

struct LargestComponent {
  CoauthGraph graph;
  double ratio = 0.0;  // component vertices / all vertices
};

struct SummaryStats {
  std::size_t papers = 0;
  std::size_t authors = 0;
  double papers_per_author = 0.0;
  double authors_per_paper = 0.0;
  double avg_collaborators = 0.0;
  double largest_component_ratio = 0.0;
  double mean_distance = 0.0;
  double clustering_coefficient = 0.0;
};

ComponentPartition connected_components(const CoauthGraph& g);

// Throws DomainError on an empty graph.
LargestComponent largest_component(const CoauthGraph& g);

// Hop distances from `source`; unreachable vertices are absent.
std::map<VertexId, std::uint32_t> shortest_path_lengths(const CoauthGraph& g, VertexId source);
std::map<VertexId, std::uint32_t> shortest_path_lengths(const CoauthGraph& g,
                                                        const AuthorKey& source);

// Mean hop distance over unordered vertex pairs of the largest component.
// Throws DomainError when that component has fewer than two vertices.
double mean_distance(const CoauthGraph& g, unsigned threads = 0);

// Watts-Strogatz average over vertices of degree >= 2; 0 when there are none.
double clustering_coefficient(const CoauthGraph& g);

double mean_degree(const CoauthGraph& g);

// Corpus summary. When the largest component is a single vertex there are
// no distances to average and mean_distance is reported as 0.
SummaryStats summary_stats(std::span<const BiblioRecord> records, const CoauthGraph& g,
                           unsigned threads = 0);

void write_summary_csv(std::ostream& out, const SummaryStats& s);

}  // namespace coauth
