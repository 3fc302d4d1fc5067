#pragma once

#include <cstdint>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth::detail {

constexpr std::int32_t kUnreached = -1;

// Reusable breadth-first search state. `order` lists reached vertices in
// visitation order, which is non-decreasing in distance.
struct BfsScratch {
  std::vector<std::int32_t> dist;
  std::vector<VertexId> order;

  explicit BfsScratch(std::size_t n) : dist(n, kUnreached) { order.reserve(n); }

  void run(const CoauthGraph& g, VertexId source) {
    for (VertexId v : order) dist[v] = kUnreached;
    order.clear();
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const VertexId v = order[head];
      const std::int32_t next = dist[v] + 1;
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] == kUnreached) {
          dist[w] = next;
          order.push_back(w);
        }
      }
    }
  }
};

}  // namespace coauth::detail
