#pragma once

#include <vector>

#include "spiderweb/graph.hpp"
#include "spiderweb/morphism.hpp"

namespace spiderweb {

struct RootedBall {
  Graph graph;
  int root = 0;
  int radius = 0;
  std::vector<int> original;  // ball vertex -> vertex id in the source graph
};

// Subgraph induced on the vertices at underlying distance <= radius from
// root, vertices in breadth-first order. Throws past 10^4 vertices.
RootedBall ball(const Graph& g, int root, int radius);

// 1/(1+r) with r the first radius at which the rooted balls stop being
// isomorphic; 0 when they agree at every radius.
struct RootedDistance {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / den; }
  bool operator==(const RootedDistance&) const = default;
};

RootedDistance rooted_distance(const Graph& g, int v, const Graph& h, int w,
                               MorphKind kind = MorphKind::weak,
                               bool compare_underlying = false,
                               int max_radius = 1 << 20);

}  // namespace spiderweb
