#include "spiderweb/ball.hpp"

#include <stdexcept>

#include "spiderweb/iso.hpp"

namespace spiderweb {

static constexpr int kBallVertexCap = 10000;

RootedBall ball(const Graph& g, int root, int radius) {
  if (root < 0 || root >= g.num_vertices())
    throw std::invalid_argument("ball root out of range");
  AdjacencyIndex idx(g);
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<int> order{root};
  dist[root] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (dist[v] == radius) continue;
    auto visit = [&](int u) {
      if (dist[u] != -1) return;
      dist[u] = dist[v] + 1;
      order.push_back(u);
      if (static_cast<int>(order.size()) > kBallVertexCap)
        throw std::runtime_error("ball exceeds the vertex cap");
    };
    for (int e : idx.out[v]) visit(g.edges[e].dst);
    for (int e : idx.in[v]) visit(g.edges[e].src);
  }
  std::vector<int> new_id(g.num_vertices(), -1);
  RootedBall b;
  b.root = 0;
  b.radius = radius;
  b.graph.directed = g.directed;
  for (size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    b.graph.add_vertex(g.vertices[order[i]].name);
    b.original.push_back(order[i]);
  }
  std::vector<int> edge_new(g.num_edges(), -1);
  for (const Edge& e : g.edges) {
    if (new_id[e.src] == -1 || new_id[e.dst] == -1) continue;
    edge_new[e.id] = b.graph.add_edge(new_id[e.src], new_id[e.dst], e.label, e.weight);
  }
  if (!g.directed)
    for (const Edge& e : g.edges)
      if (edge_new[e.id] != -1)
        b.graph.edges[edge_new[e.id]].inverse = edge_new[e.inverse];
  return b;
}

RootedDistance rooted_distance(const Graph& g, int v, const Graph& h, int w,
                               MorphKind kind, bool compare_underlying,
                               int max_radius) {
  const Graph* pg = &g;
  const Graph* ph = &h;
  Graph ug, uh;
  if (compare_underlying) {
    if (g.directed) {
      ug = underlying(g);
      pg = &ug;
    }
    if (h.directed) {
      uh = underlying(h);
      ph = &uh;
    }
  }
  long long prev_g = -1, prev_h = -1;
  for (int r = 0; r <= max_radius; ++r) {
    RootedBall bg = ball(*pg, v, r);
    RootedBall bh = ball(*ph, w, r);
    IsoOptions opt;
    opt.kind = kind;
    opt.rooted = true;
    opt.src_root = bg.root;
    opt.dst_root = bh.root;
    opt.vertex_cap = kBallVertexCap;
    IsoResult res = find_iso(bg.graph, bh.graph, opt);
    if (res.status == SearchStatus::undecided)
      throw std::runtime_error("rooted_distance: ball comparison undecided");
    if (res.status == SearchStatus::none) return RootedDistance{1, r + 1};
    bool saturated_g = bg.graph.num_vertices() == prev_g;
    bool saturated_h = bh.graph.num_vertices() == prev_h;
    if (saturated_g && saturated_h) return RootedDistance{0, 1};
    prev_g = bg.graph.num_vertices();
    prev_h = bh.graph.num_vertices();
  }
  throw std::runtime_error("rooted_distance: max radius exceeded");
}

}  // namespace spiderweb
