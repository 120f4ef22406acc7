#include "spiderweb/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace spiderweb {

int Graph::add_vertex(std::string name) {
  int id = num_vertices();
  vertices.push_back(Vertex{id, std::move(name)});
  return id;
}

int Graph::add_edge(int src, int dst, std::string label, double weight) {
  int id = num_edges();
  edges.push_back(Edge{id, src, dst, std::move(label), weight, -1});
  return id;
}

int Graph::add_undirected_edge(int src, int dst, std::string label,
                               double weight) {
  int e = num_edges();
  edges.push_back(Edge{e, src, dst, label, weight, e + 1});
  edges.push_back(Edge{e + 1, dst, src, invert_label(label), weight, e});
  return e;
}

std::string invert_label(const std::string& label) {
  if (label.empty()) return label;
  static const std::string suffix = "^-1";
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0)
    return label.substr(0, label.size() - suffix.size());
  return label + suffix;
}

void validate(const Graph& g) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    if (g.vertices[i].id != i)
      throw std::invalid_argument("vertex ids must be dense 0..n-1");
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges[i];
    if (e.id != i) throw std::invalid_argument("edge ids must be dense 0..m-1");
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (g.directed) {
      if (e.inverse != -1)
        throw std::invalid_argument("oriented graph must not carry an involution");
      continue;
    }
    if (e.inverse < 0 || e.inverse >= g.num_edges())
      throw std::invalid_argument("involution must be total on a non-oriented graph");
    if (e.inverse == e.id)
      throw std::invalid_argument("involution must be fixed-point free");
    const Edge& b = g.edges[e.inverse];
    if (b.inverse != e.id)
      throw std::invalid_argument("involution must have order 2");
    if (b.src != e.dst || b.dst != e.src)
      throw std::invalid_argument("inverse edge must swap endpoints");
    if (b.weight != e.weight)
      throw std::invalid_argument("inverse edge must carry the same weight");
  }
}

int degree(const Graph& g, int v) {
  int d = 0;
  for (const Edge& e : g.edges)
    if (e.src == v) ++d;
  return d;
}

int in_degree(const Graph& g, int v) {
  int d = 0;
  for (const Edge& e : g.edges)
    if (e.dst == v) ++d;
  return d;
}

Graph underlying(const Graph& g) {
  if (!g.directed) return g;
  Graph u;
  u.directed = false;
  u.window_segment = g.window_segment;
  u.vertices = g.vertices;
  const int m = g.num_edges();
  u.edges.reserve(2 * m);
  for (const Edge& e : g.edges)
    u.edges.push_back(Edge{e.id, e.src, e.dst, e.label, e.weight, e.id + m});
  for (const Edge& e : g.edges)
    u.edges.push_back(
        Edge{e.id + m, e.dst, e.src, invert_label(e.label), e.weight, e.id});
  return u;
}

Graph choose_orientation(const Graph& g, const OrientationSelector& keep) {
  if (g.directed)
    throw std::invalid_argument("choose_orientation expects a non-oriented graph");
  validate(g);
  Graph o;
  o.directed = true;
  o.window_segment = g.window_segment;
  o.vertices = g.vertices;
  for (const Edge& e : g.edges) {
    bool chosen = keep ? (e.id < e.inverse ? keep(g, e.id, e.inverse)
                                           : !keep(g, e.inverse, e.id))
                       : e.id < e.inverse;
    if (!chosen) continue;
    o.add_edge(e.src, e.dst, e.label, e.weight);
  }
  if (2 * o.num_edges() != g.num_edges())
    throw std::invalid_argument("orientation selector must pick one edge per pair");
  return o;
}

std::vector<std::vector<double>> adjacency_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges) a[e.src][e.dst] += e.weight;
  return a;
}

std::vector<std::vector<long long>> adjacency_matrix_exact(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges) {
    double r = std::round(e.weight);
    if (r != e.weight)
      throw std::invalid_argument("exact adjacency needs integral weights");
    a[e.src][e.dst] += static_cast<long long>(r);
  }
  return a;
}

AdjacencyIndex::AdjacencyIndex(const Graph& g)
    : out(g.num_vertices()), in(g.num_vertices()) {
  for (const Edge& e : g.edges) {
    out[e.src].push_back(e.id);
    in[e.dst].push_back(e.id);
  }
}

}  // namespace spiderweb
