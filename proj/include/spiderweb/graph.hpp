#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spiderweb {

struct Vertex {
  int id = 0;
  std::string name;
};

// One oriented (half-)edge. In a non-oriented (Serre) graph every edge is
// paired with its inverse half-edge via `inverse`; oriented graphs leave
// `inverse` at -1.
struct Edge {
  int id = 0;
  int src = 0;  // iota
  int dst = 0;  // tau
  std::string label;
  double weight = 1.0;
  int inverse = -1;
};

struct Graph {
  bool directed = true;
  bool window_segment = false;  // finite window standing in for an infinite line
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  int add_vertex(std::string name = "");
  int add_edge(int src, int dst, std::string label = "", double weight = 1.0);
  // Adds the pair {e, ebar} of a non-oriented edge; returns the id of e.
  int add_undirected_edge(int src, int dst, std::string label = "",
                          double weight = 1.0);
};

// "x" <-> "x^-1"; the empty label is its own inverse (unlabeled edges).
std::string invert_label(const std::string& label);

// Throws std::invalid_argument when the graph breaks its invariants
// (dangling endpoints, broken or fixed-point involution, weight mismatch
// across an involution pair).
void validate(const Graph& g);

// Number of edges e with iota(e) = v. A non-oriented loop pair contributes 2.
int degree(const Graph& g, int v);
int in_degree(const Graph& g, int v);

// Doubles the edge set with formal inverses; labels on the new halves get
// the ^-1 suffix. Edge i keeps id i, its formal inverse gets id m+i.
Graph underlying(const Graph& g);

// keep(g, e, ebar) -> true to keep edge e of the pair; default keeps the
// lower id. Throws on graphs without a valid involution.
using OrientationSelector = std::function<bool(const Graph&, int, int)>;
Graph choose_orientation(const Graph& g, const OrientationSelector& keep = {});

// a_ij = total weight of edges i -> j.
std::vector<std::vector<double>> adjacency_matrix(const Graph& g);
// Same but requires every weight to be integral.
std::vector<std::vector<long long>> adjacency_matrix_exact(const Graph& g);

// Per-vertex incidence lists (edge ids); built on demand by algorithms.
struct AdjacencyIndex {
  std::vector<std::vector<int>> out;  // by iota
  std::vector<std::vector<int>> in;   // by tau
  explicit AdjacencyIndex(const Graph& g);
};

}  // namespace spiderweb
