#include "spiderweb/paths.hpp"

#include <functional>
#include <stdexcept>

namespace spiderweb {

namespace {

// One traversal step of the underlying graph: edge + direction for oriented
// input, a half-edge for non-oriented input.
struct Step {
  int to;
  int sign;
  long long undo;  // the reverse step's identity, for reducedness
  long long id;
};

std::vector<std::vector<Step>> build_steps(const Graph& g) {
  std::vector<std::vector<Step>> at(g.num_vertices());
  if (g.directed) {
    for (const Edge& e : g.edges) {
      long long fwd = 2LL * e.id, bwd = 2LL * e.id + 1;
      at[e.src].push_back({e.dst, +1, bwd, fwd});
      at[e.dst].push_back({e.src, -1, fwd, bwd});
    }
  } else {
    std::vector<char> keep = default_orientation(g);
    for (const Edge& e : g.edges)
      at[e.src].push_back({e.dst, keep[e.id] ? +1 : -1, e.inverse, e.id});
  }
  return at;
}

}  // namespace

std::map<long long, long long> closed_path_census(const Graph& g, int v,
                                                  int length,
                                                  bool reduced_only) {
  if (v < 0 || v >= g.num_vertices())
    throw std::invalid_argument("closed_path_census: vertex out of range");
  auto at = build_steps(g);
  std::map<long long, long long> out;
  // iterative DFS over (vertex, depth, derangement, last step identity)
  struct Frame {
    int v;
    int depth;
    long long der;
    long long last;  // identity of the previous step, -1 initially
  };
  std::vector<Frame> stack{{v, 0, 0, -1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == length) {
      if (f.v == v) ++out[f.der];
      continue;
    }
    for (const Step& s : at[f.v]) {
      if (reduced_only && f.last == s.undo) continue;
      stack.push_back({s.to, f.depth + 1, f.der + s.sign, s.id});
    }
  }
  return out;
}

Path eulerian_circuit(const Graph& g) {
  if (!g.directed)
    throw std::invalid_argument("eulerian_circuit expects an oriented graph");
  Path p;
  if (g.num_edges() == 0) return p;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (degree(g, v) != in_degree(g, v))
      throw std::invalid_argument("eulerian_circuit needs balanced degrees");
  {
    std::vector<int> comp = components(g);
    int with_edges = -1;
    for (const Edge& e : g.edges) {
      if (with_edges == -1) with_edges = comp[e.src];
      if (comp[e.src] != with_edges || comp[e.dst] != with_edges)
        throw std::invalid_argument(
            "eulerian_circuit needs all edges in one component");
    }
  }
  AdjacencyIndex idx(g);
  std::vector<size_t> next(g.num_vertices(), 0);
  int start = g.edges[0].src;
  std::vector<int> vertex_stack{start};
  std::vector<int> edge_stack;  // edge taken to reach the stacked vertex
  std::vector<int> circuit;
  while (!vertex_stack.empty()) {
    int v = vertex_stack.back();
    if (next[v] < idx.out[v].size()) {
      int e = idx.out[v][next[v]++];
      vertex_stack.push_back(g.edges[e].dst);
      edge_stack.push_back(e);
    } else {
      vertex_stack.pop_back();
      if (!edge_stack.empty()) {
        circuit.push_back(edge_stack.back());
        edge_stack.pop_back();
      }
    }
  }
  p.edges.assign(circuit.rbegin(), circuit.rend());
  if (static_cast<int>(p.edges.size()) != g.num_edges())
    throw std::logic_error("hierholzer did not cover every edge");
  return p;
}

HamiltonianResult hamiltonian_cycle(const Graph& g, long long node_cap) {
  HamiltonianResult res;
  if (!g.directed)
    throw std::invalid_argument("hamiltonian_cycle expects an oriented graph");
  const int n = g.num_vertices();
  if (n == 0) {
    res.status = SearchStatus::found;
    return res;
  }
  AdjacencyIndex idx(g);
  std::vector<char> visited(n, 0);
  std::vector<int> path;
  long long nodes = 0;
  bool capped = false;
  std::function<bool(int, int)> dfs = [&](int v, int depth) -> bool {
    if (++nodes > node_cap) {
      capped = true;
      return false;
    }
    if (depth == n) {
      for (int e : idx.out[v])
        if (g.edges[e].dst == 0) {
          path.push_back(e);
          return true;
        }
      return false;
    }
    for (int e : idx.out[v]) {
      int u = g.edges[e].dst;
      if (visited[u]) continue;
      visited[u] = 1;
      path.push_back(e);
      if (dfs(u, depth + 1)) return true;
      path.pop_back();
      visited[u] = 0;
      if (capped) return false;
    }
    return false;
  };
  visited[0] = 1;
  if (dfs(0, 1)) {
    res.status = SearchStatus::found;
    res.cycle.edges = path;
    return res;
  }
  res.status = capped ? SearchStatus::undecided : SearchStatus::none;
  return res;
}

Path hamiltonian_from_euler(const Graph& g, const Path& euler,
                            const LineGraph& lg) {
  if (!replay_euler(g, euler))
    throw std::invalid_argument("not an Euler circuit of the base graph");
  Path out;
  const auto& e = euler.edges;
  for (size_t i = 0; i < e.size(); ++i)
    out.edges.push_back(lg.pair_edge(e[i], e[(i + 1) % e.size()]));
  return out;
}

bool replay_euler(const Graph& g, const Path& p) {
  if (static_cast<int>(p.edges.size()) != g.num_edges()) return false;
  if (g.num_edges() == 0) return true;
  int start, end;
  if (!path_valid(g, p, &start, &end)) return false;
  if (start != end) return false;
  std::vector<char> used(g.num_edges(), 0);
  for (int e : p.edges) {
    if (used[e]) return false;
    used[e] = 1;
  }
  return true;
}

bool replay_hamilton(const Graph& g, const Path& p) {
  if (static_cast<int>(p.edges.size()) != g.num_vertices()) return false;
  if (g.num_vertices() == 0) return true;
  int start, end;
  if (!path_valid(g, p, &start, &end)) return false;
  if (start != end) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  for (int e : p.edges) {
    int v = g.edges[e].src;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace spiderweb
