#include "spiderweb/derangement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "spiderweb/families.hpp"
#include "spiderweb/products.hpp"

namespace spiderweb {

bool path_valid(const Graph& g, const Path& p, int* start, int* end) {
  if (p.edges.empty()) return true;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    int e = p.edges[i];
    if (e < 0 || e >= g.num_edges()) return false;
    if (i > 0 && g.edges[p.edges[i - 1]].dst != g.edges[e].src) return false;
  }
  if (start) *start = g.edges[p.edges.front()].src;
  if (end) *end = g.edges[p.edges.back()].dst;
  return true;
}

bool path_reduced(const Graph& g, const Path& p) {
  if (g.directed)
    throw std::invalid_argument("reducedness lives in non-oriented graphs");
  for (size_t i = 1; i < p.edges.size(); ++i)
    if (g.edges[p.edges[i - 1]].inverse == p.edges[i]) return false;
  return true;
}

Path reverse_path(const Graph& g, const Path& p) {
  if (g.directed)
    throw std::invalid_argument("path reversal needs a non-oriented graph");
  Path r;
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it)
    r.edges.push_back(g.edges[*it].inverse);
  return r;
}

std::vector<char> default_orientation(const Graph& g) {
  if (g.directed)
    throw std::invalid_argument("orientations live on non-oriented graphs");
  std::vector<char> keep(g.num_edges(), 0);
  for (const Edge& e : g.edges)
    if (e.id < e.inverse) keep[e.id] = 1;
  return keep;
}

std::vector<int> path_signature(const Graph&, const Path& p,
                                const std::vector<char>& orientation) {
  std::vector<int> s;
  s.reserve(p.edges.size());
  for (int e : p.edges) s.push_back(orientation[e] ? 1 : -1);
  return s;
}

long long path_derangement(const Graph& g, const Path& p,
                           const std::vector<char>& orientation) {
  long long d = 0;
  for (int s : path_signature(g, p, orientation)) d += s;
  return d;
}

namespace {

// Signed traversal steps of the underlying graph, shared by the potential
// computations below.
struct Steps {
  // (neighbor, sign) lists per vertex
  std::vector<std::vector<std::pair<int, int>>> at;
  explicit Steps(const Graph& g) : at(g.num_vertices()) {
    if (g.directed) {
      for (const Edge& e : g.edges) {
        at[e.src].push_back({e.dst, +1});
        at[e.dst].push_back({e.src, -1});
      }
    } else {
      std::vector<char> keep = default_orientation(g);
      for (const Edge& e : g.edges)
        at[e.src].push_back({e.dst, keep[e.id] ? +1 : -1});
    }
  }
};

// BFS potentials phi with phi(dst) = phi(src) + sign along a spanning tree;
// returns -1 when the graph is disconnected (relative to `root`'s component
// covering all vertices).
bool potentials_from(const Graph& g, const Steps& steps, int root,
                     std::vector<long long>& phi, std::vector<char>& seen) {
  phi.assign(g.num_vertices(), 0);
  seen.assign(g.num_vertices(), 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (auto [u, s] : steps.at[v])
      if (!seen[u]) {
        seen[u] = 1;
        phi[u] = phi[v] + s;
        queue.push_back(u);
      }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

long long derangement_of_component(const Graph& g, const Steps& steps,
                                   const std::vector<long long>& phi,
                                   const std::vector<char>& in_comp) {
  long long d = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!in_comp[v]) continue;
    for (auto [u, s] : steps.at[v]) {
      long long cycle = phi[v] + s - phi[u];
      d = std::gcd(d, cycle < 0 ? -cycle : cycle);
    }
  }
  return d;
}

}  // namespace

long long graph_derangement(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  Steps steps(g);
  std::vector<long long> phi;
  std::vector<char> seen;
  if (!potentials_from(g, steps, 0, phi, seen))
    throw std::invalid_argument("graph_derangement needs a connected graph");
  return derangement_of_component(g, steps, phi, seen);
}

std::vector<long long> graph_derangement_per_component(const Graph& g) {
  std::vector<long long> out;
  std::vector<int> comp = components(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  Steps steps(g);
  for (int c = 0; c < count; ++c) {
    int root = -1;
    std::vector<char> in_comp(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
      if (comp[v] == c) {
        in_comp[v] = 1;
        if (root == -1) root = v;
      }
    std::vector<long long> phi(g.num_vertices(), 0);
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> queue{root};
    seen[root] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (auto [u, s] : steps.at[queue[i]])
        if (!seen[u]) {
          seen[u] = 1;
          phi[u] = phi[queue[i]] + s;
          queue.push_back(u);
        }
    out.push_back(derangement_of_component(g, steps, phi, in_comp));
  }
  return out;
}

std::vector<int> components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges) parent[find(e.src)] = find(e.dst);
  std::vector<int> id(n, -1);
  int next = 0;
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (id[r] == -1) id[r] = next++;
    out[v] = id[r];
  }
  return out;
}

int component_count(const Graph& g) {
  std::vector<int> c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

ComponentPrediction predict_components(const Graph& g,
                                       std::optional<long long> m) {
  ComponentPrediction out;
  out.derangement = graph_derangement(g);
  const long long d = out.derangement;
  if (!m.has_value()) {
    if (d == 0) {
      out.canonical = std::nullopt;
      out.paper = std::nullopt;
    } else {
      out.canonical = d;
      out.paper = d;  // [i] = i when M is infinite
    }
    out.discrepancy = false;
    return out;
  }
  const long long mm = *m;
  if (mm < 1) throw std::invalid_argument("predict_components needs M >= 1");
  out.canonical = d % mm == 0 ? mm : std::gcd(d, mm);
  if (d % mm == 0) {
    out.paper = mm;
  } else {
    long long r = ((d % mm) + mm) % mm;     // representative in (-M/2, M/2]
    long long centered = 2 * r > mm ? r - mm : r;
    out.paper = centered < 0 ? -centered : centered;
  }
  out.discrepancy = out.canonical != out.paper;
  return out;
}

GraphMorphism tensor_cycle_iso(const Graph& g, int v, long long m) {
  if (!g.directed)
    throw std::invalid_argument("tensor_cycle_iso expects an oriented graph");
  if (m < 1) throw std::invalid_argument("tensor_cycle_iso needs M >= 1");
  long long d = graph_derangement(g);
  if (d % m != 0)
    throw std::runtime_error(
        "not isomorphic: derangement " + std::to_string(d) +
        " is nonzero mod " + std::to_string(m));
  Steps steps(g);
  std::vector<long long> phi;
  std::vector<char> seen;
  potentials_from(g, steps, v, phi, seen);
  auto rank = [&](int w) { return ((phi[w] % m) + m) % m; };
  GraphMorphism mor;
  mor.src = share(g);
  mor.dst = share(tensor(g, cycle(m)));
  for (int w = 0; w < g.num_vertices(); ++w)
    mor.vertex_map.push_back(static_cast<int>(w * m + rank(w)));
  for (const Edge& e : g.edges)
    mor.edge_map.push_back(static_cast<int>(e.id * m + rank(e.src)));
  return mor;
}

bool verify_embedding_onto_component(const GraphMorphism& m, int root_dst) {
  if (!is_morphism(m)) return false;
  if (!preserves_weights(m) || !preserves_labels(m)) return false;
  const Graph& h = *m.dst;
  std::vector<char> v_hit(h.num_vertices(), 0), e_hit(h.num_edges(), 0);
  for (int v : m.vertex_map) {
    if (v_hit[v]) return false;  // not injective
    v_hit[v] = 1;
  }
  for (int e : m.edge_map) {
    if (e_hit[e]) return false;
    e_hit[e] = 1;
  }
  std::vector<int> comp = components(h);
  const int c = comp[root_dst];
  for (int v = 0; v < h.num_vertices(); ++v)
    if ((comp[v] == c) != static_cast<bool>(v_hit[v])) return false;
  for (const Edge& e : h.edges)
    if ((comp[e.src] == c) != static_cast<bool>(e_hit[e.id])) return false;
  return true;
}

}  // namespace spiderweb
