#include "spiderweb/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "spiderweb/families.hpp"

namespace spiderweb {

namespace {

using PairKey = long long;

struct GraphProfile {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<int> color;
  // multiset of edge keys per ordered vertex pair, sorted
  std::unordered_map<PairKey, std::vector<int>> pair_edges;
  std::vector<std::vector<int>> nbrs;  // underlying neighbors, deduplicated
};

PairKey pack(int u, int v, int n) { return static_cast<PairKey>(u) * n + v; }

// Shared edge-key interning across the two graphs.
int edge_key(std::map<std::tuple<double, std::string>, int>& keys,
             const Edge& e, MorphKind kind) {
  auto k = std::make_tuple(e.weight,
                           kind == MorphKind::strong ? e.label : std::string());
  auto [it, fresh] = keys.emplace(k, static_cast<int>(keys.size()));
  return it->second;
}

void build_pairs(GraphProfile& p,
                 std::map<std::tuple<double, std::string>, int>& keys,
                 MorphKind kind) {
  p.n = p.g->num_vertices();
  p.nbrs.assign(p.n, {});
  for (const Edge& e : p.g->edges) {
    p.pair_edges[pack(e.src, e.dst, p.n)].push_back(edge_key(keys, e, kind));
    p.nbrs[e.src].push_back(e.dst);
    p.nbrs[e.dst].push_back(e.src);
  }
  for (auto& [k, v] : p.pair_edges) std::sort(v.begin(), v.end());
  for (auto& v : p.nbrs) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

// Iterative color refinement over (color, incident edge keys + directions +
// neighbor colors). Colors are interned jointly for both graphs so equal
// colors mean equal refinement classes.
void refine_colors(GraphProfile& a, GraphProfile& b,
                   std::map<std::tuple<double, std::string>, int>& keys,
                   MorphKind kind) {
  // per-vertex incidence templates: (direction, edge key, neighbor)
  auto incidences = [&](const GraphProfile& p) {
    std::vector<std::vector<std::tuple<int, int, int>>> inc(p.n);
    for (const Edge& e : p.g->edges) {
      int key = edge_key(keys, e, kind);
      inc[e.src].emplace_back(0, key, e.dst);
      inc[e.dst].emplace_back(1, key, e.src);
    }
    return inc;
  };
  auto inc_a = incidences(a), inc_b = incidences(b);
  a.color.assign(a.n, 0);
  b.color.assign(b.n, 0);
  int rounds = std::max(a.n, b.n) + 1;
  int num_colors = 1;
  for (int round = 0; round < rounds; ++round) {
    using Sig = std::pair<int, std::vector<std::tuple<int, int, int>>>;
    std::map<Sig, int> intern;
    auto next = [&](const GraphProfile& p, const auto& inc, std::vector<int>& out) {
      out.resize(p.n);
      for (int v = 0; v < p.n; ++v) {
        Sig s;
        s.first = p.color[v];
        s.second.reserve(inc[v].size());
        for (const auto& [dir, key, nbr] : inc[v])
          s.second.emplace_back(dir, key, p.color[nbr]);
        std::sort(s.second.begin(), s.second.end());
        auto [it, fresh] = intern.emplace(std::move(s), static_cast<int>(intern.size()));
        out[v] = it->second;
      }
    };
    std::vector<int> ca, cb;
    next(a, inc_a, ca);
    next(b, inc_b, cb);
    a.color = std::move(ca);
    b.color = std::move(cb);
    int now = static_cast<int>(intern.size());
    if (now == num_colors) break;
    num_colors = now;
  }
}

struct Searcher {
  GraphProfile a, b;
  IsoOptions opt;
  std::vector<int> order;      // source vertices in assignment order
  std::vector<int> vmap;       // partial map, -1 unassigned
  std::vector<char> used;      // destination vertices taken
  std::vector<int> assigned;   // source vertices assigned so far
  long long nodes = 0;
  bool capped = false;

  bool pair_consistent(int v, int w) {
    // all pairs between v (mapped to w) and previously assigned vertices
    for (int u : assigned) {
      int x = vmap[u];
      auto eq = [&](PairKey ka, PairKey kb) {
        auto ia = a.pair_edges.find(ka);
        auto ib = b.pair_edges.find(kb);
        bool ea = ia == a.pair_edges.end() || ia->second.empty();
        bool eb = ib == b.pair_edges.end() || ib->second.empty();
        if (ea != eb) return false;
        if (ea) return true;
        return ia->second == ib->second;
      };
      if (!eq(pack(v, u, a.n), pack(w, x, b.n))) return false;
      if (!eq(pack(u, v, a.n), pack(x, w, b.n))) return false;
    }
    return eq_loops(v, w);
  }

  bool eq_loops(int v, int w) {
    auto ia = a.pair_edges.find(pack(v, v, a.n));
    auto ib = b.pair_edges.find(pack(w, w, b.n));
    bool ea = ia == a.pair_edges.end() || ia->second.empty();
    bool eb = ib == b.pair_edges.end() || ib->second.empty();
    if (ea != eb) return false;
    return ea || ia->second == ib->second;
  }

  bool dfs(size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || b.color[w] != a.color[v]) continue;
      if (++nodes > opt.node_cap) {
        capped = true;
        return false;
      }
      if (!pair_consistent(v, w)) continue;
      vmap[v] = w;
      used[w] = 1;
      assigned.push_back(v);
      if (dfs(depth + 1)) return true;
      assigned.pop_back();
      used[w] = 0;
      vmap[v] = -1;
      if (capped) return false;
    }
    return false;
  }
};

std::vector<int> assignment_order(const GraphProfile& a, bool rooted, int root) {
  // breadth-first from the root (or a rarest-color vertex), so that almost
  // every new vertex is attached to an already-mapped one
  std::vector<int> color_freq(a.n, 0);
  std::vector<int> count;
  for (int c : a.color) {
    if (c >= static_cast<int>(count.size())) count.resize(c + 1, 0);
    ++count[c];
  }
  for (int v = 0; v < a.n; ++v) color_freq[v] = count[a.color[v]];
  std::vector<int> order;
  std::vector<char> seen(a.n, 0);
  auto bfs_from = [&](int s) {
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      order.push_back(v);
      for (int u : a.nbrs[v])
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
  };
  if (rooted) bfs_from(root);
  while (static_cast<int>(order.size()) < a.n) {
    int best = -1;
    for (int v = 0; v < a.n; ++v)
      if (!seen[v] && (best == -1 || color_freq[v] < color_freq[best])) best = v;
    bfs_from(best);
  }
  return order;
}

}  // namespace

IsoResult find_iso(const Graph& g, const Graph& h, const IsoOptions& opt) {
  if (g.directed != h.directed)
    throw std::invalid_argument("find_iso: mixed orientedness");
  IsoResult res;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
    return res;  // none
  if (g.num_vertices() > opt.vertex_cap) {
    res.status = SearchStatus::undecided;
    return res;
  }
  Searcher s;
  s.a.g = &g;
  s.b.g = &h;
  s.opt = opt;
  std::map<std::tuple<double, std::string>, int> keys;
  build_pairs(s.a, keys, opt.kind);
  build_pairs(s.b, keys, opt.kind);
  refine_colors(s.a, s.b, keys, opt.kind);
  // color histograms must agree
  {
    std::map<int, int> ha, hb;
    for (int c : s.a.color) ++ha[c];
    for (int c : s.b.color) ++hb[c];
    if (ha != hb) return res;
  }
  if (opt.rooted && s.a.color[opt.src_root] != s.b.color[opt.dst_root])
    return res;
  s.order = assignment_order(s.a, opt.rooted, opt.src_root);
  s.vmap.assign(g.num_vertices(), -1);
  s.used.assign(h.num_vertices(), 0);
  if (opt.rooted) {
    int v = s.order[0];  // == src_root
    int w = opt.dst_root;
    if (!s.pair_consistent(v, w)) return res;
    s.vmap[v] = w;
    s.used[w] = 1;
    s.assigned.push_back(v);
    if (!s.dfs(1)) {
      res.status = s.capped ? SearchStatus::undecided : SearchStatus::none;
      return res;
    }
  } else if (!s.dfs(0)) {
    res.status = s.capped ? SearchStatus::undecided : SearchStatus::none;
    return res;
  }
  auto emap = complete_edge_map(g, h, s.vmap, opt.kind);
  if (!emap) {
    // The per-pair multisets matched but no pairing-consistent edge map
    // exists; treat as unresolved rather than claiming non-isomorphism.
    res.status = SearchStatus::undecided;
    return res;
  }
  GraphMorphism m;
  m.src = share(g);
  m.dst = share(h);
  m.vertex_map = s.vmap;
  m.edge_map = *emap;
  std::string why;
  if (!verify_isomorphism(m, opt.kind, &why))
    throw std::logic_error("find_iso produced an invalid witness: " + why);
  res.status = SearchStatus::found;
  res.witness = std::move(m);
  return res;
}

OrbitResult automorphism_orbits(const Graph& g, MorphKind kind,
                                const IsoOptions& base) {
  OrbitResult out;
  const int n = g.num_vertices();
  // union-find over vertices; every discovered automorphism merges all its
  // cycles, which keeps the number of searches small
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (find(v) == find(w)) continue;
      IsoOptions opt = base;
      opt.kind = kind;
      opt.rooted = true;
      opt.src_root = v;
      opt.dst_root = w;
      IsoResult r = find_iso(g, g, opt);
      if (r.status == SearchStatus::undecided) {
        out.status = SearchStatus::undecided;
        return out;
      }
      if (r.status == SearchStatus::found)
        for (int u = 0; u < n; ++u) unite(u, r.witness->vertex_map[u]);
    }
  }
  out.orbit_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (out.orbit_of[root] == -1) out.orbit_of[root] = out.orbit_count++;
    out.orbit_of[v] = out.orbit_of[root];
  }
  return out;
}

Transitivity is_vertex_transitive(const Graph& g, MorphKind kind,
                                  const IsoOptions& opt) {
  if (g.num_vertices() == 0) return Transitivity::yes;
  OrbitResult r = automorphism_orbits(g, kind, opt);
  if (r.status == SearchStatus::undecided) return Transitivity::undecided;
  return r.orbit_count == 1 ? Transitivity::yes : Transitivity::no;
}

TransitivityWitnesses transitivity_witnesses(int k, int n, long long m) {
  if (m < n)
    throw std::invalid_argument("transitivity witnesses need M >= N");
  auto sw = share(spider_web(k, n, m));
  const long long kn = ipow(k, n);
  TransitivityWitnesses out;

  auto make = [&](auto vmapf, auto emapf) {
    GraphMorphism mor;
    mor.src = sw;
    mor.dst = sw;
    for (long long v = 0; v < kn; ++v)
      for (long long t = 0; t < m; ++t)
        mor.vertex_map.push_back(static_cast<int>(vmapf(v, t)));
    for (long long v = 0; v < kn; ++v)
      for (long long t = 0; t < m; ++t)
        for (int y = 0; y < k; ++y)
          mor.edge_map.push_back(static_cast<int>(emapf(v, t, y)));
    return mor;
  };

  // T = Id (x) eta: rotate the slice
  auto t_vertex = [&](long long v, long long t) { return v * m + (t + 1) % m; };
  out.rotation = make(t_vertex, [&](long long v, long long t, int y) {
    return t_vertex(v, t) * k + y;
  });

  // psi: increment symbol x_{N-t} on slices 0..N-1; edges keep their label
  // except at slice M-1 where the label shifts by one
  auto psi_vertex = [&](long long v, long long t) {
    if (t > n - 1) return v * m + t;
    // symbol x_{N-t} is 0-based position n-t-1; its base-k place value is
    // k^(n - (n-t-1) - 1) = k^t
    long long place = ipow(k, static_cast<int>(t));
    long long digit = (v / place) % k;
    long long v2 = v + ((digit + 1) % k - digit) * place;
    return v2 * m + t;
  };
  out.psi = make(psi_vertex, [&](long long v, long long t, int y) {
    int label = t == m - 1 ? (y + 1) % k : y;
    return psi_vertex(v, t) * k + label;
  });

  std::string why;
  if (!verify_isomorphism(out.rotation, MorphKind::strong, &why))
    throw std::logic_error("slice rotation failed verification: " + why);
  if (!verify_isomorphism(out.psi, MorphKind::weak, &why))
    throw std::logic_error("psi failed verification: " + why);

  // orbit closure of <T, psi> from ((0..0), 0)
  const int total = sw->num_vertices();
  std::vector<char> seen(total, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  GraphMorphism t_inv = invert(out.rotation);
  GraphMorphism p_inv = invert(out.psi);
  const GraphMorphism* gens[4] = {&out.rotation, &t_inv, &out.psi, &p_inv};
  for (size_t i = 0; i < queue.size(); ++i)
    for (const GraphMorphism* gen : gens) {
      int img = gen->vertex_map[queue[i]];
      if (!seen[img]) {
        seen[img] = 1;
        queue.push_back(img);
      }
    }
  out.orbit_covers_all = static_cast<int>(queue.size()) == total;
  return out;
}

}  // namespace spiderweb
