#include "spiderweb/morphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace spiderweb {

std::shared_ptr<const Graph> share(Graph g) {
  return std::make_shared<const Graph>(std::move(g));
}

static bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool is_morphism(const GraphMorphism& m, std::string* why) {
  const Graph& g = *m.src;
  const Graph& h = *m.dst;
  if (g.directed != h.directed) return fail(why, "mixed orientedness");
  if (static_cast<int>(m.vertex_map.size()) != g.num_vertices() ||
      static_cast<int>(m.edge_map.size()) != g.num_edges())
    return fail(why, "map sizes do not match the source graph");
  for (int v : m.vertex_map)
    if (v < 0 || v >= h.num_vertices()) return fail(why, "vertex image out of range");
  for (int e : m.edge_map)
    if (e < 0 || e >= h.num_edges()) return fail(why, "edge image out of range");
  for (const Edge& e : g.edges) {
    const Edge& f = h.edges[m.edge_map[e.id]];
    if (f.src != m.vertex_map[e.src] || f.dst != m.vertex_map[e.dst])
      return fail(why, "iota/tau do not commute at edge " + std::to_string(e.id));
    if (!g.directed && m.edge_map[e.inverse] != f.inverse)
      return fail(why, "involution does not commute at edge " + std::to_string(e.id));
  }
  return true;
}

bool preserves_labels(const GraphMorphism& m) {
  for (const Edge& e : m.src->edges)
    if (e.label != m.dst->edges[m.edge_map[e.id]].label) return false;
  return true;
}

bool preserves_weights(const GraphMorphism& m) {
  for (const Edge& e : m.src->edges)
    if (e.weight != m.dst->edges[m.edge_map[e.id]].weight) return false;
  return true;
}

static bool is_bijection(const std::vector<int>& map, int target_size) {
  if (static_cast<int>(map.size()) != target_size) return false;
  std::vector<char> hit(target_size, 0);
  for (int v : map) {
    if (v < 0 || v >= target_size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool verify_isomorphism(const GraphMorphism& m, MorphKind kind,
                        std::string* why) {
  if (!is_morphism(m, why)) return false;
  if (!is_bijection(m.vertex_map, m.dst->num_vertices()))
    return fail(why, "vertex map is not a bijection");
  if (!is_bijection(m.edge_map, m.dst->num_edges()))
    return fail(why, "edge map is not a bijection");
  if (!preserves_weights(m)) return fail(why, "weights not preserved");
  if (kind == MorphKind::strong && !preserves_labels(m))
    return fail(why, "labels not preserved");
  return true;
}

GraphMorphism invert(const GraphMorphism& m) {
  if (!is_bijection(m.vertex_map, m.dst->num_vertices()) ||
      !is_bijection(m.edge_map, m.dst->num_edges()))
    throw std::invalid_argument("cannot invert a non-bijective morphism");
  GraphMorphism r;
  r.src = m.dst;
  r.dst = m.src;
  r.vertex_map.resize(m.vertex_map.size());
  r.edge_map.resize(m.edge_map.size());
  for (size_t i = 0; i < m.vertex_map.size(); ++i) r.vertex_map[m.vertex_map[i]] = i;
  for (size_t i = 0; i < m.edge_map.size(); ++i) r.edge_map[m.edge_map[i]] = i;
  return r;
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
  if (inner.dst->num_vertices() != outer.src->num_vertices() ||
      inner.dst->num_edges() != outer.src->num_edges())
    throw std::invalid_argument("composition: middle graphs do not match");
  GraphMorphism r;
  r.src = inner.src;
  r.dst = outer.dst;
  r.vertex_map.reserve(inner.vertex_map.size());
  r.edge_map.reserve(inner.edge_map.size());
  for (int v : inner.vertex_map) r.vertex_map.push_back(outer.vertex_map[v]);
  for (int e : inner.edge_map) r.edge_map.push_back(outer.edge_map[e]);
  return r;
}

std::optional<std::vector<int>> complete_edge_map(const Graph& g,
                                                  const Graph& h,
                                                  const std::vector<int>& vmap,
                                                  MorphKind kind) {
  auto key = [&](const Graph& gr, const Edge& e, bool image) {
    int s = image ? e.src : vmap[e.src];
    int d = image ? e.dst : vmap[e.dst];
    std::string l1, l2;
    if (kind == MorphKind::strong) {
      l1 = e.label;
      l2 = gr.directed ? std::string() : gr.edges[e.inverse].label;
    }
    return std::make_tuple(s, d, e.weight, l1, l2);
  };
  std::map<std::tuple<int, int, double, std::string, std::string>,
           std::vector<int>>
      buckets;
  for (const Edge& e : h.edges) buckets[key(h, e, true)].push_back(e.id);
  std::vector<int> emap(g.num_edges(), -1);
  for (const Edge& e : g.edges) {
    if (emap[e.id] != -1) continue;  // partner already placed
    auto it = buckets.find(key(g, e, false));
    if (it == buckets.end() || it->second.empty()) return std::nullopt;
    int target = it->second.back();
    it->second.pop_back();
    emap[e.id] = target;
    if (!g.directed) {
      int tbar = h.edges[target].inverse;
      auto jt = buckets.find(key(g, g.edges[e.inverse], false));
      if (jt == buckets.end()) return std::nullopt;
      auto pos = std::find(jt->second.begin(), jt->second.end(), tbar);
      if (pos == jt->second.end()) return std::nullopt;
      jt->second.erase(pos);
      emap[e.inverse] = tbar;
    }
  }
  return emap;
}

bool is_covering(const GraphMorphism& m) {
  std::string why;
  if (!is_morphism(m, &why))
    throw std::invalid_argument("is_covering: not a morphism: " + why);
  const Graph& g = *m.src;
  const Graph& h = *m.dst;
  AdjacencyIndex gi(g), hi(h);
  auto star_bijective = [&](const std::vector<int>& at_v,
                            const std::vector<int>& at_image) {
    if (at_v.size() != at_image.size()) return false;
    std::vector<char> hit(h.num_edges(), 0);
    for (int e : at_v) {
      int f = m.edge_map[e];
      if (hit[f]) return false;  // star map not injective
      hit[f] = 1;
    }
    return true;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    int w = m.vertex_map[v];
    if (!star_bijective(gi.out[v], hi.out[w])) return false;
    if (g.directed && !star_bijective(gi.in[v], hi.in[w])) return false;
  }
  return true;
}

}  // namespace spiderweb
