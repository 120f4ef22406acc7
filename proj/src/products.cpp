#include "spiderweb/products.hpp"

#include <stdexcept>

#include "spiderweb/families.hpp"
#include "spiderweb/lamplighter.hpp"

namespace spiderweb {

static bool unlabeled(const Graph& g) {
  for (const Edge& e : g.edges)
    if (!e.label.empty()) return false;
  return true;
}

Graph tensor(const Graph& g, const Graph& h) {
  if (g.directed != h.directed)
    throw std::invalid_argument("tensor: mixed orientedness");
  Graph t;
  t.directed = g.directed;
  t.window_segment = g.window_segment || h.window_segment;
  const int nh = h.num_vertices();
  const int mh = h.num_edges();
  for (const Vertex& v : g.vertices)
    for (const Vertex& w : h.vertices)
      t.add_vertex("(" + v.name + "|" + w.name + ")");
  const bool keep_left = unlabeled(h) && !unlabeled(g);
  const bool keep_right = unlabeled(g) && !unlabeled(h);
  for (const Edge& e : g.edges)
    for (const Edge& f : h.edges) {
      std::string label;
      if (keep_left)
        label = e.label;
      else if (keep_right)
        label = f.label;
      else if (!e.label.empty() || !f.label.empty())
        label = "(" + e.label + "|" + f.label + ")";
      int id = t.add_edge(e.src * nh + f.src, e.dst * nh + f.dst, label,
                          e.weight * f.weight);
      if (!g.directed) t.edges[id].inverse = e.inverse * mh + f.inverse;
    }
  return t;
}

GraphMorphism tensor_morphism(const GraphMorphism& a, const GraphMorphism& b) {
  GraphMorphism m;
  m.src = share(tensor(*a.src, *b.src));
  m.dst = share(tensor(*a.dst, *b.dst));
  const int nb_src = b.src->num_vertices();
  const int nb_dst = b.dst->num_vertices();
  const int mb_src = b.src->num_edges();
  const int mb_dst = b.dst->num_edges();
  for (int v = 0; v < a.src->num_vertices(); ++v)
    for (int w = 0; w < nb_src; ++w)
      m.vertex_map.push_back(a.vertex_map[v] * nb_dst + b.vertex_map[w]);
  for (int e = 0; e < a.src->num_edges(); ++e)
    for (int f = 0; f < mb_src; ++f)
      m.edge_map.push_back(a.edge_map[e] * mb_dst + b.edge_map[f]);
  return m;
}

LineGraph line_graph_indexed(const Graph& g) {
  if (!g.directed)
    throw std::invalid_argument("line_graph is defined for oriented graphs");
  LineGraph lg;
  lg.base_edges = g.num_edges();
  for (const Edge& e : g.edges)
    lg.graph.add_vertex("(" + g.vertices[e.src].name + ";" + e.label + ")");
  AdjacencyIndex idx(g);
  for (const Edge& e : g.edges)
    for (int f : idx.out[e.dst]) {
      int id = lg.graph.add_edge(e.id, f, g.edges[f].label);
      lg.edge_of_pair[static_cast<long long>(e.id) * lg.base_edges + f] = id;
    }
  return lg;
}

int LineGraph::pair_edge(int e, int f) const {
  auto it = edge_of_pair.find(static_cast<long long>(e) * base_edges + f);
  if (it == edge_of_pair.end())
    throw std::invalid_argument("edges do not compose in the line graph");
  return it->second;
}

Graph line_graph(const Graph& g) { return line_graph_indexed(g).graph; }

GraphMorphism line_morphism(const GraphMorphism& m) {
  LineGraph src = line_graph_indexed(*m.src);
  LineGraph dst = line_graph_indexed(*m.dst);
  GraphMorphism lm;
  lm.vertex_map = m.edge_map;
  lm.edge_map.resize(src.graph.num_edges());
  for (const auto& [key, id] : src.edge_of_pair) {
    int e = static_cast<int>(key / src.base_edges);
    int f = static_cast<int>(key % src.base_edges);
    lm.edge_map[id] = dst.pair_edge(m.edge_map[e], m.edge_map[f]);
  }
  lm.src = share(std::move(src.graph));
  lm.dst = share(std::move(dst.graph));
  return lm;
}

GraphMorphism line_tensor_iso(const Graph& g, const Graph& h) {
  if (!g.directed || !h.directed)
    throw std::invalid_argument("line_tensor_iso needs oriented graphs");
  Graph t = tensor(g, h);
  LineGraph lt = line_graph_indexed(t);
  LineGraph lg = line_graph_indexed(g);
  LineGraph lh = line_graph_indexed(h);
  Graph target = tensor(lg.graph, lh.graph);
  const int mh = h.num_edges();
  GraphMorphism m;
  // vertex of L(g (x) h) = edge (e,f) of the tensor = e*mh + f, which is the
  // index of the vertex (e, f) in L(g) (x) L(h)
  m.vertex_map.resize(lt.graph.num_vertices());
  for (int v = 0; v < lt.graph.num_vertices(); ++v) m.vertex_map[v] = v;
  m.edge_map.resize(lt.graph.num_edges());
  const int lh_edges = lh.graph.num_edges();
  for (const auto& [key, id] : lt.edge_of_pair) {
    int ef = static_cast<int>(key / lt.base_edges);   // edge (e,f) of t
    int ef2 = static_cast<int>(key % lt.base_edges);  // edge (e',f') of t
    int e = ef / mh, f = ef % mh;
    int e2 = ef2 / mh, f2 = ef2 % mh;
    m.edge_map[id] = lg.pair_edge(e, e2) * lh_edges + lh.pair_edge(f, f2);
  }
  m.src = share(std::move(lt.graph));
  m.dst = share(std::move(target));
  return m;
}

GraphMorphism de_bruijn_line_iso(int k, int n) {
  LineGraph lb = line_graph_indexed(de_bruijn(k, n));
  Graph target = de_bruijn(k, n + 1);
  GraphMorphism m;
  // phi((x_1..x_N), R_y) = (x_1..x_N y): edge v*k+y of B_N becomes vertex
  // v*k+y of B_{N+1}
  m.vertex_map.resize(lb.graph.num_vertices());
  for (int v = 0; v < lb.graph.num_vertices(); ++v) m.vertex_map[v] = v;
  m.edge_map.resize(lb.graph.num_edges());
  for (const auto& [key, id] : lb.edge_of_pair) {
    int e = static_cast<int>(key / lb.base_edges);
    int f = static_cast<int>(key % lb.base_edges);
    int z = f % k;  // the successor edge's label R_z
    m.edge_map[id] = e * k + z;
  }
  m.src = share(std::move(lb.graph));
  m.dst = share(std::move(target));
  return m;
}

GraphMorphism gamma_line_iso(int k, int n) {
  LineGraph lg = line_graph_indexed(schreier_level_graph(k, n));
  Graph target = schreier_level_graph(k, n + 1);
  const long long kn = ipow(k, n);
  GraphMorphism m;
  // phi((x_1..x_N), c_i) = (i x_1..x_N): edge v*k+i becomes vertex i*k^N+v
  m.vertex_map.resize(lg.graph.num_vertices());
  for (int ev = 0; ev < lg.graph.num_vertices(); ++ev) {
    int v = ev / k, i = ev % k;
    m.vertex_map[ev] = static_cast<int>(i * kn + v);
  }
  m.edge_map.resize(lg.graph.num_edges());
  for (const auto& [key, id] : lg.edge_of_pair) {
    int e = static_cast<int>(key / lg.base_edges);
    int f = static_cast<int>(key % lg.base_edges);
    int i = e % k, j = f % k;
    int shifted = ((j - i) % k + k) % k;  // image edge label c_{j-i}
    m.edge_map[id] = m.vertex_map[e] * k + shifted;
  }
  m.src = share(std::move(lg.graph));
  m.dst = share(std::move(target));
  return m;
}

IsoWitness gamma_bruijn_iso(int k, int n) {
  IsoWitness w;
  w.kind = MorphKind::weak;
  if (n == 0) {
    // both roses: identify the loop c_i with the loop R_i
    GraphMorphism m;
    m.src = share(schreier_level_graph(k, 0));
    m.dst = share(de_bruijn(k, 0));
    m.vertex_map = {0};
    for (int i = 0; i < k; ++i) m.edge_map.push_back(i);
    w.morphism = std::move(m);
    return w;
  }
  GraphMorphism prev = gamma_bruijn_iso(k, n - 1).morphism;
  // Gamma_N -> L(Gamma_{N-1}) -> L(B_{N-1}) -> B_N
  GraphMorphism down = invert(gamma_line_iso(k, n - 1));
  GraphMorphism lifted = line_morphism(prev);
  GraphMorphism up = de_bruijn_line_iso(k, n - 1);
  w.morphism = compose(up, compose(lifted, down));
  // keep the canonical endpoint graphs rather than the line-functor copies
  w.morphism.src = down.src;
  w.morphism.dst = up.dst;
  return w;
}

GraphMorphism spiderweb_tensor_iso(int k, int n, long long m) {
  GraphMorphism mor;
  mor.src = share(spider_web(k, n, m));
  mor.dst = share(tensor(de_bruijn(k, n), cycle(m)));
  const long long kn = ipow(k, n);
  mor.vertex_map.resize(mor.src->num_vertices());
  for (long long v = 0; v < kn; ++v)
    for (long long i = 0; i < m; ++i)
      mor.vertex_map[v * m + i] = static_cast<int>(v * m + i);
  mor.edge_map.resize(mor.src->num_edges());
  for (long long v = 0; v < kn; ++v)
    for (long long i = 0; i < m; ++i)
      for (int y = 0; y < k; ++y)
        mor.edge_map[(v * m + i) * k + y] =
            static_cast<int>((v * k + y) * m + i);
  return mor;
}

GraphMorphism spiderweb_debruijn_iso(int k, int n) {
  GraphMorphism mor;
  mor.src = share(spider_web(k, n, 1));
  mor.dst = share(de_bruijn(k, n));
  const int total = mor.src->num_vertices();
  mor.vertex_map.resize(total);
  for (int v = 0; v < total; ++v) mor.vertex_map[v] = v;
  mor.edge_map.resize(mor.src->num_edges());
  for (int e = 0; e < mor.src->num_edges(); ++e) mor.edge_map[e] = e;
  return mor;
}

GraphMorphism gamma_covering(int k, int n) {
  GraphMorphism m;
  m.src = share(schreier_level_graph(k, n + 1));
  m.dst = share(schreier_level_graph(k, n));
  for (int v = 0; v < m.src->num_vertices(); ++v)
    m.vertex_map.push_back(v / k);  // drop the last symbol = prefix of length N
  for (const Edge& e : m.src->edges)
    m.edge_map.push_back(m.vertex_map[e.src] * k + e.id % k);
  return m;
}

GraphMorphism spiderweb_slice_covering(int k, int n, long long m, long long i) {
  if (i < 1) throw std::invalid_argument("slice covering needs i >= 1");
  GraphMorphism mor;
  mor.src = share(spider_web(k, n, i * m));
  mor.dst = share(spider_web(k, n, m));
  const long long im = i * m;
  const long long kn = ipow(k, n);
  for (long long v = 0; v < kn; ++v)
    for (long long j = 0; j < im; ++j)
      mor.vertex_map.push_back(static_cast<int>(v * m + j % m));
  for (long long v = 0; v < kn; ++v)
    for (long long j = 0; j < im; ++j)
      for (int y = 0; y < k; ++y)
        mor.edge_map.push_back(
            static_cast<int>((v * m + j % m) * k + y));
  return mor;
}

GraphMorphism debruijn_drop_first(int k, int n) {
  if (n < 1) throw std::invalid_argument("drop-first needs N >= 1");
  GraphMorphism m;
  m.src = share(de_bruijn(k, n));
  m.dst = share(de_bruijn(k, n - 1));
  const long long kn1 = ipow(k, n - 1);
  for (int v = 0; v < m.src->num_vertices(); ++v)
    m.vertex_map.push_back(static_cast<int>(v % kn1));
  for (const Edge& e : m.src->edges)
    m.edge_map.push_back(m.vertex_map[e.src] * k + e.id % k);
  return m;
}

}  // namespace spiderweb
