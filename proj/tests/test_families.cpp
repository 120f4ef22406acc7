#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "spiderweb/derangement.hpp"
#include "spiderweb/families.hpp"
#include "spiderweb/morphism.hpp"
#include "spiderweb/products.hpp"

using namespace spiderweb;

namespace {

int find_vertex(const Graph& g, const std::string& name) {
  for (const Vertex& v : g.vertices)
    if (v.name == name) return v.id;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("de Bruijn graphs") {
  Graph b1 = de_bruijn(2, 1);
  CHECK(b1.num_vertices() == 2);
  CHECK(b1.num_edges() == 4);
  // loops at 0 and 1 carry the labels R0 and R1
  for (const Edge& e : b1.edges)
    if (e.src == e.dst)
      CHECK(e.label == "R" + b1.vertices[e.src].name);

  Graph rose = de_bruijn(2, 0);
  CHECK(rose.num_vertices() == 1);
  CHECK(rose.num_edges() == 2);
  for (const Edge& e : rose.edges) CHECK(e.src == e.dst);

  Graph b32 = de_bruijn(3, 2);
  CHECK(b32.num_vertices() == 9);
  CHECK(b32.num_edges() == 27);
  std::set<std::string> succ;
  int v01 = find_vertex(b32, "01");
  for (const Edge& e : b32.edges)
    if (e.src == v01) succ.insert(b32.vertices[e.dst].name);
  CHECK(succ == std::set<std::string>{"10", "11", "12"});
}

TEST_CASE("cycles and windows") {
  Graph c1 = cycle(1);
  CHECK(c1.num_vertices() == 1);
  CHECK(c1.num_edges() == 1);
  CHECK(c1.edges[0].src == c1.edges[0].dst);

  CHECK(adjacency_matrix_exact(cycle(4)) ==
        std::vector<std::vector<long long>>{
            {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});

  Graph line = cycle_window(3);
  CHECK(line.num_vertices() == 7);
  CHECK(line.num_edges() == 6);
  CHECK(line.window_segment);
}

TEST_CASE("spider webs") {
  Graph s = spider_web(2, 3, 3);
  CHECK(s.num_vertices() == 24);
  CHECK(s.num_edges() == 48);

  // N = 0 is the thick cycle: k parallel edges along each step
  Graph thick = spider_web(3, 0, 4);
  CHECK(thick.num_vertices() == 4);
  CHECK(thick.num_edges() == 12);
  std::map<std::pair<int, int>, int> mult;
  for (const Edge& e : thick.edges) ++mult[{e.src, e.dst}];
  for (const auto& [pair, count] : mult) CHECK(count == 3);

  // hand-expanded underlying adjacency, vertex order (0,0),(1,0),(0,1),(1,1)
  Graph u = underlying(spider_web(2, 1, 2));
  auto a = adjacency_matrix_exact(u);
  std::vector<int> order = {find_vertex(u, "(0,0)"), find_vertex(u, "(1,0)"),
                            find_vertex(u, "(0,1)"), find_vertex(u, "(1,1)")};
  std::vector<std::vector<long long>> expect = {
      {0, 0, 2, 2}, {0, 0, 2, 2}, {2, 2, 0, 0}, {2, 2, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a[order[i]][order[j]] == expect[i][j]);

  Graph w = spider_web_window(2, 1, 2);
  CHECK(w.num_vertices() == 2 * 5);
  CHECK(w.num_edges() == 2 * 4 * 2);
  CHECK(w.window_segment);
}

TEST_CASE("spider_web(k,N,1) is strongly isomorphic to the de Bruijn graph") {
  for (int k : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      GraphMorphism m = spiderweb_debruijn_iso(k, n);
      CHECK(verify_isomorphism(m, MorphKind::strong));
    }
}

TEST_CASE("spider webs are connected") {
  for (int k : {2, 3})
    for (int n = 0; n <= 3; ++n)
      for (long long m = 1; m <= 4; ++m)
        CHECK(component_count(spider_web(k, n, m)) == 1);
}

TEST_CASE("theta graphs match the expected shape") {
  Graph t = theta_graph(2, 3);
  CHECK(t.num_vertices() == 8);
  CHECK(t.num_edges() == 4);  // loop + path(1) + path(2)
  for (const Edge& e : t.edges) CHECK(e.weight == 2.0);
  std::vector<int> comp = components(t);
  std::map<int, int> sizes;
  for (int c : comp) ++sizes[c];
  std::multiset<int> size_multiset;
  for (const auto& [c, s] : sizes) size_multiset.insert(s);
  CHECK(size_multiset == std::multiset<int>{1, 1, 1, 2, 3});

  Graph tm = theta_graph_m(2, 3, 2);
  CHECK(tm.num_vertices() == 16);
  CHECK(tm.num_edges() == 2 + 2 * 1 + 2 * 2);
  std::map<int, int> sizes2;
  for (int c : components(tm)) ++sizes2[c];
  std::multiset<int> multiset2;
  for (const auto& [c, s] : sizes2) multiset2.insert(s);
  CHECK(multiset2 == std::multiset<int>{1, 1, 1, 1, 2, 2, 2, 3, 3});
}

TEST_CASE("theta vertex counts equal k^N and M k^N") {
  for (int k : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      CHECK(theta_graph(k, n).num_vertices() == ipow(k, n));
      CHECK(theta_graph_m(k, n, 3).num_vertices() == 3 * ipow(k, n));
    }
}

TEST_CASE("family constructors reject bad parameters") {
  CHECK_THROWS_AS(de_bruijn(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(cycle(0), std::invalid_argument);
  CHECK_THROWS_AS(spider_web(2, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(theta_graph_m(2, 2, 0), std::invalid_argument);
}
