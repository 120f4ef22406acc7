#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spiderweb/ball.hpp"
#include "spiderweb/families.hpp"
#include "spiderweb/graph.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/json_io.hpp"

using namespace spiderweb;

namespace {

Graph random_oriented(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex();
  std::uniform_int_distribution<int> ne(0, 2 * n), anyv(0, n - 1);
  int edges = ne(rng);
  for (int i = 0; i < edges; ++i) g.add_edge(anyv(rng), anyv(rng));
  return g;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.directed != b.directed || a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges())
    return false;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (a.vertices[v].name != b.vertices[v].name) return false;
  for (int e = 0; e < a.num_edges(); ++e) {
    const Edge &x = a.edges[e], &y = b.edges[e];
    if (x.src != y.src || x.dst != y.dst || x.label != y.label ||
        x.weight != y.weight || x.inverse != y.inverse)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("underlying doubles edges and pairs inverses") {
  Graph empty;
  CHECK(underlying(empty).num_edges() == 0);

  Graph u = underlying(de_bruijn(2, 1));
  CHECK(u.num_edges() == 8);
  for (int v = 0; v < u.num_vertices(); ++v) CHECK(degree(u, v) == 4);
  validate(u);
  for (const Edge& e : u.edges) {
    CHECK(u.edges[e.inverse].inverse == e.id);
    CHECK(e.inverse != e.id);
    CHECK(u.edges[e.inverse].src == e.dst);
  }

  Graph hex = underlying(cycle(3));
  CHECK(hex.num_edges() == 6);
  for (int v = 0; v < 3; ++v) CHECK(degree(hex, v) == 2);
}

TEST_CASE("labels on formal inverses get the inversion suffix") {
  Graph u = underlying(de_bruijn(2, 1));
  CHECK(u.edges[0].label == "R0");
  CHECK(u.edges[u.edges[0].inverse].label == "R0^-1");
  CHECK(invert_label("R0^-1") == "R0");
  CHECK(invert_label("") == "");
}

TEST_CASE("a non-oriented loop contributes 2 to the degree") {
  Graph g;
  g.add_vertex("v");
  g.add_undirected_edge(0, 0);
  validate(g);
  CHECK(degree(g, 0) == 2);
}

TEST_CASE("choose_orientation picks one edge per pair and round trips") {
  Graph c4 = underlying(cycle(4));
  Graph o = choose_orientation(c4);
  CHECK(o.num_edges() == 4);
  IsoOptions strong;
  strong.kind = MorphKind::strong;
  CHECK(find_iso(o, cycle(4), strong).status == SearchStatus::found);

  Graph base = underlying(de_bruijn(2, 2));
  Graph round = underlying(choose_orientation(base));
  CHECK(find_iso(round, base, strong).status == SearchStatus::found);

  Graph oriented = de_bruijn(2, 1);
  CHECK_THROWS_AS(choose_orientation(oriented), std::invalid_argument);
}

TEST_CASE("adjacency matrices") {
  CHECK(adjacency_matrix_exact(de_bruijn(2, 1)) ==
        std::vector<std::vector<long long>>{{1, 1}, {1, 1}});
  CHECK(adjacency_matrix_exact(underlying(de_bruijn(2, 1))) ==
        std::vector<std::vector<long long>>{{2, 2}, {2, 2}});
  CHECK(adjacency_matrix_exact(cycle(3)) ==
        std::vector<std::vector<long long>>{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

TEST_CASE("underlying adjacency is A plus A transpose") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_oriented(rng, 7);
    auto a = adjacency_matrix_exact(g);
    auto u = adjacency_matrix_exact(underlying(g));
    for (int i = 0; i < g.num_vertices(); ++i)
      for (int j = 0; j < g.num_vertices(); ++j)
        CHECK(u[i][j] == a[i][j] + a[j][i]);
  }
}

TEST_CASE("balls and the marked-graph distance") {
  Graph b1 = de_bruijn(2, 1);
  CHECK(rooted_distance(b1, 0, b1, 0) == RootedDistance{0, 1});

  // radius 0 and 1 agree, radius 2 differs: C4 closes up, C6 does not
  CHECK(rooted_distance(cycle(4), 0, cycle(6), 0) == RootedDistance{1, 3});

  // (B_1, "0") vs (B_2, "00"): both have a loop at the root, the radius-1
  // balls already differ (2 vertices/4 edges vs 3 vertices/5 edges)
  Graph b2 = de_bruijn(2, 2);
  RootedBall small = ball(b1, 0, 1);
  RootedBall large = ball(b2, 0, 1);
  CHECK(small.graph.num_vertices() == 2);
  CHECK(large.graph.num_vertices() == 3);
  IsoOptions rooted;
  rooted.rooted = true;
  CHECK(find_iso(ball(b1, 0, 0).graph, ball(b2, 0, 0).graph, rooted).status ==
        SearchStatus::found);
  CHECK(find_iso(small.graph, large.graph, rooted).status == SearchStatus::none);
  CHECK(rooted_distance(b1, 0, b2, 0) == RootedDistance{1, 2});
}

TEST_CASE("rooted distance is a pseudometric on samples") {
  std::vector<std::pair<Graph, int>> pool = {
      {de_bruijn(2, 1), 0}, {de_bruijn(2, 2), 0}, {cycle(4), 0},
      {cycle(6), 1},        {spider_web(2, 1, 2), 0}};
  for (const auto& [g, v] : pool)
    for (const auto& [h, w] : pool) {
      double dgh = rooted_distance(g, v, h, w).value();
      double dhg = rooted_distance(h, w, g, v).value();
      CHECK(dgh == doctest::Approx(dhg));
      for (const auto& [f, u] : pool) {
        double dgf = rooted_distance(g, v, f, u).value();
        double dfh = rooted_distance(f, u, h, w).value();
        CHECK(dgh <= dgf + dfh + 1e-12);
      }
    }
}

TEST_CASE("oriented distance dominates the underlying distance") {
  std::vector<std::pair<Graph, int>> pool = {{de_bruijn(2, 1), 0},
                                             {de_bruijn(2, 2), 0},
                                             {cycle(4), 0},
                                             {spider_web(2, 2, 2), 0},
                                             {spider_web(2, 2, 1), 0}};
  for (const auto& [g, v] : pool)
    for (const auto& [h, w] : pool) {
      double oriented = rooted_distance(g, v, h, w).value();
      double under = rooted_distance(g, v, h, w, MorphKind::weak, true).value();
      CHECK(oriented >= under - 1e-12);
    }
}

TEST_CASE("json round trip is bit exact") {
  for (const Graph& g :
       {de_bruijn(2, 2), underlying(cycle(3)), theta_graph(2, 3),
        spider_web(2, 1, 2)}) {
    std::string text = to_json(g);
    Graph back = from_json(text);
    CHECK(graphs_equal(g, back));
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("dot export carries labels") {
  std::string dot = to_dot(de_bruijn(2, 1));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"R0\"") != std::string::npos);
  std::string undirected = to_dot(underlying(cycle(3)));
  CHECK(undirected.find(" -- ") != std::string::npos);
}

TEST_CASE("validate rejects broken involutions") {
  Graph g;
  g.add_vertex();
  g.add_vertex();
  g.directed = false;
  g.add_edge(0, 1);  // no inverse
  CHECK_THROWS_AS(validate(g), std::invalid_argument);
  Graph fixed;
  fixed.directed = false;
  fixed.add_vertex();
  fixed.add_vertex();
  fixed.add_undirected_edge(0, 1);
  validate(fixed);
}
