#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "spiderweb/families.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/lamplighter.hpp"
#include "spiderweb/products.hpp"

using namespace spiderweb;

namespace {

Graph random_oriented(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex();
  std::uniform_int_distribution<int> ne(1, 2 * n), anyv(0, n - 1);
  int edges = ne(rng);
  for (int i = 0; i < edges; ++i) g.add_edge(anyv(rng), anyv(rng));
  return g;
}

// all paths of a given signature between two vertices of the underlying
// graph, counted by exhaustive walk
long long count_paths(const Graph& oriented, int from, int to,
                      const std::vector<int>& signature) {
  Graph u = underlying(oriented);
  AdjacencyIndex idx(u);
  long long count = 0;
  const int m = oriented.num_edges();
  std::function<void(int, size_t)> walk = [&](int v, size_t i) {
    if (i == signature.size()) {
      if (v == to) ++count;
      return;
    }
    for (int e : idx.out[v]) {
      int sign = u.edges[e].id < m ? 1 : -1;
      if (sign == signature[i]) walk(u.edges[e].dst, i + 1);
    }
  };
  walk(from, 0);
  return count;
}

}  // namespace

TEST_CASE("tensor with the empty graph is empty") {
  Graph empty;
  Graph t = tensor(de_bruijn(2, 1), empty);
  CHECK(t.num_vertices() == 0);
  CHECK(t.num_edges() == 0);
}

TEST_CASE("tensor rejects mixed orientedness") {
  CHECK_THROWS_AS(tensor(de_bruijn(2, 1), underlying(cycle(2))),
                  std::invalid_argument);
}

TEST_CASE("spider web is the tensor of de Bruijn and cycle") {
  GraphMorphism w = spiderweb_tensor_iso(2, 1, 2);
  CHECK(verify_isomorphism(w, MorphKind::strong));
}

TEST_CASE("tensor adjacency is the Kronecker product") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_oriented(rng, 4);
    Graph h = random_oriented(rng, 4);
    auto a = adjacency_matrix_exact(g);
    auto b = adjacency_matrix_exact(h);
    auto t = adjacency_matrix_exact(tensor(g, h));
    const int nh = h.num_vertices();
    for (int i = 0; i < g.num_vertices(); ++i)
      for (int j = 0; j < g.num_vertices(); ++j)
        for (int x = 0; x < nh; ++x)
          for (int y = 0; y < nh; ++y)
            CHECK(t[i * nh + x][j * nh + y] == a[i][j] * b[x][y]);
  }
}

TEST_CASE("tensor is commutative up to isomorphism") {
  std::mt19937 rng(7);
  IsoOptions strong;
  strong.kind = MorphKind::strong;
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_oriented(rng, 3);
    Graph h = random_oriented(rng, 3);
    CHECK(find_iso(tensor(g, h), tensor(h, g), strong).status ==
          SearchStatus::found);
  }
}

TEST_CASE("star sizes multiply in tensors") {
  Graph g = de_bruijn(2, 2);
  Graph h = cycle(3);
  Graph t = tensor(g, h);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w = 0; w < h.num_vertices(); ++w)
      CHECK(degree(t, v * h.num_vertices() + w) == degree(g, v) * degree(h, w));
}

TEST_CASE("tensor of coverings is a covering") {
  GraphMorphism phi1 = gamma_covering(2, 1);
  GraphMorphism phi2 = spiderweb_slice_covering(2, 1, 2, 2);
  REQUIRE(is_covering(phi1));
  REQUIRE(is_covering(phi2));
  CHECK(is_covering(tensor_morphism(phi1, phi2)));
}

TEST_CASE("paths through a tensor lift from signature-matched factor paths") {
  Graph g = de_bruijn(2, 1);
  Graph h = cycle(2);
  Graph t = tensor(g, h);
  const int nh = h.num_vertices();
  std::vector<std::vector<int>> signatures = {{}, {1}, {-1}};
  for (int sig_len = 2; sig_len <= 4; ++sig_len) {
    std::vector<std::vector<int>> next;
    for (const auto& s : signatures)
      if (static_cast<int>(s.size()) == sig_len - 1)
        for (int step : {1, -1}) {
          auto extended = s;
          extended.push_back(step);
          next.push_back(extended);
        }
    signatures.insert(signatures.end(), next.begin(), next.end());
  }
  for (const auto& sigma : signatures)
    for (int x = 0; x < g.num_vertices(); ++x)
      for (int v = 0; v < nh; ++v)
        for (int y = 0; y < g.num_vertices(); ++y)
          for (int w = 0; w < nh; ++w)
            CHECK(count_paths(t, x * nh + v, y * nh + w, sigma) ==
                  count_paths(g, x, y, sigma) * count_paths(h, v, w, sigma));
}

TEST_CASE("line graphs of the small families") {
  IsoOptions weak;
  CHECK(find_iso(line_graph(de_bruijn(2, 0)), de_bruijn(2, 1), weak).status ==
        SearchStatus::found);
  CHECK(find_iso(line_graph(cycle(5)), cycle(5), weak).status ==
        SearchStatus::found);
  CHECK(find_iso(line_graph(de_bruijn(2, 2)), de_bruijn(2, 3), weak).status ==
        SearchStatus::found);
  CHECK_THROWS_AS(line_graph(underlying(cycle(3))), std::invalid_argument);
}

TEST_CASE("line graph of a tensor splits as a tensor of line graphs") {
  {
    GraphMorphism m = line_tensor_iso(cycle(3), cycle(3));
    CHECK(verify_isomorphism(m, MorphKind::weak));
  }
  {
    GraphMorphism m = line_tensor_iso(de_bruijn(2, 1), cycle(2));
    CHECK(m.src->num_vertices() == 8);
    CHECK(verify_isomorphism(m, MorphKind::weak));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_oriented(rng, 3);
    Graph h = random_oriented(rng, 3);
    CHECK(verify_isomorphism(line_tensor_iso(g, h), MorphKind::weak));
  }
}

TEST_CASE("explicit de Bruijn line map appends the successor symbol") {
  GraphMorphism m = de_bruijn_line_iso(2, 2);
  // the vertex for edge ("01", R1) goes to the word "011"
  int edge_01_r1 = 1 * 2 + 1;
  CHECK(m.dst->vertices[m.vertex_map[edge_01_r1]].name == "011");
  CHECK(m.src->num_edges() == m.dst->num_edges());
  CHECK(m.src->num_edges() == 2 * 8);
  for (int k : {2, 3})
    for (int n = 0; n <= 3; ++n)
      CHECK(verify_isomorphism(de_bruijn_line_iso(k, n), MorphKind::weak));
}

TEST_CASE("explicit schreier line map prepends the acting symbol") {
  GraphMorphism m = gamma_line_iso(2, 2);
  // the vertex for edge ("00", c1) goes to the word "100"
  int edge_00_c1 = 0 * 2 + 1;
  CHECK(m.dst->vertices[m.vertex_map[edge_00_c1]].name == "100");
  for (int n = 1; n <= 4; ++n)
    CHECK(verify_isomorphism(gamma_line_iso(2, n), MorphKind::weak));
  for (int n = 1; n <= 3; ++n)
    CHECK(verify_isomorphism(gamma_line_iso(3, n), MorphKind::weak));
}

TEST_CASE("gamma to de Bruijn by induction through line graphs") {
  IsoWitness base = gamma_bruijn_iso(2, 0);
  CHECK(verify_isomorphism(base.morphism, MorphKind::weak));
  IsoWitness one = gamma_bruijn_iso(3, 1);
  CHECK(verify_isomorphism(one.morphism, MorphKind::weak));
  CHECK(one.kind == MorphKind::weak);
}

TEST_CASE("spider web line graph climbs the tower") {
  IsoOptions weak;
  weak.vertex_cap = 1024;
  CHECK(find_iso(line_graph(spider_web(2, 1, 2)), spider_web(2, 2, 2), weak)
            .status == SearchStatus::found);
}
