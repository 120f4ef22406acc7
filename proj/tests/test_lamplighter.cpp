#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "spiderweb/families.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/lamplighter.hpp"
#include "spiderweb/products.hpp"

using namespace spiderweb;

namespace {

LampElement random_element(std::mt19937& rng, int k) {
  LampElement g = LampElement::identity(k);
  std::uniform_int_distribution<int> pos(-4, 4), val(1, k - 1), shift(-4, 4),
      lamps(0, 3);
  int count = lamps(rng);
  for (int i = 0; i < count; ++i) g.lamps[pos(rng)] = val(rng);
  g.shift = shift(rng);
  return g;
}

Word random_word(std::mt19937& rng, int k, int length) {
  Word w;
  std::uniform_int_distribution<int> gen(1, k), sign(0, 1);
  for (int i = 0; i < length; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace

TEST_CASE("generator arithmetic") {
  // c^k = 1 and [c, b c b^-1] = 1
  for (int k : {2, 3, 6}) {
    for (const Word& w : classic_relators(k, 4))
      CHECK(evaluate(w, k).is_identity());
    for (const Word& w : xgen_relators(k, 4))
      CHECK(evaluate(w, k).is_identity());
  }
  // c_1 b^-1 = c: the lamp at the origin
  LampElement c = evaluate({2, -1}, 2);
  CHECK(c.lamps == std::map<long long, int>{{0, 1}});
  CHECK(c.shift == 0);
  CHECK_THROWS_AS(multiply(LampElement::identity(2), LampElement::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int k = trial % 2 ? 2 : 3;
    LampElement a = random_element(rng, k), b = random_element(rng, k),
                c = random_element(rng, k);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)).is_identity());
    CHECK(multiply(a, LampElement::identity(k)) == a);
  }
}

TEST_CASE("normal form round trips through words") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    LampElement g = random_element(rng, 3);
    CHECK(evaluate(word_of_element(g), 3) == g);
  }
}

TEST_CASE("exponent of the generating set") {
  CHECK(exp_x(Word{3}) == 1);  // a single generator
  Word cb = {2, -1};           // c_1 b^-1
  Word ck;
  for (int i = 0; i < 2; ++i) ck.insert(ck.end(), cb.begin(), cb.end());
  CHECK(exp_x(ck) == 0);
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 3, 12);
    CHECK(exp_x(w) == exp_x(evaluate(w, 3)));
  }
}

TEST_CASE("level action of the generators") {
  // k=2: the c_1 orbit of 00 is 00 -> 10 -> 01 -> 11 -> 00
  std::string x = "00";
  std::vector<std::string> orbit;
  for (int i = 0; i < 4; ++i) {
    x = act_generator(2, 1, false, x);
    orbit.push_back(x);
  }
  CHECK(orbit == std::vector<std::string>{"10", "01", "11", "00"});
  for (int n = 1; n <= 6; ++n)
    CHECK(act_generator(2, 0, false, std::string(n, '0')) ==
          std::string(n, '0'));
  // generator inverse really inverts
  std::mt19937 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    std::string y(5, '0');
    for (char& c : y) c = static_cast<char>('0' + rng() % 3);
    for (int r = 0; r < 3; ++r)
      CHECK(act_generator(3, r, true, act_generator(3, r, false, y)) == y);
  }
}

TEST_CASE("spherical transitivity: one orbit per level") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen{std::string(n, '0')};
    std::vector<std::string> queue{std::string(n, '0')};
    while (!queue.empty()) {
      std::string v = queue.back();
      queue.pop_back();
      for (int r = 0; r < 2; ++r)
        for (bool inv : {false, true}) {
          std::string w = act_generator(2, r, inv, v);
          if (seen.insert(w).second) queue.push_back(w);
        }
    }
    CHECK(static_cast<long long>(seen.size()) == ipow(2, n));
  }
}

TEST_CASE("action restricted to prefixes is consistent") {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    LampElement g = random_element(rng, 2);
    std::string x(6, '0');
    for (char& c : x) c = static_cast<char>('0' + rng() % 2);
    std::string full = act_level(g, x);
    std::string prefix = act_level(g, x.substr(0, 4));
    CHECK(full.substr(0, 4) == prefix);
  }
}

TEST_CASE("schreier level graphs match the small pictures") {
  Graph g1 = schreier_level_graph(2, 1);
  CHECK(adjacency_matrix_exact(g1) ==
        std::vector<std::vector<long long>>{{1, 1}, {1, 1}});

  Graph g2 = schreier_level_graph(2, 2);
  auto edge_to = [&](const std::string& from, const std::string& label) {
    for (const Edge& e : g2.edges)
      if (g2.vertices[e.src].name == from && e.label == label)
        return g2.vertices[e.dst].name;
    return std::string("?");
  };
  CHECK(edge_to("00", "c0") == "00");
  CHECK(edge_to("01", "c0") == "01");
  CHECK(edge_to("10", "c0") == "11");
  CHECK(edge_to("11", "c0") == "10");
  CHECK(edge_to("00", "c1") == "10");
  CHECK(edge_to("10", "c1") == "01");
  CHECK(edge_to("01", "c1") == "11");
  CHECK(edge_to("11", "c1") == "00");
}

TEST_CASE("prefix truncation covers level by level") {
  for (int k : {2, 3})
    for (int n = 0; n <= 3; ++n) CHECK(is_covering(gamma_covering(k, n)));
}

TEST_CASE("membership predicates") {
  LampElement b = LampElement::gen_b(2);
  CHECK(in_w(b, 2, 1));
  CHECK_FALSE(in_w(b, 2, 2));

  LampElement b3 = LampElement{2, {}, 3};
  CHECK(in_h(b3, 2, 3));
  CHECK_FALSE(in_h(LampElement::gen_c(2), 2, 3));

  // g = c b^2 c b^-2 has lamps at 0 and 2, both in the same class mod 2
  LampElement g = multiply(LampElement::gen_c(2),
                           LampElement{2, {{2, 1}}, 0});
  CHECK(in_h(g, 2, 2));
  SwVertex v{"00", 0};
  SwVertex moved = sw_action(g, v, 2, 2);
  CHECK(moved.word == "00");
  CHECK(moved.slice == 0);
}

TEST_CASE("spider web action formulas") {
  SwVertex v{"10", 0};
  SwVertex bv = sw_action(LampElement::gen_b(2), v, 2, 4);
  CHECK(bv.word == "01");
  CHECK(bv.slice == 3);
  SwVertex cv = sw_action(LampElement::gen_c(2), v, 2, 4);
  CHECK(cv.word == "00");
  CHECK(cv.slice == 0);
}

TEST_CASE("graph of the spider web action is the spider web") {
  for (int n = 0; n <= 3; ++n)
    for (long long m = 1; m <= 3; ++m) {
      Graph action = sw_action_graph_xinv(2, n, m);
      Graph sw = spider_web(2, n, m);
      GraphMorphism mor;
      mor.src = share(action);
      mor.dst = share(sw);
      for (int v = 0; v < action.num_vertices(); ++v)
        mor.vertex_map.push_back(v);
      auto emap = complete_edge_map(action, sw, mor.vertex_map, MorphKind::weak);
      REQUIRE(emap.has_value());
      mor.edge_map = *emap;
      CHECK(verify_isomorphism(mor, MorphKind::weak));
    }
}

TEST_CASE("stabilizer of the marked spider web vertex is the H predicate") {
  std::mt19937 rng(36);
  const SwVertex origin{"00", 0};
  for (int trial = 0; trial < 500; ++trial) {
    LampElement g = random_element(rng, 2);
    SwVertex image = sw_action(g, origin, 2, 2);
    bool stabilizes = image.word == origin.word && image.slice == origin.slice;
    CHECK(stabilizes == in_h(g, 2, 2));
  }
}

TEST_CASE("normality search") {
  auto h_pred = [](int n, long long m) {
    return [n, m](const LampElement& g) { return in_h(g, n, m); };
  };
  CHECK_FALSE(normality_report(h_pred(2, 2), 2, 6).violation_found);
  CHECK(normality_report(h_pred(2, 3), 2, 6).violation_found);

  auto w_pred = [](int n, long long m) {
    return [n, m](const LampElement& g) { return in_w(g, n, m); };
  };
  // W_{2,M} for odd M: conjugating b^M by c_1 escapes the subgroup
  CHECK(normality_report(w_pred(2, 1), 2, 5).violation_found);
  CHECK(normality_report(w_pred(2, 3), 2, 5).violation_found);
  // W_{1,M} is always normal
  CHECK_FALSE(normality_report(w_pred(1, 2), 2, 5).violation_found);
}

TEST_CASE("finite lamplighter quotients") {
  Graph q = finite_quotient_cayley(2, 2, 1);
  CHECK(q.num_vertices() == 8);
  IsoOptions weak;
  CHECK(find_iso(q, spider_web(2, 2, 2), weak).status == SearchStatus::found);
  CHECK(find_iso(finite_quotient_cayley(2, 1, 3), spider_web(2, 1, 3), weak)
            .status == SearchStatus::found);
  for (int k : {2, 3})
    for (int n : {1, 2})
      for (int l : {1, 2})
        CHECK(finite_quotient_cayley(k, n, l).num_vertices() ==
              ipow(k, n) * n * l);
}

TEST_CASE("cayley balls") {
  RootedBall b0 = cayley_ball(2, 0);
  CHECK(b0.graph.num_vertices() == 1);
  CHECK(b0.graph.num_edges() == 0);

  RootedBall b1 = cayley_ball(2, 1);
  CHECK(b1.graph.num_vertices() == 5);

  RootedBall b3 = cayley_ball(2, 3);
  // interior vertices have full out- and in-degree
  RootedBall b2 = cayley_ball(2, 2);
  std::set<std::string> interior;
  for (const Vertex& v : b2.graph.vertices) interior.insert(v.name);
  for (const Vertex& v : b3.graph.vertices) {
    if (!interior.count(v.name)) continue;
    // names coincide between the nested balls by construction order
    CHECK(degree(b3.graph, v.id) == 2);
    CHECK(in_degree(b3.graph, v.id) == 2);
  }
}

TEST_CASE("tensor with a cycle leaves the cayley ball unchanged") {
  IsoOptions strong;
  strong.kind = MorphKind::strong;
  strong.rooted = true;
  strong.vertex_cap = 4096;
  for (int r = 0; r <= 3; ++r)
    for (long long m : {2, 3}) {
      RootedBall cay = cayley_ball(2, r);
      Graph t = tensor(cay.graph, cycle(m));
      RootedBall around_root = ball(t, cay.root * m + 0, r);
      strong.src_root = around_root.root;
      strong.dst_root = cay.root;
      CHECK(find_iso(around_root.graph, cay.graph, strong).status ==
            SearchStatus::found);
    }
}

TEST_CASE("kesten measure atoms and mass") {
  SpectralMeasure mu = kesten_measure(2, 30);
  CHECK(mu.atoms.at(AtomKey{1, 2}) == BigRational(1, 3));
  CHECK(mu.atoms.at(AtomKey{1, 3}) == BigRational(1, 7));
  CHECK(mu.atoms.at(AtomKey{2, 3}) == BigRational(1, 7));
  double mass = mu.total_mass().convert_to<double>();
  CHECK(std::abs(mass - 1.0) < 1e-6);
  // sum over q of phi(q)/(k^q - 1) = 1/(k-1)^2, numerically
  for (int k : {2, 3}) {
    double sum = 0;
    for (int q = 2; q <= 30; ++q) {
      int phi = 0;
      for (int p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1) ++phi;
      sum += phi / (std::pow(static_cast<double>(k), q) - 1);
    }
    CHECK(std::abs(sum - 1.0 / ((k - 1) * (k - 1))) < 1e-6);
  }
}
