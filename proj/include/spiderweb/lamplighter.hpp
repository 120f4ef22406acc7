#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spiderweb/ball.hpp"
#include "spiderweb/graph.hpp"
#include "spiderweb/spectra.hpp"

namespace spiderweb {

// Normal form of a lamplighter group element: finitely supported lamp
// configuration Z -> Z/kZ plus an integer shift. Stored lamp values are
// nonzero, so equality is structural.
struct LampElement {
  int k = 2;
  std::map<long long, int> lamps;
  long long shift = 0;

  static LampElement identity(int k);
  static LampElement gen_b(int k);          // b = c^0 b
  static LampElement gen_c(int k);          // lamp at the origin
  static LampElement generator(int k, int r);  // c_r = c^r b, 0 <= r < k

  bool is_identity() const { return lamps.empty() && shift == 0; }
  bool operator==(const LampElement&) const = default;
};

struct LampElementHash {
  size_t operator()(const LampElement& g) const;
};

LampElement multiply(const LampElement& a, const LampElement& b);
LampElement inverse(const LampElement& a);

// Word over the generating set {c_0..c_{k-1}} and inverses. Letter +(r+1)
// stands for c_r, letter -(r+1) for its inverse.
using Word = std::vector<int>;

LampElement evaluate(const Word& w, int k);
Word word_of_element(const LampElement& g);

long long exp_x(const Word& w);
long long exp_x(const LampElement& g);  // the shift; agrees with the word count

// Relators of the two presentations (conjugation depth n = 1..nmax), as
// X-words; every one must evaluate to the identity.
std::vector<Word> classic_relators(int k, int nmax);
std::vector<Word> xgen_relators(int k, int nmax);

// Level-N action on words over {0..k-1}: the generator c_r maps x1 x2 x3...
// to (x1+r)(x2+x1)(x3+x2)... with additions mod k. Group elements act
// through their generator decomposition.
std::string act_generator(int k, int r, bool inv, const std::string& x);
std::string act_level(const LampElement& g, const std::string& x);

// Graph of the level-N action w.r.t. {c_0..c_{k-1}}: k^N word vertices,
// vertex v has the edge labeled "cr" into act_generator(r, v).
// Edge id = v*k + r.
Graph schreier_level_graph(int k, int n);

bool in_w(const LampElement& g, int n, long long m);
bool in_h(const LampElement& g, int n, long long m);

// Action on spider_web(k, N, M) vertices from the Schreier identification:
// b.(x1..xN, j) = (xN x1..x_{N-1}, j-1), c.(x1..xN, j) = ((x1-1)x2..xN, j).
struct SwVertex {
  std::string word;
  long long slice = 0;
};
SwVertex sw_action(const LampElement& g, const SwVertex& v, int k, long long m);

// Graph of the spider-web action w.r.t. the inverse generating set; uses the
// same vertex indexing as spider_web(k, n, m).
Graph sw_action_graph_xinv(int k, int n, long long m);

using SubgroupPred = std::function<bool(const LampElement&)>;

struct NormalityReport {
  bool violation_found = false;
  long long members_checked = 0;
  LampElement member;      // meaningful when a violation was found
  LampElement conjugator;  // a generator or generator inverse
  std::string describe() const;
};

// Conjugates every predicate member of the radius-`bound` Cayley ball by
// each generator and generator inverse. "No violation" is evidence within
// the bound, not a proof.
NormalityReport normality_report(const SubgroupPred& pred, int k, int bound);

// Cayley graph of (sum_{i=1..N} Z/kZ) x| Z/(N l)Z with, the cyclic shift
// action and generators {c^i b}; k^N * N * l vertices.
Graph finite_quotient_cayley(int k, int n, int l);

// Exact radius-r ball of Cay(L_k, X_k) rooted at the identity, computed by
// breadth-first search over group elements.
RootedBall cayley_ball(int k, int r);

// Atoms 2k cos(p pi / q) with weight (k-1)^2/(k^q - 1) for 2 <= q <= q_max.
SpectralMeasure kesten_measure(int k, int q_max);

}  // namespace spiderweb
