#include "spiderweb/lamplighter.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "spiderweb/families.hpp"

namespace spiderweb {

LampElement LampElement::identity(int k) { return LampElement{k, {}, 0}; }

LampElement LampElement::gen_b(int k) { return LampElement{k, {}, 1}; }

LampElement LampElement::gen_c(int k) { return LampElement{k, {{0, 1}}, 0}; }

LampElement LampElement::generator(int k, int r) {
  if (r < 0 || r >= k) throw std::invalid_argument("generator index out of range");
  LampElement g{k, {}, 1};
  if (r != 0) g.lamps[0] = r;
  return g;
}

size_t LampElementHash::operator()(const LampElement& g) const {
  size_t h = std::hash<long long>()(g.shift) * 31 + g.k;
  for (const auto& [pos, val] : g.lamps) {
    h = h * 1000003 + std::hash<long long>()(pos);
    h = h * 1000003 + val;
  }
  return h;
}

LampElement multiply(const LampElement& a, const LampElement& b) {
  if (a.k != b.k) throw std::invalid_argument("mismatched lamp moduli");
  LampElement r{a.k, a.lamps, a.shift + b.shift};
  for (const auto& [pos, val] : b.lamps) {
    long long p = pos + a.shift;
    int v = ((r.lamps.count(p) ? r.lamps[p] : 0) + val) % a.k;
    if (v == 0)
      r.lamps.erase(p);
    else
      r.lamps[p] = v;
  }
  return r;
}

LampElement inverse(const LampElement& a) {
  LampElement r{a.k, {}, -a.shift};
  for (const auto& [pos, val] : a.lamps) r.lamps[pos - a.shift] = a.k - val;
  return r;
}

LampElement evaluate(const Word& w, int k) {
  LampElement g = LampElement::identity(k);
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("letter 0 is not a generator");
    int r = (letter > 0 ? letter : -letter) - 1;
    LampElement gen = LampElement::generator(k, r);
    g = multiply(g, letter > 0 ? gen : inverse(gen));
  }
  return g;
}

Word word_of_element(const LampElement& g) {
  Word w;
  auto push_b = [&w](long long n) {
    for (long long i = 0; i < n; ++i) w.push_back(1);
    for (long long i = 0; i > n; --i) w.push_back(-1);
  };
  long long at = 0;
  for (const auto& [pos, val] : g.lamps) {
    push_b(pos - at);
    for (int i = 0; i < val; ++i) {  // c = c_1 c_0^-1
      w.push_back(2);
      w.push_back(-1);
    }
    at = pos;
  }
  push_b(g.shift - at);
  return w;
}

long long exp_x(const Word& w) {
  long long s = 0;
  for (int letter : w) s += letter > 0 ? 1 : -1;
  return s;
}

long long exp_x(const LampElement& g) { return g.shift; }

std::vector<Word> classic_relators(int k, int nmax) {
  std::vector<Word> rels;
  const Word c = {2, -1};
  const Word cinv = {1, -2};
  Word ck;
  for (int i = 0; i < k; ++i) ck.insert(ck.end(), c.begin(), c.end());
  rels.push_back(ck);
  for (int n = 1; n <= nmax; ++n) {
    // [c, b^n c b^-n] = c^-1 (b^n c^-1 b^-n) c (b^n c b^-n)
    Word w = cinv;
    for (int i = 0; i < n; ++i) w.push_back(1);
    w.insert(w.end(), cinv.begin(), cinv.end());
    for (int i = 0; i < n; ++i) w.push_back(-1);
    w.insert(w.end(), c.begin(), c.end());
    for (int i = 0; i < n; ++i) w.push_back(1);
    w.insert(w.end(), c.begin(), c.end());
    for (int i = 0; i < n; ++i) w.push_back(-1);
    rels.push_back(w);
  }
  return rels;
}

std::vector<Word> xgen_relators(int k, int nmax) {
  std::vector<Word> rels;
  const Word cb = {2, -1};  // c_1 b^-1, equal to c
  Word cbk;
  for (int i = 0; i < k; ++i) cbk.insert(cbk.end(), cb.begin(), cb.end());
  rels.push_back(cbk);  // (c_1 b^-1)^k
  for (int i = 2; i <= k - 1; ++i) {
    // (c_1 b^-1)^i b c_i^-1
    Word w;
    for (int j = 0; j < i; ++j) w.insert(w.end(), cb.begin(), cb.end());
    w.push_back(1);
    w.push_back(-(i + 1));
    rels.push_back(w);
  }
  for (int n = 1; n <= nmax; ++n) {
    // [c_1 b^-1, b^n c_1 b^-n-1]
    Word u = cb;                       // x
    Word v;                            // y = b^n c_1 b^{-n-1}
    for (int i = 0; i < n; ++i) v.push_back(1);
    v.push_back(2);
    for (int i = 0; i < n + 1; ++i) v.push_back(-1);
    auto inv = [](const Word& w) {
      Word r;
      for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
      return r;
    };
    Word rel = inv(u);
    Word vi = inv(v);
    rel.insert(rel.end(), vi.begin(), vi.end());
    rel.insert(rel.end(), u.begin(), u.end());
    rel.insert(rel.end(), v.begin(), v.end());
    rels.push_back(rel);
  }
  return rels;
}

std::string act_generator(int k, int r, bool inv, const std::string& x) {
  std::string y(x.size(), '0');
  if (!inv) {
    for (size_t i = 0; i < x.size(); ++i) {
      int add = i == 0 ? r : x[i - 1] - '0';
      y[i] = static_cast<char>('0' + ((x[i] - '0') + add) % k);
    }
  } else {
    for (size_t i = 0; i < x.size(); ++i) {
      int sub = i == 0 ? r : y[i - 1] - '0';
      y[i] = static_cast<char>('0' + ((x[i] - '0') - sub % k + k) % k);
    }
  }
  return y;
}

std::string act_level(const LampElement& g, const std::string& x) {
  Word w = word_of_element(g);
  std::string cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int r = (*it > 0 ? *it : -*it) - 1;
    cur = act_generator(g.k, r, *it < 0, cur);
  }
  return cur;
}

Graph schreier_level_graph(int k, int n) {
  if (k < 2 || k > 10 || n < 0)
    throw std::invalid_argument("schreier_level_graph needs 2 <= k <= 10, N >= 0");
  Graph g;
  const long long kn = ipow(k, n);
  for (long long v = 0; v < kn; ++v) g.add_vertex(word_of_index(v, k, n));
  for (long long v = 0; v < kn; ++v) {
    std::string x = g.vertices[v].name;
    for (int r = 0; r < k; ++r)
      g.add_edge(v, index_of_word(act_generator(k, r, false, x), k),
                 "c" + std::to_string(r));
  }
  return g;
}

bool in_w(const LampElement& g, int n, long long m) {
  if (n < 0 || m < 1) throw std::invalid_argument("in_w needs N >= 0, M >= 1");
  const std::string zero(n, '0');
  if (act_level(g, zero) != zero) return false;
  return ((g.shift % m) + m) % m == 0;
}

bool in_h(const LampElement& g, int n, long long m) {
  if (n < 0 || m < 1) throw std::invalid_argument("in_h needs N >= 0, M >= 1");
  if (((g.shift % m) + m) % m != 0) return false;
  if (n == 0) return true;
  std::vector<int> class_sum(n, 0);
  for (const auto& [pos, val] : g.lamps)
    class_sum[((pos % n) + n) % n] += val;
  for (int s : class_sum)
    if (s % g.k != 0) return false;
  return true;
}

// Letters +1/-1 = b / b^-1, +2/-2 = c / c^-1, applied right to left.
static std::vector<int> bc_letters(const LampElement& g) {
  std::vector<int> w;
  auto push_b = [&w](long long q) {
    for (long long i = 0; i < q; ++i) w.push_back(1);
    for (long long i = 0; i > q; --i) w.push_back(-1);
  };
  long long at = 0;
  for (const auto& [pos, val] : g.lamps) {
    push_b(pos - at);
    for (int i = 0; i < val; ++i) w.push_back(2);
    at = pos;
  }
  push_b(g.shift - at);
  return w;
}

SwVertex sw_action(const LampElement& g, const SwVertex& v, int k,
                   long long m) {
  const int n = static_cast<int>(v.word.size());
  SwVertex cur = v;
  std::vector<int> w = bc_letters(g);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (*it) {
      case 1:  // b
        if (n > 0) cur.word = cur.word.back() + cur.word.substr(0, n - 1);
        cur.slice = ((cur.slice - 1) % m + m) % m;
        break;
      case -1:  // b^-1
        if (n > 0) cur.word = cur.word.substr(1) + cur.word.front();
        cur.slice = (cur.slice + 1) % m;
        break;
      case 2:  // c
        if (n > 0)
          cur.word[0] = static_cast<char>('0' + ((cur.word[0] - '0') - 1 + k) % k);
        break;
      case -2:  // c^-1
        if (n > 0)
          cur.word[0] = static_cast<char>('0' + ((cur.word[0] - '0') + 1) % k);
        break;
    }
  }
  return cur;
}

Graph sw_action_graph_xinv(int k, int n, long long m) {
  Graph g;
  const long long kn = ipow(k, n);
  for (long long v = 0; v < kn; ++v) {
    std::string w = word_of_index(v, k, n);
    for (long long i = 0; i < m; ++i)
      g.add_vertex("(" + w + "," + std::to_string(i) + ")");
  }
  for (long long v = 0; v < kn; ++v) {
    std::string x = word_of_index(v, k, n);
    for (long long i = 0; i < m; ++i)
      for (int r = 0; r < k; ++r) {
        // (c_r)^-1 . (x1..xN, j) = (x2..xN (x1+r), j+1)
        std::string y = n == 0
                            ? x
                            : x.substr(1) + static_cast<char>(
                                                '0' + ((x[0] - '0') + r) % k);
        g.add_edge(v * m + i, index_of_word(y, k) * m + (i + 1) % m,
                   invert_label("c" + std::to_string(r)));
      }
  }
  return g;
}

std::string NormalityReport::describe() const {
  if (!violation_found) return "no violation found within the search bound";
  std::ostringstream out;
  out << "conjugating a member (shift " << member.shift << ", " << member.lamps.size()
      << " lamps) by a generator of shift " << conjugator.shift
      << " leaves the subgroup";
  return out.str();
}

// Elements of word length <= radius, in breadth-first order.
static std::vector<LampElement> ball_elements(int k, int radius) {
  std::vector<LampElement> order;
  std::unordered_map<LampElement, int, LampElementHash> dist;
  std::deque<LampElement> queue;
  LampElement id = LampElement::identity(k);
  dist[id] = 0;
  queue.push_back(id);
  order.push_back(id);
  std::vector<LampElement> moves;
  for (int r = 0; r < k; ++r) moves.push_back(LampElement::generator(k, r));
  for (int r = 0; r < k; ++r) moves.push_back(inverse(moves[r]));
  while (!queue.empty()) {
    LampElement g = queue.front();
    queue.pop_front();
    int d = dist[g];
    if (d == radius) continue;
    for (const LampElement& mv : moves) {
      LampElement h = multiply(g, mv);
      if (dist.emplace(h, d + 1).second) {
        queue.push_back(h);
        order.push_back(h);
      }
    }
  }
  return order;
}

NormalityReport normality_report(const SubgroupPred& pred, int k, int bound) {
  NormalityReport report;
  std::vector<LampElement> moves;
  for (int r = 0; r < k; ++r) moves.push_back(LampElement::generator(k, r));
  for (int r = 0; r < k; ++r) moves.push_back(inverse(moves[r]));
  for (const LampElement& h : ball_elements(k, bound)) {
    if (!pred(h)) continue;
    ++report.members_checked;
    for (const LampElement& g : moves) {
      LampElement conj = multiply(multiply(g, h), inverse(g));
      if (!pred(conj)) {
        report.violation_found = true;
        report.member = h;
        report.conjugator = g;
        return report;
      }
    }
  }
  return report;
}

Graph finite_quotient_cayley(int k, int n, int l) {
  if (k < 2 || n < 1 || l < 1)
    throw std::invalid_argument("finite_quotient_cayley needs k >= 2, N >= 1, l >= 1");
  const long long kn = ipow(k, n);
  const long long shifts = static_cast<long long>(n) * l;
  Graph g;
  auto name = [&](long long lamps, long long s) {
    std::string w(n, '0');
    for (int i = 0; i < n; ++i) {
      w[i] = static_cast<char>('0' + lamps % k);
      lamps /= k;
    }
    return "(" + w + "," + std::to_string(s) + ")";
  };
  for (long long lamps = 0; lamps < kn; ++lamps)
    for (long long s = 0; s < shifts; ++s) g.add_vertex(name(lamps, s));
  std::vector<long long> kpow(n);
  for (int i = 0; i < n; ++i) kpow[i] = ipow(k, i);
  for (long long lamps = 0; lamps < kn; ++lamps)
    for (long long s = 0; s < shifts; ++s)
      for (int r = 0; r < k; ++r) {
        // right-multiply by c^r b: the lamp lands at position s mod N
        int pos = static_cast<int>(s % n);
        long long digit = (lamps / kpow[pos]) % k;
        long long lamps2 = lamps + ((digit + r) % k - digit) * kpow[pos];
        long long s2 = (s + 1) % shifts;
        g.add_edge(lamps * shifts + s, lamps2 * shifts + s2,
                   "c" + std::to_string(r));
      }
  return g;
}

RootedBall cayley_ball(int k, int r) {
  if (k < 2 || r < 0) throw std::invalid_argument("cayley_ball needs k >= 2, r >= 0");
  std::vector<LampElement> order = ball_elements(k, r);
  std::unordered_map<LampElement, int, LampElementHash> index;
  for (size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  RootedBall b;
  b.root = 0;
  b.radius = r;
  for (size_t i = 0; i < order.size(); ++i) {
    b.graph.add_vertex("g" + std::to_string(i));
    b.original.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < order.size(); ++i)
    for (int gen = 0; gen < k; ++gen) {
      LampElement h = multiply(order[i], LampElement::generator(k, gen));
      auto it = index.find(h);
      if (it != index.end())
        b.graph.add_edge(static_cast<int>(i), it->second,
                         "c" + std::to_string(gen));
    }
  return b;
}

SpectralMeasure kesten_measure(int k, int q_max) {
  if (k < 2 || q_max < 2)
    throw std::invalid_argument("kesten_measure needs k >= 2, q_max >= 2");
  SpectralMeasure mu;
  mu.k = k;
  const BigInt km1sq = BigInt(k - 1) * (k - 1);
  for (long long q = 2; q <= q_max; ++q) {
    BigInt kq = 1;
    for (long long i = 0; i < q; ++i) kq *= k;
    BigRational w = BigRational(km1sq) / BigRational(kq - 1);
    for (long long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) mu.atoms[{p, q}] = w;
  }
  return mu;
}

}  // namespace spiderweb
