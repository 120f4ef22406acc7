#include "spiderweb/families.hpp"

#include <stdexcept>

namespace spiderweb {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string word_of_index(long long v, int k, int n) {
  std::string w(n, '0');
  for (int j = n - 1; j >= 0; --j) {
    w[j] = static_cast<char>('0' + v % k);
    v /= k;
  }
  return w;
}

long long index_of_word(const std::string& w, int k) {
  long long v = 0;
  for (char c : w) v = v * k + (c - '0');
  return v;
}

static void check_k(int k) {
  if (k < 2) throw std::invalid_argument("alphabet size k must be >= 2");
  if (k > 10) throw std::invalid_argument("alphabet size k must be <= 10");
}

static std::string r_label(int y) { return "R" + std::to_string(y); }

Graph de_bruijn(int k, int n) {
  check_k(k);
  if (n < 0) throw std::invalid_argument("de_bruijn needs N >= 0");
  Graph g;
  const long long kn = ipow(k, n);
  for (long long v = 0; v < kn; ++v) g.add_vertex(word_of_index(v, k, n));
  for (long long v = 0; v < kn; ++v)
    for (int y = 0; y < k; ++y) g.add_edge(v, (v * k + y) % kn, r_label(y));
  return g;
}

Graph cycle(long long m) {
  if (m < 1) throw std::invalid_argument("cycle needs M >= 1");
  Graph g;
  for (long long i = 0; i < m; ++i) g.add_vertex(std::to_string(i));
  for (long long i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph cycle_window(int w) {
  if (w < 1) throw std::invalid_argument("cycle window needs W >= 1");
  Graph g;
  g.window_segment = true;
  for (int i = -w; i <= w; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < g.num_vertices(); ++i) g.add_edge(i, i + 1);
  return g;
}

Graph spider_web(int k, int n, long long m) {
  check_k(k);
  if (n < 0 || m < 1) throw std::invalid_argument("spider_web needs N >= 0, M >= 1");
  Graph g;
  const long long kn = ipow(k, n);
  for (long long v = 0; v < kn; ++v) {
    std::string w = word_of_index(v, k, n);
    for (long long i = 0; i < m; ++i)
      g.add_vertex("(" + w + "," + std::to_string(i) + ")");
  }
  for (long long v = 0; v < kn; ++v)
    for (long long i = 0; i < m; ++i)
      for (int y = 0; y < k; ++y)
        g.add_edge(v * m + i, ((v * k + y) % kn) * m + (i + 1) % m, r_label(y));
  return g;
}

Graph spider_web_window(int k, int n, int w) {
  check_k(k);
  if (n < 0 || w < 1)
    throw std::invalid_argument("spider_web window needs N >= 0, W >= 1");
  Graph g;
  g.window_segment = true;
  const long long kn = ipow(k, n);
  const long long slices = 2LL * w + 1;
  for (long long v = 0; v < kn; ++v) {
    std::string word = word_of_index(v, k, n);
    for (int i = -w; i <= w; ++i)
      g.add_vertex("(" + word + "," + std::to_string(i) + ")");
  }
  for (long long v = 0; v < kn; ++v)
    for (long long i = 0; i + 1 < slices; ++i)
      for (int y = 0; y < k; ++y)
        g.add_edge(v * slices + i, ((v * k + y) % kn) * slices + i + 1,
                   r_label(y));
  return g;
}

// Appends an oriented path with `len` edges, all of weight k.
static void append_path(Graph& g, int len, int k) {
  int first = g.add_vertex();
  int prev = first;
  for (int j = 0; j < len; ++j) {
    int next = g.add_vertex();
    g.add_edge(prev, next, "", k);
    prev = next;
  }
}

Graph theta_graph_m(int k, int n, long long m) {
  check_k(k);
  if (n < 0 || m < 1) throw std::invalid_argument("theta needs N >= 0, M >= 1");
  Graph g;
  for (long long i = 0; i < m; ++i) g.add_vertex();
  for (long long i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m, "", k);
  for (int i = 0; i <= n - 2; ++i) {
    long long copies = m * (k - 1) * (k - 1) * ipow(k, n - i - 2);
    for (long long c = 0; c < copies; ++c) append_path(g, i, k);
  }
  if (n >= 1)
    for (long long c = 0; c < m * (k - 1); ++c) append_path(g, n - 1, k);
  return g;
}

Graph theta_graph(int k, int n) { return theta_graph_m(k, n, 1); }

}  // namespace spiderweb
