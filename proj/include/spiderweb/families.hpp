#pragma once

#include <string>

#include "spiderweb/graph.hpp"

namespace spiderweb {

long long ipow(long long base, int exp);

// Base-k word of length n for a vertex index (most significant symbol first)
// and back. Names in the family constructors are exactly these words.
std::string word_of_index(long long v, int k, int n);
long long index_of_word(const std::string& w, int k);

// k^N vertices named by length-N words over {0..k-1}; vertex v has k
// outgoing edges labeled R0..R{k-1}, the one labeled Ry ends at the word
// shifted left with y appended. Edge id = v*k + y.
Graph de_bruijn(int k, int n);

// M vertices 0..M-1 with one edge i -> i+1 (mod M); unlabeled.
Graph cycle(long long m);
// Path window on [-w, w] standing in for the infinite oriented line.
Graph cycle_window(int w);

// k^N * M vertices named "(word,slice)"; vertex (x, i) has k outgoing edges
// labeled R0..R{k-1} into (shift(x, y), i+1 mod M).
// Vertex index = word_index * M + slice; edge id = vertex_index * k + y.
Graph spider_web(int k, int n, long long m);
// Slice window on [-w, w] standing in for the infinite-slice variant.
Graph spider_web_window(int k, int n, int w);

// Disjoint union of one loop, (k-1)^2 k^(N-i-2) oriented paths of length i
// for 0 <= i <= N-2, and (k-1) paths of length N-1; all edges of weight k.
// k^N vertices in total.
Graph theta_graph(int k, int n);
// Same with the loop replaced by a length-M cycle and all path counts
// multiplied by M; M * k^N vertices.
Graph theta_graph_m(int k, int n, long long m);

}  // namespace spiderweb
