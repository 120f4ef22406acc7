#pragma once

#include <unordered_map>

#include "spiderweb/graph.hpp"
#include "spiderweb/morphism.hpp"

namespace spiderweb {

// Categorical product: vertex (v,w) -> v*|W|+w, edge (e,f) -> e*|F|+f with
// endpoints taken coordinatewise; Serre involution (e,f) -> (ebar,fbar).
// Labels pair as "(a|b)"; when exactly one factor is entirely unlabeled the
// other factor's labels are kept (the usual identification for g (x) C_M).
// Weights multiply, so the adjacency matrix is the Kronecker product.
Graph tensor(const Graph& g, const Graph& h);

// phi1 (x) phi2 between the corresponding tensor graphs.
GraphMorphism tensor_morphism(const GraphMorphism& a, const GraphMorphism& b);

// Oriented line graph: vertex i is edge i of the base, one edge per
// composable pair (e, f) with tau(e) = iota(f), labeled by f's label.
Graph line_graph(const Graph& g);
struct LineGraph {
  Graph graph;
  std::unordered_map<long long, int> edge_of_pair;  // e*m+f -> line edge id
  int base_edges = 0;
  int pair_edge(int e, int f) const;
};
LineGraph line_graph_indexed(const Graph& g);

// L as a functor: vertex map of L(m) is the edge map of m.
GraphMorphism line_morphism(const GraphMorphism& m);

// Explicit witnesses (verified by the callers through verify_isomorphism):
GraphMorphism line_tensor_iso(const Graph& g, const Graph& h);  // L(g (x) h) -> L(g) (x) L(h)
GraphMorphism de_bruijn_line_iso(int k, int n);  // L(B_N) -> B_{N+1}
GraphMorphism gamma_line_iso(int k, int n);      // L(Gamma_N) -> Gamma_{N+1}

// Gamma_N -> B_N built by induction through the line functor; never a search.
IsoWitness gamma_bruijn_iso(int k, int n);

GraphMorphism spiderweb_tensor_iso(int k, int n, long long m);  // S -> B (x) C_M, strong
GraphMorphism spiderweb_debruijn_iso(int k, int n);             // S(k,N,1) -> B_N, strong

// Covering and non-covering morphisms used by the verification suites.
GraphMorphism gamma_covering(int k, int n);  // Gamma_{N+1} -> Gamma_N, prefix truncation
GraphMorphism spiderweb_slice_covering(int k, int n, long long m, long long i);  // S(k,N,iM) -> S(k,N,M)
GraphMorphism debruijn_drop_first(int k, int n);  // B_N -> B_{N-1}; not a covering

}  // namespace spiderweb
