#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spiderweb/graph.hpp"
#include "spiderweb/morphism.hpp"

namespace spiderweb {

// Ordered list of composable edge ids (half-edges in a non-oriented graph).
struct Path {
  std::vector<int> edges;
};

bool path_valid(const Graph& g, const Path& p, int* start = nullptr,
                int* end = nullptr);
bool path_reduced(const Graph& g, const Path& p);  // no e followed by ebar
Path reverse_path(const Graph& g, const Path& p);  // non-oriented graphs

// Orientation on a non-oriented graph as a keep-flag per edge; the default
// keeps the lower id of each involution pair.
std::vector<char> default_orientation(const Graph& g);

std::vector<int> path_signature(const Graph& g, const Path& p,
                                const std::vector<char>& orientation);
long long path_derangement(const Graph& g, const Path& p,
                           const std::vector<char>& orientation);

// Minimal positive derangement over closed paths (0 when none exists),
// computed as the gcd of fundamental-cycle derangements over a spanning
// tree: the closed-path derangements at a base vertex form a subgroup of Z.
// Oriented input uses its own orientation, non-oriented the default one.
// Throws on disconnected graphs.
long long graph_derangement(const Graph& g);
std::vector<long long> graph_derangement_per_component(const Graph& g);

// Union-find over the underlying edges; vertex -> component id, ids in
// order of first appearance.
std::vector<int> components(const Graph& g);
int component_count(const Graph& g);

struct ComponentPrediction {
  long long derangement = 0;
  // Number of connected components of g (x) C_M; nullopt = infinitely many.
  std::optional<long long> canonical;  // gcd route
  std::optional<long long> paper;      // centered-representative route
  bool discrepancy = false;
};
// m = nullopt stands for the infinite oriented line.
ComponentPrediction predict_components(const Graph& g,
                                       std::optional<long long> m);

// w -> (w, rank(w)) into tensor(g, cycle(m)), defined when the derangement
// of g vanishes mod m; throws "not isomorphic" otherwise.
GraphMorphism tensor_cycle_iso(const Graph& g, int v, long long m);

// Injective morphism onto the whole component of its image root: checks
// morphism validity, injectivity, and that image vertices/edges exhaust the
// component of root_dst.
bool verify_embedding_onto_component(const GraphMorphism& m, int root_dst);

}  // namespace spiderweb
