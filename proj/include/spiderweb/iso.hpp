#pragma once

#include <optional>
#include <vector>

#include "spiderweb/graph.hpp"
#include "spiderweb/morphism.hpp"

namespace spiderweb {

enum class SearchStatus { found, none, undecided };

struct IsoOptions {
  MorphKind kind = MorphKind::weak;
  bool rooted = false;
  int src_root = 0;
  int dst_root = 0;
  int vertex_cap = 512;           // beyond this the search reports undecided
  long long node_cap = 20000000;  // backtracking steps before undecided
};

struct IsoResult {
  SearchStatus status = SearchStatus::none;
  std::optional<GraphMorphism> witness;
};

// Exhaustive backtracking over vertex bijections with color-refinement
// pruning. "none" is definitive; caps produce "undecided", never a false
// negative. Witnesses are re-verified before they are returned.
IsoResult find_iso(const Graph& g, const Graph& h, const IsoOptions& opt = {});

struct OrbitResult {
  SearchStatus status = SearchStatus::found;
  std::vector<int> orbit_of;  // vertex -> orbit id
  int orbit_count = 0;
};

// Orbits of the full automorphism group (weak by default) via seeded
// isomorphism searches; found automorphisms merge whole cycles at once.
OrbitResult automorphism_orbits(const Graph& g,
                                MorphKind kind = MorphKind::weak,
                                const IsoOptions& opt = {});

enum class Transitivity { yes, no, undecided };
Transitivity is_vertex_transitive(const Graph& g,
                                  MorphKind kind = MorphKind::weak,
                                  const IsoOptions& opt = {});

// The two explicit spider-web automorphisms for M >= N: the slice rotation
// T and the piecewise symbol increment psi; together they act transitively.
struct TransitivityWitnesses {
  GraphMorphism rotation;
  GraphMorphism psi;
  bool orbit_covers_all = false;
};
TransitivityWitnesses transitivity_witnesses(int k, int n, long long m);

}  // namespace spiderweb
