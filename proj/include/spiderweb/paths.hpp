#pragma once

#include <map>

#include "spiderweb/derangement.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/products.hpp"

namespace spiderweb {

// Exhaustive count of closed paths of the given length based at v in the
// underlying graph, bucketed by derangement. reduced_only skips paths with
// an immediate backtrack e ebar.
std::map<long long, long long> closed_path_census(const Graph& g, int v,
                                                  int length,
                                                  bool reduced_only);

// Hierholzer. Oriented graphs with balanced in/out degrees and one weak
// component carrying all edges; throws otherwise.
Path eulerian_circuit(const Graph& g);

struct HamiltonianResult {
  SearchStatus status = SearchStatus::none;
  Path cycle;
};
HamiltonianResult hamiltonian_cycle(const Graph& g,
                                    long long node_cap = 10000000);

// A Hamiltonian cycle of L(g) read off an Euler circuit of g.
Path hamiltonian_from_euler(const Graph& g, const Path& euler,
                            const LineGraph& lg);

bool replay_euler(const Graph& g, const Path& p);
bool replay_hamilton(const Graph& g, const Path& p);

}  // namespace spiderweb
