#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spiderweb/graph.hpp"

namespace spiderweb {

// strong = labels preserved on the nose; weak = labels ignored.
enum class MorphKind { weak, strong };

struct GraphMorphism {
  std::shared_ptr<const Graph> src;
  std::shared_ptr<const Graph> dst;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

std::shared_ptr<const Graph> share(Graph g);

// iota/tau commute with the maps; non-oriented graphs additionally need the
// involution to commute.
bool is_morphism(const GraphMorphism& m, std::string* why = nullptr);
bool preserves_labels(const GraphMorphism& m);
bool preserves_weights(const GraphMorphism& m);

// Bijective morphism, weight preserving, label preserving when strong.
bool verify_isomorphism(const GraphMorphism& m, MorphKind kind,
                        std::string* why = nullptr);

GraphMorphism invert(const GraphMorphism& m);            // needs a bijection
GraphMorphism compose(const GraphMorphism& outer,
                      const GraphMorphism& inner);       // outer after inner

// Builds an edge bijection compatible with a given vertex bijection, or
// nullopt when the per-pair edge multisets do not agree. Non-oriented graphs
// get an involution-commuting map.
std::optional<std::vector<int>> complete_edge_map(const Graph& g,
                                                  const Graph& h,
                                                  const std::vector<int>& vmap,
                                                  MorphKind kind);

// Star bijectivity in the Serre sense: for oriented graphs both the out- and
// the in-star map must be bijections. Throws when m is not a morphism.
bool is_covering(const GraphMorphism& m);

// Verified witness plus how much structure it preserves.
struct IsoWitness {
  GraphMorphism morphism;
  MorphKind kind = MorphKind::weak;
  bool rooted = false;
};

}  // namespace spiderweb
