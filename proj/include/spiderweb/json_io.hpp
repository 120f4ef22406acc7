#pragma once

#include <string>

#include "spiderweb/graph.hpp"

namespace spiderweb {

// {"directed": bool,
//  "vertices": [{"id", "name"?}],
//  "edges":    [{"id","src","dst","label"?,"weight"?,"inverse"?}]}
// Optional fields are omitted at their defaults; serialization is canonical
// so serialize(parse(s)) == s for canonical s.
std::string to_json(const Graph& g);
Graph from_json(const std::string& text);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

std::string to_dot(const Graph& g);

}  // namespace spiderweb
