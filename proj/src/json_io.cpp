#include "spiderweb/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spiderweb {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Graph& g) {
  ordered_json j;
  j["directed"] = g.directed;
  j["vertices"] = ordered_json::array();
  for (const Vertex& v : g.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    if (!v.name.empty()) jv["name"] = v.name;
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  for (const Edge& e : g.edges) {
    ordered_json je;
    je["id"] = e.id;
    je["src"] = e.src;
    je["dst"] = e.dst;
    if (!e.label.empty()) je["label"] = e.label;
    if (e.weight != 1.0) je["weight"] = e.weight;
    if (e.inverse != -1) je["inverse"] = e.inverse;
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

Graph from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Graph g;
  g.directed = j.at("directed").get<bool>();
  for (const auto& jv : j.at("vertices")) {
    Vertex v;
    v.id = jv.at("id").get<int>();
    if (jv.contains("name")) v.name = jv.at("name").get<std::string>();
    g.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.id = je.at("id").get<int>();
    e.src = je.at("src").get<int>();
    e.dst = je.at("dst").get<int>();
    if (je.contains("label")) e.label = je.at("label").get<std::string>();
    if (je.contains("weight")) e.weight = je.at("weight").get<double>();
    if (je.contains("inverse")) e.inverse = je.at("inverse").get<int>();
    g.edges.push_back(e);
  }
  validate(g);
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(g);
}

static std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r.push_back('\\');
    r.push_back(c);
  }
  return r;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << (g.directed ? "digraph" : "graph") << " G {\n";
  for (const Vertex& v : g.vertices) {
    out << "  " << v.id;
    if (!v.name.empty()) out << " [label=\"" << dot_escape(v.name) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges) {
    if (!g.directed && e.inverse < e.id) continue;  // one line per pair
    out << "  " << e.src << (g.directed ? " -> " : " -- ") << e.dst;
    std::string attrs;
    if (!e.label.empty()) attrs += "label=\"" + dot_escape(e.label) + "\"";
    if (e.weight != 1.0) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "weight=\"" + std::to_string(e.weight) + "\"";
    }
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spiderweb
