#include "gradedk/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_set>

namespace gradedk {

using nlohmann::json;

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw InputError("duplicate vertex '" + vertices_[i] + "'", vertices_[i]);
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second) {
      throw InputError("duplicate edge '" + e.id + "'", e.id);
    }
    if (!vertex_index_.contains(e.source)) {
      throw InputError("edge '" + e.id + "' has unknown source vertex '" + e.source + "'",
                       e.source);
    }
    if (!vertex_index_.contains(e.range)) {
      throw InputError("edge '" + e.id + "' has unknown range vertex '" + e.range + "'", e.range);
    }
  }
}

bool Graph::has_vertex(std::string_view id) const {
  return vertex_index_.contains(std::string(id));
}

bool Graph::has_edge(std::string_view id) const { return edge_index_.contains(std::string(id)); }

std::optional<std::size_t> Graph::vertex_index(std::string_view id) const {
  const auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::in_degree(std::string_view id) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.range == id; }));
}

namespace {

std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

Parity parse_parity(const json& j, const std::string& edge_id) {
  if (j.is_number_integer()) {
    const auto p = j.get<long long>();
    if (p == 0) return Parity::even;
    if (p == 1) return Parity::odd;
  }
  throw InputError("edge '" + edge_id + "' has parity " + j.dump() + ", expected 0 or 1", edge_id);
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges" && key != "relative_set") {
      throw InputError("unknown key '" + key + "' in graph document", key);
    }
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("graph document needs a 'vertices' array");
  }

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(require_string(v, "vertex id"));

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object()) throw InputError("each edge must be an object");
      for (const char* key : {"id", "source", "range"}) {
        if (!e.contains(key)) {
          throw InputError(std::string("edge missing '") + key + "': " + e.dump(),
                           e.value("id", std::string{}));
        }
      }
      Edge edge;
      edge.id = require_string(e["id"], "edge id");
      edge.source = require_string(e["source"], "edge source");
      edge.range = require_string(e["range"], "edge range");
      edge.parity = e.contains("parity") ? parse_parity(e["parity"], edge.id) : Parity::even;
      edges.push_back(std::move(edge));
    }
  }

  GraphDocument out{Graph(std::move(vertices), std::move(edges)), AllRegular{}};
  if (doc.contains("relative_set")) {
    const json& rs = doc["relative_set"];
    if (rs.is_string()) {
      const auto keyword = rs.get<std::string>();
      if (keyword == "all_regular") {
        out.relative_set = AllRegular{};
      } else if (keyword == "empty") {
        out.relative_set = EmptySet{};
      } else {
        throw InputError("relative_set must be a list, \"all_regular\" or \"empty\"", keyword);
      }
    } else if (rs.is_array()) {
      std::vector<std::string> members;
      for (const auto& v : rs) members.push_back(require_string(v, "relative_set member"));
      out.relative_set = std::move(members);
    } else {
      throw InputError("relative_set must be a list, \"all_regular\" or \"empty\"");
    }
  }
  return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

std::string normalized_document(const GraphDocument& doc) {
  json j;
  j["vertices"] = doc.graph.vertices();
  j["edges"] = json::array();
  for (const auto& e : doc.graph.edges()) {
    j["edges"].push_back({{"id", e.id},
                          {"source", e.source},
                          {"range", e.range},
                          {"parity", static_cast<int>(e.parity)}});
  }
  if (std::holds_alternative<AllRegular>(doc.relative_set)) {
    j["relative_set"] = "all_regular";
  } else if (std::holds_alternative<EmptySet>(doc.relative_set)) {
    j["relative_set"] = "empty";
  } else {
    j["relative_set"] = std::get<std::vector<std::string>>(doc.relative_set);
  }
  return j.dump();
}

std::vector<std::string> regular_vertices(const Graph& g) {
  std::unordered_set<std::string> receiving;
  for (const auto& e : g.edges()) receiving.insert(e.range);
  std::vector<std::string> out;
  for (const auto& v : g.vertices())
    if (receiving.contains(v)) out.push_back(v);
  return out;
}

std::vector<std::string> resolve_relative_set(const RelativeSetSpec& spec, const Graph& g) {
  if (std::holds_alternative<AllRegular>(spec)) return regular_vertices(g);
  if (std::holds_alternative<EmptySet>(spec)) return {};
  const auto& members = std::get<std::vector<std::string>>(spec);
  for (const auto& m : members) {
    if (!g.has_vertex(m)) throw InputError("relative_set names unknown vertex '" + m + "'", m);
  }
  return members;
}

Graph with_uniform_parity(const Graph& g, Parity parity) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.parity = parity;
  return Graph(g.vertices(), std::move(edges));
}

Graph with_flipped_parity(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.parity = flipped(e.parity);
  return Graph(g.vertices(), std::move(edges));
}

Graph with_vertex_order(const Graph& g, const std::vector<std::string>& order) {
  if (order.size() != g.vertex_count()) {
    throw InputError("vertex order must be a permutation of the graph's vertices");
  }
  for (const auto& v : order) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "' in vertex order", v);
  }
  return Graph(order, g.edges());
}

TailExtension extend_with_tail(const Graph& g, std::string_view at, std::size_t length) {
  if (length < 1) throw InputError("tail length must be at least 1");
  if (!g.has_vertex(at)) {
    throw InputError("cannot attach tail to unknown vertex '" + std::string(at) + "'",
                     std::string(at));
  }

  std::unordered_set<std::string> taken(g.vertices().begin(), g.vertices().end());
  for (const auto& e : g.edges()) taken.insert(e.id);
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int n = 2; taken.contains(name); ++n) name = base + "#" + std::to_string(n);
    taken.insert(name);
    return name;
  };

  TailExtension out;
  std::vector<std::string> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  std::string target(at);
  for (std::size_t k = 1; k <= length; ++k) {
    std::string v = fresh(std::string(at) + "_" + std::to_string(k));
    std::string e = fresh(v + "->" + target);
    vertices.push_back(v);
    edges.push_back(Edge{e, v, target, Parity::even});
    out.vertices.push_back(v);
    out.edges.push_back(e);
    target = std::move(v);
  }
  out.graph = Graph(std::move(vertices), std::move(edges));
  return out;
}

Graph add_tail(const Graph& g, std::string_view at, std::size_t length) {
  return extend_with_tail(g, at, length).graph;
}

}  // namespace gradedk
