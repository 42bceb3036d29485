#pragma once

#include "gradedk/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace gradedk {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline int sign(Parity p) { return p == Parity::even ? 1 : -1; }
inline Parity flipped(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

struct Edge {
  std::string id;
  std::string source;
  std::string range;
  Parity parity = Parity::even;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph with a {0,1} grading on edges.
///
/// Vertex and edge declaration order is significant: it fixes the row and
/// column order of every matrix built from the graph. Construction validates
/// identifiers and endpoints and throws InputError on failure.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;
  std::optional<std::size_t> vertex_index(std::string_view id) const;

  // Number of edges whose range is `id`.
  std::size_t in_degree(std::string_view id) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

struct AllRegular {
  friend bool operator==(AllRegular, AllRegular) { return true; }
};
struct EmptySet {
  friend bool operator==(EmptySet, EmptySet) { return true; }
};
using RelativeSetSpec = std::variant<AllRegular, EmptySet, std::vector<std::string>>;

/// Parsed graph document: the graph plus its requested relative vertex set.
struct GraphDocument {
  Graph graph;
  RelativeSetSpec relative_set = AllRegular{};
};

GraphDocument parse_graph_document(std::string_view text);
Graph parse_graph(std::string_view text);

/// Canonical JSON rendering of a document (sorted keys, no whitespace).
std::string normalized_document(const GraphDocument& doc);

/// Vertices receiving at least one edge, in declaration order.
std::vector<std::string> regular_vertices(const Graph& g);

/// Expands "all_regular"/"empty" and checks that explicit members exist.
std::vector<std::string> resolve_relative_set(const RelativeSetSpec& spec, const Graph& g);

/// Copy of g with every edge parity set to `parity`.
Graph with_uniform_parity(const Graph& g, Parity parity);

/// Copy of g with every edge parity flipped.
Graph with_flipped_parity(const Graph& g);

/// Copy of g whose vertices are declared in the order given by `order`
/// (a permutation of g's vertex ids). Edges keep their order.
Graph with_vertex_order(const Graph& g, const std::vector<std::string>& order);

struct TailExtension {
  Graph graph;
  // Fresh vertices, nearest to the attachment point first.
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

/// Appends a parity-0 path  at_L -> ... -> at_2 -> at_1 -> at  ending at `at`.
/// Fresh names that collide with existing identifiers get a "#n" suffix.
TailExtension extend_with_tail(const Graph& g, std::string_view at, std::size_t length);

Graph add_tail(const Graph& g, std::string_view at, std::size_t length);

}  // namespace gradedk
