#pragma once

#include "gradedk/graph.hpp"
#include "gradedk/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gradedk {

/// Subset of the regular vertices of a graph, kept in the graph's declaration order.
class RelativeSet {
 public:
  RelativeSet() = default;
  // Throws InputError naming the first member that is unknown or not regular.
  RelativeSet(const Graph& g, const std::vector<std::string>& members);

  const std::vector<std::string>& members() const { return members_; }
  // Positions of the members in g.vertices().
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const std::string& id) const;

 private:
  std::vector<std::string> members_;
  std::vector<std::size_t> indices_;
};

/// A graph, a relative vertex set V and the two integer matrices the graded
/// invariants are built from:
///   inclusion        E0 x V, the 0/1 matrix of Z V -> Z E0
///   signed_adjacency V x E0, entry (v, w) = sum over edges w -> v of (-1)^parity
struct KTheoryProblem {
  Graph graph;
  RelativeSet relative_set;
  IntMatrix inclusion;
  IntMatrix signed_adjacency;
};

KTheoryProblem make_problem(const Graph& g, const std::vector<std::string>& relative_set);
KTheoryProblem make_problem(const GraphDocument& doc);

/// Unrestricted signed adjacency, E0 x E0 (rows = range, cols = source).
IntMatrix signed_adjacency_matrix(const Graph& g);

}  // namespace gradedk
