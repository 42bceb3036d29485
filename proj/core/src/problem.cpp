#include "gradedk/problem.hpp"

#include <algorithm>
#include <unordered_set>

namespace gradedk {

RelativeSet::RelativeSet(const Graph& g, const std::vector<std::string>& members) {
  const auto regular = regular_vertices(g);
  const std::unordered_set<std::string> regular_set(regular.begin(), regular.end());
  std::unordered_set<std::string> wanted;
  for (const auto& m : members) {
    if (!g.has_vertex(m)) throw InputError("relative set names unknown vertex '" + m + "'", m);
    if (!regular_set.contains(m)) {
      throw InputError("vertex '" + m + "' receives no edges and cannot be in the relative set",
                       m);
    }
    wanted.insert(m);
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (wanted.contains(g.vertices()[i])) {
      members_.push_back(g.vertices()[i]);
      indices_.push_back(i);
    }
  }
}

bool RelativeSet::contains(const std::string& id) const {
  return std::find(members_.begin(), members_.end(), id) != members_.end();
}

IntMatrix signed_adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    a(*g.vertex_index(e.range), *g.vertex_index(e.source)) += sign(e.parity);
  }
  a.set_row_labels(g.vertices());
  a.set_col_labels(g.vertices());
  return a;
}

KTheoryProblem make_problem(const Graph& g, const std::vector<std::string>& relative_set) {
  KTheoryProblem p{g, RelativeSet(g, relative_set), {}, {}};
  const auto& rows = p.relative_set.indices();
  const std::size_t n = g.vertex_count();

  p.inclusion = IntMatrix(n, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) p.inclusion(rows[c], c) = 1;
  p.inclusion.set_row_labels(g.vertices());
  p.inclusion.set_col_labels(p.relative_set.members());

  const IntMatrix full = signed_adjacency_matrix(g);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  p.signed_adjacency = full.submatrix(rows, all);
  p.signed_adjacency.set_row_labels(p.relative_set.members());
  p.signed_adjacency.set_col_labels(g.vertices());
  return p;
}

KTheoryProblem make_problem(const GraphDocument& doc) {
  return make_problem(doc.graph, resolve_relative_set(doc.relative_set, doc.graph));
}

}  // namespace gradedk
