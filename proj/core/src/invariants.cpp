#include "gradedk/invariants.hpp"

#include "gradedk/smith.hpp"

#include <sstream>

namespace gradedk {

namespace {

std::vector<std::vector<Integer>> null_vectors(const SmithDecomposition& s, std::size_t cols) {
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = s.rank; j < cols; ++j) basis.push_back(s.v.column(j));
  return basis;
}

AbelianGroup coker_from(const SmithDecomposition& s, std::size_t rows) {
  auto diag = s.diagonal();
  diag.resize(s.rank);
  return AbelianGroup::from_diagonal(rows - s.rank, diag);
}

std::string factors_text(const AbelianGroup& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.invariant_factors().size(); ++i) {
    if (i) os << ", ";
    os << g.invariant_factors()[i];
  }
  os << ']';
  return os.str();
}

Check make_check(std::string name, bool passed, std::string detail) {
  return Check{std::move(name), passed, std::move(detail)};
}

}  // namespace

GradedKTheoryResult graded_k_theory(const KTheoryProblem& p) {
  IntMatrix matrix = p.inclusion - transpose(p.signed_adjacency);
  matrix.set_row_labels(p.graph.vertices());
  matrix.set_col_labels(p.relative_set.members());
  const SmithDecomposition s = smith_normal_form(matrix);
  return GradedKTheoryResult{coker_from(s, matrix.rows()),
                             AbelianGroup::free(matrix.cols() - s.rank),
                             std::move(matrix),
                             s.rank,
                             null_vectors(s, p.relative_set.size()),
                             p};
}

GradedKHomologyResult graded_k_homology(const KTheoryProblem& p) {
  IntMatrix matrix = transpose(p.inclusion) - p.signed_adjacency;
  matrix.set_row_labels(p.relative_set.members());
  matrix.set_col_labels(p.graph.vertices());
  const SmithDecomposition s = smith_normal_form(matrix);
  return GradedKHomologyResult{AbelianGroup::free(matrix.cols() - s.rank),
                               coker_from(s, matrix.rows()),
                               std::move(matrix),
                               s.rank,
                               null_vectors(s, p.graph.vertex_count()),
                               p};
}

GradedKTheoryResult classical_k_theory(const Graph& g) {
  const Graph ungraded = with_uniform_parity(g, Parity::even);
  return graded_k_theory(make_problem(ungraded, regular_vertices(ungraded)));
}

GradedKHomologyResult classical_k_homology(const Graph& g) {
  const Graph ungraded = with_uniform_parity(g, Parity::even);
  return graded_k_homology(make_problem(ungraded, regular_vertices(ungraded)));
}

namespace {

ExactSequenceReport make_sequence(const AbelianGroup& ker, const AbelianGroup& coker,
                                  const IntMatrix& m, std::size_t rank) {
  ExactSequenceReport r{ker, m.cols(), m.rows(), coker, m, rank, false};
  r.verified = ker.is_free() && ker.free_rank() + rank == r.domain_rank &&
               coker.free_rank() + rank == r.codomain_rank;
  return r;
}

}  // namespace

ExactSequenceReport exact_sequence(const GradedKTheoryResult& r) {
  return make_sequence(r.k1, r.k0, r.matrix, r.rank);
}

ExactSequenceReport exact_sequence(const GradedKHomologyResult& r) {
  return make_sequence(r.k0, r.k1, r.matrix, r.rank);
}

DualityReport duality_report(const KTheoryProblem& p) {
  DualityReport report{graded_k_theory(p), graded_k_homology(p), {}, false};
  const auto& kt = report.theory;
  const auto& kh = report.homology;
  const std::size_t n_vertices = p.graph.vertex_count();
  const std::size_t n_relative = p.relative_set.size();

  auto& checks = report.checks;
  checks.push_back(make_check(
      "torsion K0^gr = torsion K1_gr", kt.k0.invariant_factors() == kh.k1.invariant_factors(),
      factors_text(kt.k0) + " vs " + factors_text(kh.k1)));
  checks.push_back(make_check(
      "free rank K0_gr = free rank K0^gr", kh.k0.free_rank() == kt.k0.free_rank(),
      std::to_string(kh.k0.free_rank()) + " vs " + std::to_string(kt.k0.free_rank())));
  checks.push_back(make_check(
      "free rank K1_gr = free rank K1^gr", kh.k1.free_rank() == kt.k1.free_rank(),
      std::to_string(kh.k1.free_rank()) + " vs " + std::to_string(kt.k1.free_rank())));
  {
    const auto lhs = static_cast<long long>(kt.k0.free_rank()) -
                     static_cast<long long>(kt.k1.free_rank());
    const auto rhs = static_cast<long long>(n_vertices) - static_cast<long long>(n_relative);
    checks.push_back(make_check("rank-nullity", lhs == rhs,
                                std::to_string(lhs) + " vs |E0| - |V| = " + std::to_string(rhs)));
  }
  checks.push_back(make_check("K1^gr and K0_gr torsion-free", kt.k1.is_free() && kh.k0.is_free(),
                              kt.k1.to_string() + ", " + kh.k0.to_string()));
  {
    const auto seq = exact_sequence(kt);
    checks.push_back(make_check("K-theory exact sequence", seq.verified,
                                "rank " + std::to_string(seq.rank) + ", |V| " +
                                    std::to_string(seq.domain_rank) + ", |E0| " +
                                    std::to_string(seq.codomain_rank)));
  }
  {
    const auto seq = exact_sequence(kh);
    checks.push_back(make_check("K-homology exact sequence", seq.verified,
                                "rank " + std::to_string(seq.rank) + ", |E0| " +
                                    std::to_string(seq.domain_rank) + ", |V| " +
                                    std::to_string(seq.codomain_rank)));
  }

  report.passed = true;
  for (const auto& c : checks) report.passed = report.passed && c.passed;
  return report;
}

GroupTuple group_tuple(const KTheoryProblem& p) {
  const auto kt = graded_k_theory(p);
  const auto kh = graded_k_homology(p);
  return GroupTuple{kt.k0, kt.k1, kh.k0, kh.k1};
}

TailInvarianceReport tail_invariance_report(const Graph& g,
                                            const std::vector<std::string>& relative_set,
                                            const std::string& at, std::size_t max_length) {
  if (max_length < 1) throw InputError("max_length must be at least 1");
  if (!g.has_vertex(at)) throw InputError("unknown attachment vertex '" + at + "'", at);
  if (g.in_degree(at) != 0) {
    throw InputError("attachment vertex '" + at + "' already receives edges", at);
  }

  TailInvarianceReport report;
  report.at = at;
  report.baseline = group_tuple(make_problem(g, relative_set));
  for (std::size_t length = 1; length <= max_length; ++length) {
    const TailExtension ext = extend_with_tail(g, at, length);
    std::vector<std::string> v_set = relative_set;
    v_set.push_back(at);
    // The last fresh vertex is a source; the others now receive one edge each.
    v_set.insert(v_set.end(), ext.vertices.begin(), ext.vertices.end() - 1);
    report.per_length.push_back(group_tuple(make_problem(ext.graph, v_set)));
  }
  report.constant = true;
  for (const auto& t : report.per_length) report.constant = report.constant && t == report.per_length.front();
  report.matches_baseline = report.per_length.front() == report.baseline;
  return report;
}

}  // namespace gradedk
