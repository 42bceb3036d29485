#pragma once

#include "gradedk/abelian_group.hpp"
#include "gradedk/problem.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gradedk {

/// Graded K-theory: K0 = coker(iota - A^t), K1 = ker(iota - A^t) with
/// iota - A^t : Z V -> Z E0.
struct GradedKTheoryResult {
  AbelianGroup k0;
  AbelianGroup k1;
  IntMatrix matrix;  // E0 x V
  std::size_t rank = 0;
  std::vector<std::vector<Integer>> kernel_basis;
  KTheoryProblem problem;
};

/// Graded K-homology: K^0 = ker(pi - A~), K^1 = coker(pi - A~) with
/// pi - A~ : Z^E0 -> Z^V. For a finite graph this is the transpose of the
/// K-theory matrix.
struct GradedKHomologyResult {
  AbelianGroup k0;
  AbelianGroup k1;
  IntMatrix matrix;  // V x E0
  std::size_t rank = 0;
  std::vector<std::vector<Integer>> kernel_basis;
  KTheoryProblem problem;
};

/// Four-term exact sequence 0 -> ker -> Z^domain -> Z^codomain -> coker -> 0.
struct ExactSequenceReport {
  AbelianGroup kernel;
  std::size_t domain_rank = 0;
  std::size_t codomain_rank = 0;
  AbelianGroup cokernel;
  IntMatrix connecting;
  std::size_t rank = 0;
  bool verified = false;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DualityReport {
  GradedKTheoryResult theory;
  GradedKHomologyResult homology;
  std::vector<Check> checks;
  bool passed = false;
};

GradedKTheoryResult graded_k_theory(const KTheoryProblem& p);
GradedKHomologyResult graded_k_homology(const KTheoryProblem& p);

/// Ungraded K-theory of C*(E): every parity forced to 0 and V = all regular vertices.
GradedKTheoryResult classical_k_theory(const Graph& g);
GradedKHomologyResult classical_k_homology(const Graph& g);

ExactSequenceReport exact_sequence(const GradedKTheoryResult& r);
ExactSequenceReport exact_sequence(const GradedKHomologyResult& r);

/// Cross-checks the K-theory and K-homology halves against each other:
/// torsion of K0 matches torsion of K^1, free ranks pair up, rank-nullity,
/// and both exact sequences verify.
DualityReport duality_report(const KTheoryProblem& p);

/// All four groups of a problem, in the order K0, K1, K^0, K^1.
struct GroupTuple {
  AbelianGroup k0;
  AbelianGroup k1;
  AbelianGroup kh0;
  AbelianGroup kh1;

  friend bool operator==(const GroupTuple&, const GroupTuple&) = default;
};

GroupTuple group_tuple(const KTheoryProblem& p);

struct TailInvarianceReport {
  std::string at;
  GroupTuple baseline;                // groups of the untailed problem
  std::vector<GroupTuple> per_length;  // index L-1 holds tail length L
  bool constant = false;
  bool matches_baseline = false;

  bool passed() const { return constant && matches_baseline; }
};

/// Adds tails of length 1..max_length at `at`, making the fresh chain
/// at, at_1, ..., at_{L-1} part of the relative set, and compares the groups.
/// Requires `at` to receive no edges and max_length >= 1 (InputError otherwise).
TailInvarianceReport tail_invariance_report(const Graph& g,
                                            const std::vector<std::string>& relative_set,
                                            const std::string& at, std::size_t max_length);

}  // namespace gradedk
