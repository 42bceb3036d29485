#pragma once

#include "gradedk/abelian_group.hpp"
#include "gradedk/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace gradedk {

/// Result of diagonalising m: u * m * v == d.
///
/// u and v are unimodular, d is diagonal with d(0,0) | d(1,1) | ... | d(rank-1,rank-1),
/// all of them positive, and every diagonal entry past `rank` is zero.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::size_t rank = 0;

  // The first min(rows, cols) diagonal entries of d.
  std::vector<Integer> diagonal() const;
};

/// Smith normal form with transforms.
///
/// Pivot rule: smallest nonzero absolute value in the active block, ties broken by
/// lowest (row, col). The output is a pure function of the input entries.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// gcd of all k x k minors for k = 1..rank(m), found by enumerating minors.
/// Shares no code with smith_normal_form and serves as its oracle.
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0} as a free abelian group. Only membership and rank are
/// meaningful; the vectors themselves are not canonical.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

/// Z^rows / image(m).
AbelianGroup cokernel(const IntMatrix& m);

/// Kernel of m as an abstract group (always free of rank cols - rank).
AbelianGroup kernel(const IntMatrix& m);

}  // namespace gradedk
