#include "gradedk/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace gradedk {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [from, rows) x [from, cols); row-major scan
// keeps the first (lowest row, then column) on ties.
std::optional<Position> find_pivot(const IntMatrix& d, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from; i < d.rows(); ++i) {
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  }
  return best;
}

// First entry of the trailing block not divisible by the pivot at (t, t).
std::optional<std::size_t> find_non_divisible_row(const IntMatrix& d, std::size_t t) {
  const Integer& pivot = d(t, t);
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(i, j) % pivot != 0) return i;
  return std::nullopt;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s;
  s.d = m.without_labels();
  s.u = IntMatrix::identity(m.rows());
  s.v = IntMatrix::identity(m.cols());
  IntMatrix& d = s.d;

  const std::size_t limit = std::min(d.rows(), d.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    while (true) {
      const auto pivot = find_pivot(d, t);
      if (!pivot) {
        return s;
      }
      d.swap_rows(t, pivot->row);
      s.u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      s.v.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      if (const auto row = find_non_divisible_row(d, t)) {
        d.add_row_multiple(t, *row, 1);
        s.u.add_row_multiple(t, *row, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    Integer g = 0;
    for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (g == 1) return;
      for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (g == 1) return;
        g = gcd(g, determinant(m.submatrix(rows, cols)));
      });
    });
    if (g == 0) break;
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = s.rank; j < m.cols(); ++j) basis.push_back(s.v.column(j));
  return basis;
}

AbelianGroup cokernel(const IntMatrix& m) {
  const SmithDecomposition s = smith_normal_form(m);
  auto diag = s.diagonal();
  diag.resize(s.rank);
  return AbelianGroup::from_diagonal(m.rows() - s.rank, diag);
}

AbelianGroup kernel(const IntMatrix& m) { return AbelianGroup::free(m.cols() - rank(m)); }

}  // namespace gradedk
