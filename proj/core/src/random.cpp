#include "gradedk/random.hpp"

#include <algorithm>

namespace gradedk {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_vertices));
  const std::size_t m = uniform(rng, 0, max_edges);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back(Edge{"e" + std::to_string(i), vertices[uniform(rng, 0, n - 1)],
                         vertices[uniform(rng, 0, n - 1)],
                         uniform(rng, 0, 1) ? Parity::odd : Parity::even});
  }
  return Graph(std::move(vertices), std::move(edges));
}

std::vector<std::string> random_relative_set(Rng& rng, const Graph& g) {
  std::vector<std::string> out;
  for (const auto& v : regular_vertices(g))
    if (uniform(rng, 0, 1)) out.push_back(v);
  return out;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<long long> factor(-3, 3);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    switch (uniform(rng, 0, 2)) {
      case 0:
        u.swap_rows(a, b);
        break;
      case 1:
        u.negate_row(a);
        break;
      default:
        if (a != b) u.add_row_multiple(a, b, Integer(factor(rng)));
        break;
    }
  }
  return u;
}

std::vector<std::string> random_permutation(Rng& rng, std::vector<std::string> items) {
  std::shuffle(items.begin(), items.end(), rng);
  return items;
}

}  // namespace gradedk
