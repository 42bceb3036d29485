#pragma once

#include "gradedk/graph.hpp"
#include "gradedk/int_matrix.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace gradedk {

using Rng = std::mt19937_64;

// Vertices v0..v{n-1}, edges e0..e{m-1}; n in [1, max_vertices], m in [0, max_edges].
Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

// Uniformly random subset of the regular vertices.
std::vector<std::string> random_relative_set(Rng& rng, const Graph& g);

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo, long long hi);

// Product of `steps` random elementary operations applied to the identity.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 12);

std::vector<std::string> random_permutation(Rng& rng, std::vector<std::string> items);

}  // namespace gradedk
