#include "gradedk/random.hpp"
#include "gradedk/tails.hpp"

#include <gtest/gtest.h>

namespace gradedk {
namespace {

Graph o2_plus_isolated() {
  return Graph({"v", "w"}, {Edge{"e1", "v", "v"}, Edge{"e2", "v", "v"}});
}

TEST(TailSweepConfig, Validation) {
  EXPECT_THROW(TailSweepConfig({"w"}, 0), InputError);
  EXPECT_THROW(TailSweepConfig({"w", "w"}, 2), InputError);
  EXPECT_NO_THROW(TailSweepConfig({"w", "x"}, 2));
}

TEST(Sweep, CuntzTwoIsolatedVertex) {
  const auto result = sweep(o2_plus_isolated(), {"v"}, TailSweepConfig({"w"}, 4));
  ASSERT_EQ(result.points.size(), 1u);
  ASSERT_TRUE(result.points[0].report);
  const auto& lengths = result.points[0].report->per_length;
  ASSERT_EQ(lengths.size(), 4u);
  for (const auto& t : lengths) EXPECT_EQ(t, lengths.front());
  EXPECT_TRUE(result.passed);
}

TEST(Sweep, SingleLengthIsTriviallyConstant) {
  const auto result = sweep(o2_plus_isolated(), {"v"}, TailSweepConfig({"w"}, 1));
  ASSERT_TRUE(result.points[0].report);
  EXPECT_EQ(result.points[0].report->per_length.size(), 1u);
  EXPECT_TRUE(result.points[0].report->constant);
}

TEST(Sweep, BadPointDoesNotStopOthers) {
  const Graph g({"v", "w", "x"}, {Edge{"e1", "v", "v"}, Edge{"e2", "v", "v"}});
  const auto result = sweep(g, {"v"}, TailSweepConfig({"v", "w", "x"}, 3));
  ASSERT_EQ(result.points.size(), 3u);
  EXPECT_EQ(result.points[0].at, "v");
  EXPECT_FALSE(result.points[0].report);
  EXPECT_NE(result.points[0].error.find("receives"), std::string::npos);
  EXPECT_TRUE(result.points[1].passed());
  EXPECT_TRUE(result.points[2].passed());
  EXPECT_FALSE(result.passed);
}

TEST(SweepProperties, TailsCompose) {
  // Tail of length L, then length M at its fresh end, equals one tail of length L + M.
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 5, 8);
    const auto& at = g.vertices()[trial % g.vertex_count()];
    const std::size_t l = 1 + trial % 3;
    const std::size_t m = 1 + (trial / 3) % 3;
    const auto first = extend_with_tail(g, at, l);
    const auto second = extend_with_tail(first.graph, first.vertices.back(), m);
    const Graph direct = add_tail(g, at, l + m);
    EXPECT_EQ(second.graph.vertex_count(), direct.vertex_count());
    EXPECT_EQ(second.graph.edge_count(), direct.edge_count());

    auto v_set = regular_vertices(direct);
    const auto composed = group_tuple(make_problem(second.graph, regular_vertices(second.graph)));
    EXPECT_EQ(composed, group_tuple(make_problem(direct, v_set)));
  }
}

}  // namespace
}  // namespace gradedk
