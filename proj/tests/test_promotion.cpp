#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "promo/catalog.hpp"
#include "promo/error.hpp"
#include "promo/promotion.hpp"

using namespace promo;

TEST_CASE("tau and promotion on the running example") {
  auto p = test::running_example();
  CHECK(tau(p, {1, 2, 3, 4}, 1) == Word{2, 1, 3, 4});
  CHECK(tau(p, {1, 2, 3, 4}, 2) == Word{1, 2, 3, 4});  // 2 < 3
  CHECK(tau(p, {1, 2, 3, 4}, 3) == Word{1, 2, 4, 3});
  CHECK(extended_promotion(p, {1, 2, 3, 4}, 1) == Word{2, 1, 4, 3});
  CHECK(extended_promotion(p, {1, 2, 3, 4}, 4) == Word{1, 2, 3, 4});
  CHECK(hat_promotion(p, {1, 4, 2, 3}, 4) == extended_promotion(p, {1, 4, 2, 3}, 2));
  CHECK_THROWS_AS(tau(p, {1, 2, 3, 4}, 4), Error);
  CHECK_THROWS_AS(tau(p, {3, 1, 2, 4}, 1), Error);
}

TEST_CASE("promotion against the oracle and the sliding description") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_posets(n)) {
      for (const auto& pi : linear_extensions(p)) {
        for (int j = 1; j <= n; ++j) {
          auto expected = oracle::promotion(p, pi, j);
          CHECK(extended_promotion(p, pi, j) == expected);
          CHECK(extended_promotion_jdt(p, pi, j) == expected);
        }
      }
    }
  }
}

TEST_CASE("label promotion on rooted forests moves a letter to the end") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : rooted_forests(n)) {
      for (const auto& pi : linear_extensions(p)) {
        for (int i = 1; i <= n; ++i) CHECK(hat_promotion(p, pi, i) == oracle::move_and_reorder(p, pi, i));
      }
    }
  }
  auto chains = chain_union({3, 2});
  CHECK(hat_promotion(chains, {4, 1, 2, 3, 5}, 1) == Word{4, 1, 2, 5, 3});
}

TEST_CASE("promotion graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_posets(n)) {
      for (auto mode : {WeightMode::Uniform, WeightMode::Promotion}) {
        auto g = build_promotion_graph(p, mode);
        CHECK(g.edges.size() == g.vertices.size() * static_cast<std::size_t>(n));
        CHECK(is_strongly_connected(g));
        for (int j = 1; j <= n; ++j) {
          std::set<std::size_t> targets;
          for (std::size_t v = 0; v < g.vertices.size(); ++v)
            targets.insert(g.edges[v * n + (j - 1)].target);
          CHECK(targets.size() == g.vertices.size());
        }
      }
    }
  }
  auto g = build_promotion_graph(test::running_example(), WeightMode::Promotion);
  // The d_1 edge out of 2143 carries x_2, the d_4 edge x_3.
  CHECK(g.edges[4 * 4 + 0].label == 2);
  CHECK(g.edges[4 * 4 + 3].label == 3);
  auto dot = to_dot(g, false);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0 -> v4 [label=\"x1\"]") != std::string::npos);
  CHECK(dot.find("v0 -> v0") == std::string::npos);
  CHECK(parse_weight_mode("uniform") == WeightMode::Uniform);
  CHECK_THROWS_AS(parse_weight_mode("other"), Error);
}

TEST_CASE("a graph that is not strongly connected") {
  PromotionGraph g;
  g.n = 1;
  g.vertices = Basis({{1}, {2}});
  g.edges = {{0, 1, 1}, {1, 1, 1}};
  CHECK_FALSE(is_strongly_connected(g));
}
