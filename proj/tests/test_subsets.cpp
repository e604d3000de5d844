#include "doctest.h"

#include "helpers.hpp"
#include "promo/catalog.hpp"
#include "promo/error.hpp"
#include "promo/subsets.hpp"

using namespace promo;

TEST_CASE("sigma on a two element subset") {
  auto a = make_subset({{1, 2, 3}, {2, 1, 3}});
  CHECK(a.contains_identity);
  CHECK(sigma(a, {1, 2, 3}, 1) == Word{2, 1, 3});
  CHECK(sigma(a, {1, 2, 3}, 2) == Word{1, 2, 3});
  CHECK(sigma(a, {2, 1, 3}, 1) == Word{1, 2, 3});
  CHECK(subset_promotion(a, {1, 2, 3}, 1) == Word{2, 1, 3});
  CHECK_THROWS_AS(sigma(a, {3, 2, 1}, 1), Error);
  CHECK_THROWS_AS(sigma(a, {1, 2, 3}, 3), Error);
}

TEST_CASE("subset validation") {
  CHECK_THROWS_AS(make_subset({}), Error);
  CHECK_THROWS_AS(make_subset({{1, 1}}), Error);
  CHECK_THROWS_AS(make_subset({{1, 2}, {1, 2, 3}}), Error);
  auto a = parse_subset("# two\n123\n\n213\n123\n");
  CHECK(a.perms.size() == 2);
}

TEST_CASE("weak order intervals") {
  CHECK(geodesic_interval({3, 2, 1}).size() == 6);
  CHECK(geodesic_interval({1, 2, 3}).size() == 1);
  CHECK(geodesic_interval({2, 3, 1}).size() == 3);  // 123, 213, 231
  auto u = sorting_network_union({{{3, 2, 1}, std::nullopt}});
  CHECK(u.is_sorting_network_union);
}

TEST_CASE("explicit sorting networks") {
  std::vector<Word> chain = {{1, 2, 3, 4, 5}, {1, 2, 4, 3, 5}, {2, 1, 4, 3, 5},
                             {2, 4, 1, 3, 5}, {2, 4, 1, 5, 3}};
  auto a = sorting_network_union({{chain.back(), chain}});
  CHECK(a.perms.size() == 5);
  CHECK(is_strongly_connected(subset_graph(a, WeightMode::Promotion)));
  auto w = test::weights({1, 2, 3, 4, 5});
  auto v = subset_stationary(a, WeightMode::Promotion, w);
  CHECK(verify_master_equation(subset_matrix(a, WeightMode::Promotion), v, w));

  auto broken = chain;
  std::swap(broken[1], broken[2]);
  try {
    sorting_network_union({{broken.back(), broken}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGeodesic);
  }
}

TEST_CASE("linear extensions as a subset") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) {
      auto a = make_subset(linear_extensions(p));
      for (const auto& pi : a.perms.words()) {
        for (int i = 1; i < n; ++i) CHECK(sigma(a, pi, i) == tau(p, pi, i));
        for (int j = 1; j <= n; ++j) CHECK(subset_promotion(a, pi, j) == extended_promotion(p, pi, j));
      }
    }
  }
}
