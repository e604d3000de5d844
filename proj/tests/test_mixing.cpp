#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "promo/catalog.hpp"
#include "promo/chain.hpp"
#include "promo/error.hpp"
#include "promo/mixing.hpp"
#include "promo/promotion.hpp"

using namespace promo;

TEST_CASE("bound arithmetic") {
  CHECK_FALSE(convergence_bound(4, Rational(1, 4), 59).has_value());
  CHECK(*convergence_bound(4, Rational(1, 4), 60) == 1.0);
  CHECK(*convergence_bound(4, Rational(1, 4), 120) == doctest::Approx(std::exp(-3.75)));
  CHECK_THROWS_AS(convergence_bound(4, Rational(0), 10), Error);
  CHECK(mixing_time_upper(4, Rational(1, 4), Rational(1)) == 128);
  CHECK_THROWS_AS(mixing_time_upper(4, Rational(-1), Rational(1)), Error);
  CHECK(bound_holds(Rational(49, 100), 0.5));
  CHECK_FALSE(bound_holds(Rational(1, 2), 0.5));
}

TEST_CASE("total variation") {
  Distribution p = {Rational(1, 2), Rational(1, 2), Rational(0)};
  Distribution q = {Rational(1, 4), Rational(1, 4), Rational(1, 2)};
  CHECK(total_variation(p, q) == Rational(1, 2));
  CHECK(total_variation(p, p) == 0);
  CHECK_THROWS_AS(total_variation(p, {Rational(1)}), Error);
  CHECK(point_mass(3, 1) == Distribution{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("exact distances to stationarity") {
  auto p = chain_union({2, 1});
  auto w = test::weights({1, 2, 5}).normalized();
  auto tm = transition_matrix(p, WeightMode::Promotion);
  auto m = evaluate(tm, w);
  auto pi = oracle::stationary(m);
  auto rows = mixing_table(p, w, 12);
  REQUIRE(rows.size() == 13);
  Rational worst0 = 0;
  for (const auto& x : pi) worst0 = std::max(worst0, Rational(1 - x));
  CHECK(rows[0].tv == worst0);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].tv <= rows[k - 1].tv);
    Rational worst = 0;
    for (std::size_t s = 0; s < pi.size(); ++s) {
      auto d = power_distribution(m, point_mass(pi.size(), s), k);
      worst = std::max(worst, total_variation(d, pi));
    }
    CHECK(rows[k].tv == worst);
  }
  auto single = mixing_table(p, w, 3, 0);
  CHECK(single[3].tv == total_variation(power_distribution(m, point_mass(pi.size(), 0), 3), pi));
  auto csv = to_csv(rows);
  CHECK(csv.rfind("k,tv_exact,bound,tv_approx\n", 0) == 0);
}

TEST_CASE("simulated walks") {
  auto p = test::running_example();
  auto w = test::weights({1, 2, 3, 4}).normalized();
  auto a = simulate_walk(p, w, 2000, 42);
  auto b = simulate_walk(p, w, 2000, 42);
  CHECK(a.trajectory == b.trajectory);
  CHECK(a.trajectory.size() == 2001);
  double total = 0;
  for (double f : a.empirical) total += f;
  CHECK(total == doctest::Approx(1.0));
  Basis basis(linear_extensions(p));
  std::vector<std::size_t> reachable;
  for (std::size_t k = 1; k < a.trajectory.size(); ++k) {
    const Word& from = basis[a.trajectory[k - 1]];
    bool ok = false;
    for (int i = 1; i <= 4; ++i) ok = ok || hat_promotion(p, from, i) == basis[a.trajectory[k]];
    CHECK(ok);
  }
  CHECK_THROWS_AS(simulate_walk(p, test::weights({1, 2, 3, 4}), 10, 1), Error);
}
