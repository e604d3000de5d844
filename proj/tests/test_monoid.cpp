#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "promo/catalog.hpp"
#include "promo/error.hpp"
#include "promo/monoid.hpp"

using namespace promo;

namespace {

using Shape = std::tuple<std::size_t, std::size_t, std::size_t>;

std::multiset<Shape> shapes(const EggBox& box) {
  std::multiset<Shape> out;
  for (const auto& g : box.grids) out.insert({g.rows(), g.cols(), g.stars()});
  return out;
}

// x R y iff xM = yM, straight from the definition.
std::vector<std::set<std::size_t>> right_ideals(const Monoid& m) {
  std::vector<std::set<std::size_t>> out(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) out[x].insert(m.product(x, y));
  return out;
}

}  // namespace

TEST_CASE("product orders") {
  Transformation x({1, 1, 2});
  Transformation y({2, 0, 0});
  // Matrix order applies y first: i -> x[y[i]].
  CHECK(multiply(x, y, ProductOrder::Matrix) == Transformation({2, 1, 1}));
  CHECK(multiply(x, y, ProductOrder::Action) == Transformation({0, 0, 0}));
  CHECK(Transformation({2, 2, 2}).is_constant());
}

TEST_CASE("move-to-end monoid sizes") {
  // Words of distinct letters of length < n, one map each.
  const std::vector<std::size_t> sizes = {1, 3, 10, 41, 206};
  for (int n = 1; n <= 5; ++n) {
    auto m = Monoid::generate(generators(antichain_poset(n)), ProductOrder::Matrix);
    CHECK(m.size() == sizes[n - 1]);
    CHECK(is_r_trivial(m));
  }
}

TEST_CASE("small examples") {
  auto two = Monoid::generate(generators(Poset::from_relations(3, {{1, 2}})), ProductOrder::Matrix);
  CHECK(two.size() == 6);
  CHECK(is_r_trivial(two));
  CHECK(is_aperiodic(two));

  auto gens = generators(test::running_example());
  auto m = Monoid::generate(gens, ProductOrder::Matrix);
  CHECK(m.size() == 20);
  CHECK_FALSE(is_r_trivial(m));
  CHECK_FALSE(is_aperiodic(m));
  CHECK_THROWS_AS(Monoid::generate(gens, ProductOrder::Matrix, 10), Error);
}

TEST_CASE("Green's relations against the definition") {
  auto m = Monoid::generate(generators(test::running_example()), ProductOrder::Matrix);
  auto classes = green_classes(m);
  auto ideals = right_ideals(m);
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) {
      CHECK((classes.r[x] == classes.r[y]) == (ideals[x] == ideals[y]));
      CHECK((classes.h[x] == classes.h[y]) ==
            (classes.r[x] == classes.r[y] && classes.l[x] == classes.l[y]));
    }
  }
  CHECK(classes.d_count == 9);
  std::size_t idempotents = 0;
  for (std::size_t x = 0; x < m.size(); ++x) idempotents += is_idempotent(m, x);
  CHECK(idempotents == 10);

  // The two orders exchange R and L.
  auto action = Monoid::generate(generators(test::running_example()), ProductOrder::Action);
  auto other = green_classes(action);
  CHECK(other.r_count == classes.l_count);
  CHECK(other.l_count == classes.r_count);
}

TEST_CASE("rooted forests give R-trivial monoids") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : rooted_forests(n)) {
      auto gens = generators(p);
      CHECK(is_r_trivial(Monoid::generate(gens, ProductOrder::Matrix)));
      CHECK(is_l_trivial(Monoid::generate(gens, ProductOrder::Action)));
    }
  }
}

TEST_CASE("egg-box pictures") {
  auto running = eggbox(Monoid::generate(generators(test::running_example()), ProductOrder::Action));
  std::multiset<Shape> expected = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 0}, {2, 1, 0},
                                   {1, 2, 2}, {1, 2, 0}, {1, 5, 5}, {2, 2, 0}};
  CHECK(shapes(running) == expected);

  auto p = Poset::from_relations(4, {{1, 2}, {1, 3}, {2, 4}});
  auto box = eggbox(Monoid::generate(generators(p), ProductOrder::Action));
  CHECK(shapes(box) == std::multiset<Shape>{{1, 1, 1}, {1, 3, 3}, {3, 3, 6}});
  for (const auto& g : box.grids) {
    if (g.rows() != 3) continue;
    for (const auto& row : g.cells) {
      int stars = 0;
      for (const auto& cell : row) stars += cell.idempotent;
      CHECK(stars == 2);
    }
  }
  auto ascii = to_ascii(box);
  CHECK(ascii.find("D2: 1x3") != std::string::npos);
  CHECK(to_dot(box).find("digraph") != std::string::npos);
}

TEST_CASE("statistic on the monoid") {
  auto p = antichain_poset(3);
  auto basis = Basis(linear_extensions(p));
  auto m = Monoid::generate(generators(p), ProductOrder::Matrix);
  auto identity = rfactor_stats(m, basis, 3, m.index_of(Transformation::identity(m[0].size())));
  CHECK(identity.u == std::pair<int, int>{3, 0});
  CHECK(identity.rfactor.empty());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m[x].is_constant()) continue;
    auto s = rfactor_stats(m, basis, 3, x);
    CHECK(s.u == std::pair<int, int>{0, 3});
  }
  // G_1 moves 1 to the end: every image ends in 1.
  auto g1 = rfactor_stats(m, basis, 3, m.generator_index(0));
  CHECK(g1.rfactor == Word{1});
  CHECK(g1.des == element_bit(1));
}

TEST_CASE("explicit element lists") {
  auto gens = generators(Poset::from_relations(3, {{1, 2}}));
  auto m = Monoid::generate(gens, ProductOrder::Matrix);
  auto elements = m.elements();
  auto same = Monoid::from_elements(gens, elements, ProductOrder::Matrix);
  CHECK(same.size() == m.size());
  elements.pop_back();
  CHECK_THROWS_AS(Monoid::from_elements(gens, elements, ProductOrder::Matrix), Error);
}
