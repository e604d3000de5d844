#include "doctest.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "helpers.hpp"
#include "oracles.hpp"
#include "promo/catalog.hpp"
#include "promo/error.hpp"
#include "promo/poset.hpp"

using namespace promo;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::MalformedInput;
}

// Maximal chains from S to the top, counted over the oracle upper sets.
Integer chains_above(const std::vector<ElementSet>& sets, ElementSet s, ElementSet top) {
  if (s == top) return 1;
  Integer total = 0;
  for (ElementSet t : sets)
    if ((t & s) == s && std::popcount(t) == std::popcount(s) + 1) total += chains_above(sets, t, top);
  return total;
}

}  // namespace

TEST_CASE("parsing") {
  auto p = parse_poset("# comment\n4\n1 3\n1 4\n2 3\n");
  CHECK(p == test::running_example());
  auto q = parse_poset(R"({"n": 4, "covers": [[1, 3], [1, 4], [2, 3]]})");
  CHECK(q == p);
  CHECK(parse_poset(format_poset(p)) == p);

  auto r = Poset::from_relations(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(r.covers().size() == 2);
  CHECK(r.redundant_relations() == std::vector<Relation>{{1, 3}});

  CHECK(kind_of([] { parse_poset("3\n1 2\n2 3\n3 1\n"); }) == ErrorKind::CycleDetected);
  CHECK(kind_of([] { parse_poset("3\n2 1\n"); }) == ErrorKind::NotNaturallyLabeled);
  CHECK(kind_of([] { parse_poset("3\n1 x\n"); }) == ErrorKind::MalformedInput);
  CHECK(kind_of([] { parse_poset("2\n1 5\n"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("relabeling an arbitrary order") {
  auto r = relabel(3, {{3, 1}, {1, 2}});
  CHECK(r.poset.covers() == std::vector<Relation>{{1, 2}, {2, 3}});
  CHECK(r.new_label[3] == 1);
  CHECK(r.new_label[2] == 3);
}

TEST_CASE("linear extensions of the running example") {
  auto ext = linear_extensions(test::running_example());
  std::vector<Word> expected = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {2, 1, 3, 4}, {2, 1, 4, 3}};
  CHECK(ext == expected);
  CHECK(is_linear_extension(test::running_example(), {2, 1, 4, 3}));
  CHECK_FALSE(is_linear_extension(test::running_example(), {3, 1, 2, 4}));
  Limits tight;
  tight.max_extensions = 3;
  CHECK(kind_of([&] { linear_extensions(test::running_example(), tight); }) ==
        ErrorKind::SizeLimitExceeded);
}

TEST_CASE("linear extensions against brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_posets(n)) CHECK(linear_extensions(p) == oracle::extensions(p));
}

TEST_CASE("catalog sizes") {
  const std::vector<std::size_t> posets = {1, 2, 5, 16, 63, 318};
  const std::vector<std::size_t> forests = {1, 2, 4, 9, 20, 48};
  for (int n = 1; n <= 6; ++n) {
    CHECK(all_posets(n).size() == posets[n - 1]);
    CHECK(rooted_forests(n).size() == forests[n - 1]);
    CHECK(rooted_forests(n).size() + non_forests(n).size() == posets[n - 1]);
    CHECK(chain_unions(n).size() == (std::size_t{1} << (n - 1)));
  }
  for (const auto& p : all_posets(5)) {
    for (auto [a, b] : p.covers()) CHECK(a < b);
  }
}

TEST_CASE("upper sets and the Mobius function") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_posets(n)) {
      auto lattice = upper_set_lattice(p);
      auto expected = oracle::upper_sets(p);
      auto got = lattice.sets;
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      CHECK(lattice.sets.front() == 0);
      CHECK(lattice.sets.back() == p.ground_set());
      // Maximal chains from the bottom are the linear extensions.
      CHECK(maximal_chain_count(lattice, 0) == Integer(static_cast<unsigned long>(
                                                   oracle::extensions(p).size())));
    }
  }
  // A chain of two plus a point has six upper sets.
  auto p = Poset::from_relations(3, {{1, 2}});
  CHECK(upper_set_lattice(p).size() == 6);

  // Boolean lattice: mu(S, T) = (-1)^{|T \ S|}.
  auto boolean = upper_set_lattice(antichain_poset(4));
  for (ElementSet s : boolean.sets) {
    for (ElementSet t : boolean.sets) {
      std::int64_t expected = (t & s) == s ? ((std::popcount(t & ~s) % 2) ? -1 : 1) : 0;
      CHECK(mobius(boolean, s, t) == expected);
    }
  }
  CHECK_THROWS_AS(upper_set_lattice(p).index_of(element_bit(1)), Error);

  auto sets = oracle::upper_sets(test::running_example());
  auto lattice = upper_set_lattice(test::running_example());
  for (ElementSet s : sets)
    CHECK(maximal_chain_count(lattice, s) == chains_above(sets, s, lattice.sets.back()));
}

TEST_CASE("classification and derangements") {
  auto c = classify(test::running_example());
  CHECK_FALSE(c.is_rooted_forest);
  CHECK(classify(antichain_poset(3)).is_antichain);
  CHECK(classify(chain_union({2, 3})).is_consecutively_labeled_chains);
  auto shuffled = Poset::from_relations(4, {{1, 3}, {2, 4}});
  CHECK(classify(shuffled).is_union_of_chains);
  CHECK_FALSE(classify(shuffled).is_consecutively_labeled_chains);
  CHECK(classify(Poset::from_relations(4, {{1, 3}, {2, 3}, {3, 4}})).is_rooted_forest);
  CHECK_FALSE(classify(Poset::from_relations(3, {{1, 2}, {1, 3}})).is_rooted_forest);

  const std::vector<long> derangements = {1, 0, 1, 2, 9, 44, 265};
  for (int n = 0; n <= 6; ++n)
    CHECK(poset_derangement_count(antichain_poset(n)) == Integer(derangements[n]));
  CHECK(poset_derangement_count(chain_poset(4)) == 0);
}

TEST_CASE("induced subposets") {
  auto p = test::running_example();
  auto sub = induced_subposet(p, element_bit(1) | element_bit(3) | element_bit(4));
  CHECK(sub.size() == 3);
  CHECK(sub.covers() == std::vector<Relation>{{1, 2}, {1, 3}});
}
