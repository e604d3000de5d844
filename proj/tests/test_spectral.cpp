#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "promo/catalog.hpp"
#include "promo/error.hpp"
#include "promo/spectral.hpp"

using namespace promo;
using test::form;

namespace {

// d_S from the oracle upper sets: Mobius values by the defining recursion and
// maximal chain counts by recursion on covers.
std::map<ElementSet, Integer> derangement_oracle(const Poset& p) {
  auto sets = oracle::upper_sets(p);
  const ElementSet top = sets.back();
  std::map<ElementSet, Integer> chains;
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    if (*it == top) {
      chains[*it] = 1;
      continue;
    }
    Integer c = 0;
    for (ElementSet t : sets)
      if ((t & *it) == *it && std::popcount(t) == std::popcount(*it) + 1) c += chains[t];
    chains[*it] = c;
  }
  std::map<ElementSet, Integer> out;
  for (ElementSet s : sets) {
    std::map<ElementSet, Integer> mu;
    Integer d = 0;
    for (ElementSet t : sets) {  // sets are in increasing numeric order, so subsets come first
      if ((t & s) != s) continue;
      if (t == s) {
        mu[t] = 1;
      } else {
        Integer m = 0;
        for (auto& [u, value] : mu)
          if ((t & u) == u) m -= value;
        mu[t] = m;
      }
      d += mu[t] * chains[t];
    }
    out[s] = d;
  }
  return out;
}

}  // namespace

TEST_CASE("derangement numbers") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : rooted_forests(n)) {
      auto prediction = predicted_spectrum(p);
      auto expected = derangement_oracle(p);
      REQUIRE(prediction.items.size() == expected.size());
      for (const auto& item : prediction.items) CHECK(item.multiplicity == expected[item.upper_set]);
      CHECK(prediction.total_multiplicity() ==
            Integer(static_cast<unsigned long>(oracle::extensions(p).size())));
    }
  }
  // Chain of two plus a point.
  auto p = Poset::from_relations(3, {{1, 2}});
  auto prediction = predicted_spectrum(p);
  std::vector<long> d;
  for (const auto& item : prediction.items) d.push_back(item.multiplicity.get_si());
  CHECK(d == std::vector<long>{1, 1, 0, 0, 0, 1});
  CHECK(prediction.items[1].eigenvalue == form({0, 1, 0}));

  // Antichain: d_S = number of derangements of the complement.
  const std::vector<long> derangements = {1, 0, 1, 2, 9};
  for (const auto& item : predicted_spectrum(antichain_poset(4)).items)
    CHECK(item.multiplicity == derangements[4 - std::popcount(item.upper_set)]);
}

TEST_CASE("chain formula agrees with the lattice formula") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : chain_unions(n)) {
      auto a = predicted_spectrum(p);
      auto b = predicted_spectrum_chains(p);
      REQUIRE(a.items.size() == b.items.size());
      for (std::size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].upper_set == b.items[i].upper_set);
        CHECK(a.items[i].multiplicity == b.items[i].multiplicity);
      }
    }
  }
  CHECK_THROWS_AS(predicted_spectrum(test::running_example()), Error);
  CHECK_THROWS_AS(predicted_spectrum_chains(test::running_example()), Error);
  CHECK_THROWS_AS(predicted_spectrum_chains(Poset::from_relations(4, {{1, 3}, {2, 4}})), Error);
}

TEST_CASE("spectrum of rooted forests") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : rooted_forests(n)) {
      auto prediction = predicted_spectrum(p);
      auto w = WeightVector::random(n, rng);
      CHECK(verify_spectrum(p, prediction, w));
      auto m = evaluate(transition_matrix(p, WeightMode::Promotion), w);
      CHECK(prediction.polynomial(w).coeffs() == oracle::charpoly(m));
    }
  }
  // A wrong prediction is rejected.
  auto p = chain_union({1, 2});
  auto prediction = predicted_spectrum(p);
  std::swap(prediction.items[0].multiplicity, prediction.items[1].multiplicity);
  CHECK_FALSE(verify_spectrum(p, prediction, WeightVector::uniform(3).normalized()));
}

TEST_CASE("linear spectrum probe") {
  auto probe = probe_linear_spectrum(test::running_example());
  CHECK(probe.linear);
  CHECK(probe.residual_degree == 0);
  std::vector<std::pair<LinearForm, int>> got;
  for (const auto& ev : probe.eigenvalues) got.emplace_back(ev.form, ev.multiplicity);
  std::sort(got.begin(), got.end());
  std::vector<std::pair<LinearForm, int>> expected = {{form({-1, 0, 0, 0}), 1},
                                                      {form({0, 0, 0, 0}), 1},
                                                      {form({0, 0, 1, 0}), 1},
                                                      {form({0, 0, 1, 1}), 1},
                                                      {form({1, 1, 1, 1}), 1}};
  CHECK(got == expected);

  auto star = Poset::from_relations(4, {{1, 2}, {1, 3}, {1, 4}});
  auto nonlinear = probe_linear_spectrum(star);
  CHECK_FALSE(nonlinear.linear);
  CHECK(nonlinear.residual_degree == 5);

  ProbeOptions small;
  small.max_n = 3;
  CHECK_THROWS_AS(probe_linear_spectrum(test::running_example(), small), Error);
}

TEST_CASE("conditions on linear spectra") {
  auto report = check_conjecture(test::running_example());
  CHECK(report.hypothesis);
  CHECK(report.linear);
  CHECK(report.coeffs_pm1);
  CHECK(report.max_two_successors);
  CHECK(report.neg_coeff_condition);
  CHECK(report.consistent);
  CHECK_FALSE(check_conjecture(chain_poset(3)).hypothesis);

  // 1 < 2 < 3 < {4, 5}: the spectrum is 1 and -x1-x2-x3, but element 1 has a
  // single successor whose own successor count is one.
  auto tail = Poset::from_relations(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  auto exception = check_conjecture(tail);
  CHECK(exception.linear);
  CHECK(exception.coeffs_pm1);
  CHECK(exception.max_two_successors);
  CHECK_FALSE(exception.neg_coeff_condition);
  CHECK_FALSE(exception.consistent);
}
