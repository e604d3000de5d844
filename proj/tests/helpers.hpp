#pragma once

#include <random>
#include <vector>

#include "promo/linear_form.hpp"
#include "promo/poset.hpp"

namespace test {

inline promo::Poset running_example() {
  return promo::Poset::from_relations(4, {{1, 3}, {1, 4}, {2, 3}});
}

inline promo::LinearForm form(std::vector<int> coeffs) {
  std::vector<promo::Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return promo::LinearForm(std::move(c));
}

inline promo::WeightVector weights(std::vector<int> values) {
  std::vector<promo::Rational> v;
  for (int x : values) v.emplace_back(x);
  return promo::WeightVector(std::move(v));
}

}  // namespace test
