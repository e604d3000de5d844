#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promo/chain.hpp"
#include "promo/linear_form.hpp"
#include "promo/promotion.hpp"
#include "promo/word.hpp"

namespace promo {

/// Nonempty set of permutations of [n].
struct PermSubset {
  int n = 0;
  Basis perms;
  bool contains_identity = false;
  bool is_sorting_network_union = false;
};

/// Validates and deduplicates; throws MalformedInput for an empty list,
/// non-permutations or mixed lengths.
PermSubset make_subset(std::vector<Word> perms);

/// One permutation per line; blank lines and '#' comments are ignored.
PermSubset parse_subset(std::string_view text);

/// pi with positions i, i+1 exchanged when the result lies in A.
/// Throws NotInSubset or IndexOutOfRange.
Word sigma(const PermSubset& a, const Word& pi, int i);

/// sigma_j sigma_{j+1} ... sigma_{n-1}, applied left to right.
Word subset_promotion(const PermSubset& a, const Word& pi, int j);

struct NetworkTarget {
  Word target;
  /// Explicit path e = w_0, w_1, ..., w_m = target; when absent every
  /// shortest path is used.
  std::optional<std::vector<Word>> chain;
};

/// Every permutation on some shortest adjacent-transposition path from the
/// identity to `target` (the weak order interval below it).
std::vector<Word> geodesic_interval(const Word& target);

/// Union of the chosen chains. Throws NotAGeodesic if an explicit chain does
/// not start at e, end at its target, or lengthen by one at each step.
PermSubset sorting_network_union(const std::vector<NetworkTarget>& targets);

PromotionGraph subset_graph(const PermSubset& a, WeightMode mode);
TransitionMatrix subset_matrix(const PermSubset& a, WeightMode mode);

/// Uniform mode: 1/|A| everywhere. Promotion mode: the unnormalized product
/// formula; requires positive weights (InvalidWeights).
std::vector<Rational> subset_stationary(const PermSubset& a, WeightMode mode,
                                        const WeightVector& w);

}  // namespace promo
