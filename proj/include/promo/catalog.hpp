#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "promo/poset.hpp"
#include "promo/rational.hpp"

namespace promo {

Poset chain_poset(int n);
Poset antichain_poset(int n);

/// Disjoint union of chains of the given sizes, labeled consecutively within
/// chains (first chain 1..k1, next k1+1..k1+k2, ...).
Poset chain_union(const std::vector<int>& sizes);

/// One naturally labeled representative per isomorphism class of posets on n
/// elements, sorted by encoding. Intended for n <= 7.
std::vector<Poset> all_posets(int n);

std::vector<Poset> rooted_forests(int n);
std::vector<Poset> non_forests(int n);

/// Every consecutively labeled union of chains on n elements (one per
/// composition of n).
std::vector<Poset> chain_unions(int n);

/// Uniform integer in [0, bound) from a 64-bit engine by rejection sampling;
/// independent of the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// n pairwise distinct integers drawn from [1, 97].
std::vector<Integer> sample_integer_weights(int n, std::mt19937_64& rng);

}  // namespace promo
