#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "promo/poset.hpp"
#include "promo/word.hpp"

namespace promo {

// Operators act on the right. pi * d_j = ((pi * t_j) * t_{j+1}) ... * t_{n-1}:
// the factors are applied left to right.

/// Swaps positions i and i+1 when their letters are incomparable in P.
Word tau(const Poset& p, const Word& pi, int i);

/// d_j = t_j t_{j+1} ... t_{n-1}; d_n is the identity.
Word extended_promotion(const Poset& p, const Word& pi, int j);

/// The same operator computed by sliding: the letter at position j is removed
/// and the hole travels up through minimal covering labels until it reaches a
/// local maximum, then labels above j shift down by one.
Word extended_promotion_jdt(const Poset& p, const Word& pi, int j);

/// pi * d_{position of letter i}.
Word hat_promotion(const Poset& p, const Word& pi, int i);

enum class WeightMode { Uniform, Promotion };

std::string to_string(WeightMode mode);
WeightMode parse_weight_mode(std::string_view text);

struct PromotionEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Index k of the formal weight x_k carried by the edge.
  int label = 0;
};

/// Vertices are words in lexicographic order; every vertex has exactly n
/// outgoing edges (self-loops included) in order j = 1..n.
struct PromotionGraph {
  int n = 0;
  WeightMode mode = WeightMode::Promotion;
  Basis vertices;
  std::vector<PromotionEdge> edges;
};

/// Maps (word, j) to word * d_j.
using PromotionStep = std::function<Word(const Word&, int)>;

/// Builds the graph over any basis closed under `step`. Uniform mode labels
/// the d_j edge with j; promotion mode labels it with the letter pi_j.
PromotionGraph build_graph(int n, Basis vertices, const PromotionStep& step, WeightMode mode);

PromotionGraph build_promotion_graph(const Poset& p, WeightMode mode,
                                     const Limits& limits = {});

/// Every vertex reaches every other one.
bool is_strongly_connected(const PromotionGraph& g);

/// Graphviz rendering; vertices are named by their one-line words and edges
/// labeled x<k>. Parallel edges are kept separate.
std::string to_dot(const PromotionGraph& g, bool include_loops);

namespace detail {
// Unchecked versions for callers that already validated their input.
void apply_tau(const Poset& p, Word& pi, int i);
Word promote(const Poset& p, Word pi, int j);
}  // namespace detail

}  // namespace promo
