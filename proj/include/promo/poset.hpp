#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "promo/rational.hpp"
#include "promo/word.hpp"

namespace promo {

/// Subset of [n] as a bit mask; element e occupies bit e-1.
using ElementSet = std::uint64_t;

constexpr ElementSet element_bit(int e) { return ElementSet{1} << (e - 1); }

std::vector<int> elements_of(ElementSet s);
std::string format_set(ElementSet s);

/// Enumeration caps. Exceeding a cap raises SizeLimitExceeded; results are
/// never silently truncated.
struct Limits {
  std::size_t max_extensions = 1'000'000;
  std::size_t max_upper_sets = std::size_t{1} << 20;
};

using Relation = std::pair<int, int>;

/// A finite naturally labeled poset on [n] (n <= 64), stored by its cover
/// relations and the transitive closure.
class Poset {
 public:
  static constexpr int kMaxSize = 64;

  Poset() = default;

  /// Validates and reduces `relations` ((a, b) means a < b). Transitively
  /// implied pairs are dropped and reported by redundant_relations().
  static Poset from_relations(int n, const std::vector<Relation>& relations);

  int size() const { return n_; }
  const std::vector<Relation>& covers() const { return covers_; }
  const std::vector<Relation>& redundant_relations() const { return redundant_; }

  bool less(int a, int b) const { return (above_[a] & element_bit(b)) != 0; }
  bool less_equal(int a, int b) const { return a == b || less(a, b); }
  bool comparable(int a, int b) const { return less_equal(a, b) || less(b, a); }

  ElementSet strictly_above(int e) const { return above_[e]; }
  ElementSet strictly_below(int e) const { return below_[e]; }
  ElementSet at_or_above(int e) const { return above_[e] | element_bit(e); }
  ElementSet at_or_below(int e) const { return below_[e] | element_bit(e); }

  /// Upper covers of e (elements covering e), ascending.
  const std::vector<int>& successors(int e) const { return succ_[e]; }
  /// Lower covers of e, ascending.
  const std::vector<int>& predecessors(int e) const { return pred_[e]; }

  ElementSet ground_set() const;

  /// Canonical string "n|a,b;a,b;..." listing the covers in order.
  std::string encoding() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }
  friend bool operator<(const Poset& a, const Poset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.covers_ < b.covers_;
  }

 private:
  int n_ = 0;
  std::vector<Relation> covers_;
  std::vector<Relation> redundant_;
  std::vector<ElementSet> above_{0};
  std::vector<ElementSet> below_{0};
  std::vector<std::vector<int>> succ_{{}};
  std::vector<std::vector<int>> pred_{{}};
};

/// Text format (first line n, then "a b" per cover, '#' comments) or the JSON
/// object {"n": int, "covers": [[a,b],...]}.
Poset parse_poset(std::string_view text);
std::string format_poset(const Poset& p);

struct Relabeling {
  Poset poset;
  /// new_label[old] for old in [1, n]; index 0 unused.
  std::vector<int> new_label;
};

/// Relabels an arbitrary acyclic relation naturally (smallest available
/// label first) and returns the relabeling used.
Relabeling relabel(int n, const std::vector<Relation>& relations);

/// Subposet induced on `keep`, with its elements renumbered 1..k in
/// increasing order.
Poset induced_subposet(const Poset& p, ElementSet keep);

bool is_linear_extension(const Poset& p, const Word& w);

/// All linear extensions in lexicographic order (identity first).
std::vector<Word> linear_extensions(const Poset& p, const Limits& limits = {});

struct UpperSetLattice {
  int n = 0;
  /// Ordered by size, then by element list; sets.front() is empty and
  /// sets.back() is [n].
  std::vector<ElementSet> sets;
  /// covers_up[i] lists indices j with sets[j] = sets[i] + one element.
  std::vector<std::vector<std::size_t>> covers_up;
  std::unordered_map<ElementSet, std::size_t> index;

  std::size_t size() const { return sets.size(); }
  std::optional<std::size_t> find(ElementSet s) const;
  /// Throws NotInLattice.
  std::size_t index_of(ElementSet s) const;
};

UpperSetLattice upper_set_lattice(const Poset& p, const Limits& limits = {});

/// mu(S, U) for every U in the lattice (zero unless S is contained in U),
/// computed by the recursive defining sum.
std::vector<std::int64_t> mobius_row(const UpperSetLattice& lattice, ElementSet s);

std::int64_t mobius(const UpperSetLattice& lattice, ElementSet s, ElementSet t);

/// Number of maximal chains of [S, top] for every S, by dynamic programming
/// over the inclusion covers.
std::vector<Integer> maximal_chain_counts(const UpperSetLattice& lattice);

Integer maximal_chain_count(const UpperSetLattice& lattice, ElementSet s);

struct Classification {
  bool is_rooted_forest = false;
  bool is_union_of_chains = false;
  bool is_consecutively_labeled_chains = false;
  bool is_antichain = false;
};

/// Rooted forest: every element has at most one successor (upper cover).
Classification classify(const Poset& p);

/// Number of linear extensions without fixed points; 1 for the empty poset.
Integer poset_derangement_count(const Poset& p, const Limits& limits = {});

}  // namespace promo
