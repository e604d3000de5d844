#include "promo/catalog.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <tuple>

#include "promo/error.hpp"

namespace promo {

Poset chain_poset(int n) {
  std::vector<Relation> rel;
  for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

Poset antichain_poset(int n) { return Poset::from_relations(n, {}); }

Poset chain_union(const std::vector<int>& sizes) {
  std::vector<Relation> rel;
  int next = 1;
  for (int size : sizes) {
    for (int i = 0; i + 1 < size; ++i) rel.emplace_back(next + i, next + i + 1);
    next += size;
  }
  return Poset::from_relations(next - 1, rel);
}

namespace {

using Signature = std::tuple<int, int, int, int>;

// Minimum relation bit mask over all relabelings that sort elements by an
// isomorphism invariant; equal for isomorphic posets.
std::uint64_t canonical_code(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<Signature, int>> keyed;
  for (int e = 1; e <= n; ++e) {
    keyed.push_back({{std::popcount(p.strictly_below(e)), std::popcount(p.strictly_above(e)),
                      static_cast<int>(p.predecessors(e).size()),
                      static_cast<int>(p.successors(e).size())},
                     e});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.emplace_back();
    groups.back().push_back(keyed[i].second);
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(n + 1, 0);
  auto evaluate = [&] {
    std::uint64_t code = 0;
    for (int a = 1; a <= n; ++a) {
      for (int b : elements_of(p.strictly_above(a))) {
        code |= std::uint64_t{1} << ((label[a] - 1) * n + (label[b] - 1));
      }
    }
    best = std::min(best, code);
  };
  auto recurse = [&](auto&& self, std::size_t g, int next) -> void {
    if (g == groups.size()) {
      evaluate();
      return;
    }
    auto members = groups[g];
    do {
      for (std::size_t i = 0; i < members.size(); ++i) {
        label[members[i]] = next + static_cast<int>(i);
      }
      self(self, g + 1, next + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  };
  recurse(recurse, 0, 1);
  return best;
}

}  // namespace

std::vector<Poset> all_posets(int n) {
  if (n < 1 || n > 8) {
    throw Error(ErrorKind::SizeLimitExceeded, "poset catalog supports 1 <= n <= 8");
  }
  // Every naturally labeled poset on [k+1] is a naturally labeled poset on [k]
  // plus a new maximal-label element whose strict down-set is an order ideal.
  std::vector<Poset> level{Poset::from_relations(0, {})};
  for (int k = 0; k < n; ++k) {
    std::vector<Poset> next;
    for (const auto& p : level) {
      auto lattice = upper_set_lattice(p);
      for (ElementSet upper : lattice.sets) {
        ElementSet ideal = p.ground_set() & ~upper;
        std::vector<Relation> rel = p.covers();
        for (int d : elements_of(ideal)) rel.emplace_back(d, k + 1);
        next.push_back(Poset::from_relations(k + 1, rel));
      }
    }
    level = std::move(next);
  }
  std::map<std::uint64_t, Poset> best;
  for (auto& p : level) {
    auto code = canonical_code(p);
    auto it = best.find(code);
    if (it == best.end()) {
      best.emplace(code, std::move(p));
    } else if (p < it->second) {
      it->second = std::move(p);
    }
  }
  std::vector<Poset> out;
  for (auto& [code, p] : best) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poset> rooted_forests(int n) {
  std::vector<Poset> out;
  for (auto& p : all_posets(n)) {
    if (classify(p).is_rooted_forest) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> non_forests(int n) {
  std::vector<Poset> out;
  for (auto& p : all_posets(n)) {
    if (!classify(p).is_rooted_forest) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> chain_unions(int n) {
  std::vector<Poset> out;
  if (n < 1) return out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> sizes{1};
    for (int i = 0; i < n - 1; ++i) {
      if (cuts & (1u << i)) {
        sizes.push_back(1);
      } else {
        ++sizes.back();
      }
    }
    out.push_back(chain_union(sizes));
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Integer> sample_integer_weights(int n, std::mt19937_64& rng) {
  if (n > 97) throw Error(ErrorKind::InvalidWeights, "at most 97 distinct weights");
  std::vector<int> pool(97);
  for (int i = 0; i < 97; ++i) pool[i] = i + 1;
  std::vector<Integer> out;
  for (int i = 0; i < n; ++i) {
    auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(97 - i)));
    std::swap(pool[i], pool[j]);
    out.emplace_back(pool[i]);
  }
  return out;
}

}  // namespace promo
