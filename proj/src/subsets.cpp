#include "promo/subsets.hpp"

#include <queue>
#include <set>
#include <sstream>

#include "promo/error.hpp"

namespace promo {

PermSubset make_subset(std::vector<Word> perms) {
  if (perms.empty()) throw Error(ErrorKind::MalformedInput, "subset is empty");
  const int n = static_cast<int>(perms.front().size());
  for (const auto& w : perms) {
    if (static_cast<int>(w.size()) != n || !is_permutation(w)) {
      throw Error(ErrorKind::MalformedInput,
                  format_word(w) + " is not a permutation of [" + std::to_string(n) + "]");
    }
  }
  PermSubset a;
  a.n = n;
  a.perms = Basis(std::move(perms));
  a.contains_identity = a.perms.contains(identity_word(n));
  return a;
}

PermSubset parse_subset(std::string_view text) {
  std::vector<Word> perms;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      perms.push_back(parse_word(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedInput, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return make_subset(std::move(perms));
}

namespace {

void require_member(const PermSubset& a, const Word& pi) {
  if (!a.perms.contains(pi)) {
    throw Error(ErrorKind::NotInSubset, format_word(pi) + " is not in the subset");
  }
}

void apply_sigma(const PermSubset& a, Word& pi, int i) {
  std::swap(pi[i - 1], pi[i]);
  if (!a.perms.contains(pi)) std::swap(pi[i - 1], pi[i]);
}

}  // namespace

Word sigma(const PermSubset& a, const Word& pi, int i) {
  require_member(a, pi);
  if (i < 1 || i > a.n - 1) {
    throw Error(ErrorKind::IndexOutOfRange, "sigma index " + std::to_string(i));
  }
  Word out = pi;
  apply_sigma(a, out, i);
  return out;
}

Word subset_promotion(const PermSubset& a, const Word& pi, int j) {
  require_member(a, pi);
  if (j < 1 || j > a.n) {
    throw Error(ErrorKind::IndexOutOfRange, "promotion index " + std::to_string(j));
  }
  Word out = pi;
  for (int i = j; i < a.n; ++i) apply_sigma(a, out, i);
  return out;
}

std::vector<Word> geodesic_interval(const Word& target) {
  if (!is_permutation(target)) {
    throw Error(ErrorKind::MalformedInput, format_word(target) + " is not a permutation");
  }
  const int n = static_cast<int>(target.size());
  auto pos = positions(target);
  // A step swapping an ascent (a, b) stays on a geodesic to the target iff
  // b precedes a in the target.
  std::set<Word> seen{identity_word(n)};
  std::queue<Word> queue;
  queue.push(identity_word(n));
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop();
    for (int i = 0; i + 1 < n; ++i) {
      int a = w[i];
      int b = w[i + 1];
      if (a > b || pos[b] > pos[a]) continue;
      Word next = w;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

PermSubset sorting_network_union(const std::vector<NetworkTarget>& targets) {
  if (targets.empty()) throw Error(ErrorKind::MalformedInput, "no targets");
  std::vector<Word> all;
  const std::size_t n = targets.front().target.size();
  for (const auto& t : targets) {
    if (t.target.size() != n || !is_permutation(t.target)) {
      throw Error(ErrorKind::MalformedInput, "targets must be permutations of one size");
    }
    if (!t.chain) {
      auto interval = geodesic_interval(t.target);
      all.insert(all.end(), interval.begin(), interval.end());
      continue;
    }
    const auto& chain = *t.chain;
    if (chain.empty() || chain.front() != identity_word(static_cast<int>(n)) ||
        chain.back() != t.target) {
      throw Error(ErrorKind::NotAGeodesic,
                  "chain must run from the identity to " + format_word(t.target));
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const Word& from = chain[k];
      const Word& to = chain[k + 1];
      int differences = 0;
      std::size_t first = n;
      if (to.size() == n && is_permutation(to)) {
        for (std::size_t i = 0; i < n; ++i) {
          if (from[i] != to[i]) {
            ++differences;
            if (first == n) first = i;
          }
        }
      }
      bool adjacent = differences == 2 && first + 1 < n && from[first] == to[first + 1] &&
                      from[first + 1] == to[first];
      if (!adjacent || inversion_count(to) != inversion_count(from) + 1) {
        throw Error(ErrorKind::NotAGeodesic,
                    format_word(from) + " -> " + format_word(to) +
                        " is not a length-increasing adjacent transposition");
      }
    }
    all.insert(all.end(), chain.begin(), chain.end());
  }
  PermSubset a = make_subset(std::move(all));
  a.is_sorting_network_union = true;
  return a;
}

PromotionGraph subset_graph(const PermSubset& a, WeightMode mode) {
  return build_graph(
      a.n, a.perms,
      [&a](const Word& pi, int j) {
        Word out = pi;
        for (int i = j; i < a.n; ++i) apply_sigma(a, out, i);
        return out;
      },
      mode);
}

TransitionMatrix subset_matrix(const PermSubset& a, WeightMode mode) {
  return transition_matrix(subset_graph(a, mode));
}

std::vector<Rational> subset_stationary(const PermSubset& a, WeightMode mode,
                                        const WeightVector& w) {
  if (mode == WeightMode::Uniform) {
    return std::vector<Rational>(a.perms.size(),
                                 Rational(1, static_cast<unsigned long>(a.perms.size())));
  }
  if (w.size() != a.n) {
    throw Error(ErrorKind::DimensionMismatch, "weight count differs from permutation size");
  }
  w.require_positive(false);
  return product_weights(a.perms, w);
}

}  // namespace promo
