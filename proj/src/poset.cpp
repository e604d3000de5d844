#include "promo/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "promo/error.hpp"

namespace promo {

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  while (s != 0) {
    int e = std::countr_zero(s) + 1;
    out.push_back(e);
    s &= s - 1;
  }
  return out;
}

std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Poset Poset::from_relations(int n, const std::vector<Relation>& relations) {
  if (n < 0 || n > kMaxSize) {
    throw Error(ErrorKind::MalformedInput,
                "poset size " + std::to_string(n) + " outside [0, 64]");
  }
  Poset p;
  p.n_ = n;
  p.above_.assign(n + 1, 0);
  p.below_.assign(n + 1, 0);
  p.succ_.assign(n + 1, {});
  p.pred_.assign(n + 1, {});

  std::vector<Relation> input;
  for (auto [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorKind::MalformedInput,
                  "relation (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has an element outside [1, " + std::to_string(n) + "]");
    }
    if (a == b) {
      throw Error(ErrorKind::CycleDetected,
                  "element " + std::to_string(a) + " is related to itself");
    }
    p.above_[a] |= element_bit(b);
    input.emplace_back(a, b);
  }
  std::sort(input.begin(), input.end());
  input.erase(std::unique(input.begin(), input.end()), input.end());

  // Transitive closure by fixpoint iteration.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= n; ++a) {
      ElementSet reach = p.above_[a];
      for (int b : elements_of(p.above_[a])) reach |= p.above_[b];
      if (reach != p.above_[a]) {
        p.above_[a] = reach;
        changed = true;
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (p.above_[a] & element_bit(a)) {
      throw Error(ErrorKind::CycleDetected,
                  "element " + std::to_string(a) + " lies on a cycle");
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b : elements_of(p.above_[a])) {
      if (b < a) {
        throw Error(ErrorKind::NotNaturallyLabeled,
                    std::to_string(a) + " < " + std::to_string(b) +
                        " in the poset but " + std::to_string(a) + " > " +
                        std::to_string(b) + " as integers");
      }
      p.below_[b] |= element_bit(a);
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b : elements_of(p.above_[a])) {
      bool implied = false;
      for (int c : elements_of(p.above_[a])) {
        if (c != b && (p.above_[c] & element_bit(b))) {
          implied = true;
          break;
        }
      }
      if (!implied) {
        p.covers_.emplace_back(a, b);
        p.succ_[a].push_back(b);
        p.pred_[b].push_back(a);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& v : p.pred_) std::sort(v.begin(), v.end());
  for (const auto& r : input) {
    if (!std::binary_search(p.covers_.begin(), p.covers_.end(), r)) {
      p.redundant_.push_back(r);
    }
  }
  return p;
}

ElementSet Poset::ground_set() const {
  return n_ == 64 ? ~ElementSet{0} : (ElementSet{1} << n_) - 1;
}

std::string Poset::encoding() const {
  std::string out = std::to_string(n_) + "|";
  for (std::size_t i = 0; i < covers_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(covers_[i].first) + "," + std::to_string(covers_[i].second);
  }
  return out;
}

namespace {

Poset parse_json_poset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::MalformedInput, "JSON poset needs an integer field \"n\"");
  }
  int n = doc["n"].get<int>();
  if (n < 1) throw Error(ErrorKind::MalformedInput, "poset size must be positive");
  std::vector<Relation> rel;
  if (doc.contains("covers")) {
    const auto& covers = doc["covers"];
    if (!covers.is_array()) {
      throw Error(ErrorKind::MalformedInput, "\"covers\" must be an array");
    }
    for (const auto& pair : covers) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw Error(ErrorKind::MalformedInput, "each cover must be a pair [a, b]");
      }
      rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return Poset::from_relations(n, rel);
}

}  // namespace

Poset parse_poset(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json_poset(text);
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<int> n;
  std::vector<Relation> rel;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto to_int = [&](const std::string& t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size()) {
        throw Error(ErrorKind::MalformedInput,
                    "line " + std::to_string(line_no) + ": '" + t + "' is not an integer");
      }
      return v;
    };
    if (!n) {
      if (tokens.size() != 1) {
        throw Error(ErrorKind::MalformedInput,
                    "line " + std::to_string(line_no) + ": expected the element count");
      }
      n = to_int(tokens[0]);
      if (*n < 1) {
        throw Error(ErrorKind::MalformedInput,
                    "line " + std::to_string(line_no) + ": poset size must be positive");
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::MalformedInput,
                  "line " + std::to_string(line_no) + ": expected 'a b'");
    }
    rel.emplace_back(to_int(tokens[0]), to_int(tokens[1]));
  }
  if (!n) throw Error(ErrorKind::MalformedInput, "empty poset description");
  return Poset::from_relations(*n, rel);
}

std::string format_poset(const Poset& p) {
  std::string out = std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) {
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

Relabeling relabel(int n, const std::vector<Relation>& relations) {
  if (n < 0 || n > Poset::kMaxSize) {
    throw Error(ErrorKind::MalformedInput, "poset size outside [0, 64]");
  }
  std::vector<std::vector<int>> out(n + 1);
  std::vector<int> indegree(n + 1, 0);
  for (auto [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorKind::MalformedInput, "relation element outside [1, n]");
    }
    out[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int e = 1; e <= n; ++e) {
    if (indegree[e] == 0) ready.push(e);
  }
  std::vector<int> new_label(n + 1, 0);
  int next = 1;
  while (!ready.empty()) {
    int e = ready.top();
    ready.pop();
    new_label[e] = next++;
    for (int b : out[e]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (next != n + 1) throw Error(ErrorKind::CycleDetected, "relation has a cycle");
  std::vector<Relation> renamed;
  for (auto [a, b] : relations) renamed.emplace_back(new_label[a], new_label[b]);
  return {Poset::from_relations(n, renamed), new_label};
}

Poset induced_subposet(const Poset& p, ElementSet keep) {
  std::vector<int> kept = elements_of(keep & p.ground_set());
  std::vector<int> rank(p.size() + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) rank[kept[i]] = static_cast<int>(i) + 1;
  std::vector<Relation> rel;
  for (int a : kept) {
    for (int b : elements_of(p.strictly_above(a) & keep)) rel.emplace_back(rank[a], rank[b]);
  }
  return Poset::from_relations(static_cast<int>(kept.size()), rel);
}

bool is_linear_extension(const Poset& p, const Word& w) {
  if (static_cast<int>(w.size()) != p.size() || !is_permutation(w)) return false;
  auto pos = positions(w);
  for (auto [a, b] : p.covers()) {
    if (pos[a] > pos[b]) return false;
  }
  return true;
}

std::vector<Word> linear_extensions(const Poset& p, const Limits& limits) {
  std::vector<Word> out;
  Word current;
  current.reserve(p.size());
  std::function<void(ElementSet)> extend = [&](ElementSet placed) {
    if (static_cast<int>(current.size()) == p.size()) {
      if (out.size() >= limits.max_extensions) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits.max_extensions) +
                        " linear extensions");
      }
      out.push_back(current);
      return;
    }
    for (int e = 1; e <= p.size(); ++e) {
      if ((placed & element_bit(e)) == 0 && (p.strictly_below(e) & ~placed) == 0) {
        current.push_back(e);
        extend(placed | element_bit(e));
        current.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

std::optional<std::size_t> UpperSetLattice::find(ElementSet s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t UpperSetLattice::index_of(ElementSet s) const {
  auto i = find(s);
  if (!i) throw Error(ErrorKind::NotInLattice, format_set(s) + " is not an upper set");
  return *i;
}

UpperSetLattice upper_set_lattice(const Poset& p, const Limits& limits) {
  UpperSetLattice lattice;
  lattice.n = p.size();
  std::unordered_set<ElementSet> seen{0};
  std::vector<ElementSet> frontier{0};
  std::vector<ElementSet> all{0};
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet s : frontier) {
      for (int e = 1; e <= p.size(); ++e) {
        if ((s & element_bit(e)) == 0 && (p.strictly_above(e) & ~s) == 0) {
          ElementSet t = s | element_bit(e);
          if (seen.insert(t).second) {
            if (seen.size() > limits.max_upper_sets) {
              throw Error(ErrorKind::SizeLimitExceeded,
                          "more than " + std::to_string(limits.max_upper_sets) +
                              " upper sets");
            }
            next.push_back(t);
            all.push_back(t);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](ElementSet a, ElementSet b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return elements_of(a) < elements_of(b);
  });
  lattice.sets = std::move(all);
  for (std::size_t i = 0; i < lattice.sets.size(); ++i) lattice.index[lattice.sets[i]] = i;
  lattice.covers_up.assign(lattice.sets.size(), {});
  for (std::size_t i = 0; i < lattice.sets.size(); ++i) {
    ElementSet s = lattice.sets[i];
    for (int e = 1; e <= p.size(); ++e) {
      if ((s & element_bit(e)) == 0 && (p.strictly_above(e) & ~s) == 0) {
        lattice.covers_up[i].push_back(lattice.index.at(s | element_bit(e)));
      }
    }
    std::sort(lattice.covers_up[i].begin(), lattice.covers_up[i].end());
  }
  return lattice;
}

std::vector<std::int64_t> mobius_row(const UpperSetLattice& lattice, ElementSet s) {
  std::size_t start = lattice.index_of(s);
  std::vector<std::int64_t> mu(lattice.size(), 0);
  mu[start] = 1;
  // Sets are ordered by size, so every proper subset of sets[j] has a
  // smaller index.
  for (std::size_t j = start + 1; j < lattice.size(); ++j) {
    ElementSet t = lattice.sets[j];
    if ((s & ~t) != 0) continue;
    std::int64_t total = 0;
    for (std::size_t k = start; k < j; ++k) {
      ElementSet u = lattice.sets[k];
      if ((s & ~u) == 0 && (u & ~t) == 0) total += mu[k];
    }
    mu[j] = -total;
  }
  return mu;
}

std::int64_t mobius(const UpperSetLattice& lattice, ElementSet s, ElementSet t) {
  std::size_t j = lattice.index_of(t);
  return mobius_row(lattice, s)[j];
}

std::vector<Integer> maximal_chain_counts(const UpperSetLattice& lattice) {
  std::vector<Integer> f(lattice.size(), 0);
  for (std::size_t i = lattice.size(); i-- > 0;) {
    if (lattice.covers_up[i].empty()) {
      f[i] = 1;
      continue;
    }
    for (std::size_t j : lattice.covers_up[i]) f[i] += f[j];
  }
  return f;
}

Integer maximal_chain_count(const UpperSetLattice& lattice, ElementSet s) {
  return maximal_chain_counts(lattice)[lattice.index_of(s)];
}

Classification classify(const Poset& p) {
  Classification c;
  c.is_antichain = p.covers().empty();
  c.is_rooted_forest = true;
  c.is_union_of_chains = true;
  for (int e = 1; e <= p.size(); ++e) {
    if (p.successors(e).size() > 1) c.is_rooted_forest = false;
    if (p.successors(e).size() > 1 || p.predecessors(e).size() > 1) {
      c.is_union_of_chains = false;
    }
  }
  c.is_consecutively_labeled_chains =
      c.is_union_of_chains &&
      std::all_of(p.covers().begin(), p.covers().end(),
                  [](const Relation& r) { return r.second == r.first + 1; });
  return c;
}

Integer poset_derangement_count(const Poset& p, const Limits& limits) {
  Integer count = 0;
  std::size_t visited = 0;
  std::function<void(ElementSet, int)> extend = [&](ElementSet placed, int position) {
    if (position > p.size()) {
      ++count;
      if (++visited > limits.max_extensions) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits.max_extensions) +
                        " poset derangements");
      }
      return;
    }
    for (int e = 1; e <= p.size(); ++e) {
      if (e != position && (placed & element_bit(e)) == 0 &&
          (p.strictly_below(e) & ~placed) == 0) {
        extend(placed | element_bit(e), position + 1);
      }
    }
  };
  extend(0, 1);
  return count;
}

}  // namespace promo
