#include "promo/promotion.hpp"

#include <queue>
#include <sstream>

#include "promo/error.hpp"

namespace promo {

namespace {

void check_extension(const Poset& p, const Word& pi) {
  if (!is_linear_extension(p, pi)) {
    throw Error(ErrorKind::NotALinearExtension,
                format_word(pi) + " is not a linear extension of " + p.encoding());
  }
}

void check_index(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(what) + " " + std::to_string(value) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

namespace detail {

void apply_tau(const Poset& p, Word& pi, int i) {
  if (!p.comparable(pi[i - 1], pi[i])) std::swap(pi[i - 1], pi[i]);
}

Word promote(const Poset& p, Word pi, int j) {
  for (int i = j; i < p.size(); ++i) apply_tau(p, pi, i);
  return pi;
}

}  // namespace detail

Word tau(const Poset& p, const Word& pi, int i) {
  check_extension(p, pi);
  check_index(i, 1, p.size() - 1, "tau index");
  Word out = pi;
  detail::apply_tau(p, out, i);
  return out;
}

Word extended_promotion(const Poset& p, const Word& pi, int j) {
  check_extension(p, pi);
  check_index(j, 1, p.size(), "promotion index");
  return detail::promote(p, pi, j);
}

Word extended_promotion_jdt(const Poset& p, const Word& pi, int j) {
  check_extension(p, pi);
  check_index(j, 1, p.size(), "promotion index");
  const int n = p.size();
  // label[e] is the position of element e; the hole is tracked by element.
  std::vector<int> label = positions(pi);
  int hole = pi[j - 1];
  for (;;) {
    int next = 0;
    for (int c : p.successors(hole)) {
      if (next == 0 || label[c] < label[next]) next = c;
    }
    if (next == 0) break;
    label[hole] = label[next];
    hole = next;
  }
  // The hole takes the label one past the top; every label above j drops by one.
  label[hole] = n + 1;
  for (int e = 1; e <= n; ++e) {
    if (label[e] > j) --label[e];
  }
  Word out(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) out[label[e] - 1] = e;
  return out;
}

Word hat_promotion(const Poset& p, const Word& pi, int i) {
  check_extension(p, pi);
  check_index(i, 1, p.size(), "letter");
  return detail::promote(p, pi, positions(pi)[i]);
}

std::string to_string(WeightMode mode) {
  return mode == WeightMode::Uniform ? "uniform" : "promotion";
}

WeightMode parse_weight_mode(std::string_view text) {
  if (text == "uniform") return WeightMode::Uniform;
  if (text == "promotion") return WeightMode::Promotion;
  throw Error(ErrorKind::MalformedInput,
              "mode must be 'uniform' or 'promotion', got '" + std::string(text) + "'");
}

PromotionGraph build_graph(int n, Basis vertices, const PromotionStep& step,
                           WeightMode mode) {
  PromotionGraph g;
  g.n = n;
  g.mode = mode;
  g.vertices = std::move(vertices);
  g.edges.reserve(g.vertices.size() * static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    const Word& pi = g.vertices[s];
    for (int j = 1; j <= n; ++j) {
      Word image = step(pi, j);
      auto t = g.vertices.find(image);
      if (!t) {
        throw Error(ErrorKind::NotClosed, format_word(pi) + " * d_" + std::to_string(j) +
                                              " = " + format_word(image) +
                                              " leaves the vertex set");
      }
      int label = mode == WeightMode::Uniform ? j : pi[j - 1];
      g.edges.push_back({s, *t, label});
    }
  }
  return g;
}

PromotionGraph build_promotion_graph(const Poset& p, WeightMode mode, const Limits& limits) {
  Basis basis(linear_extensions(p, limits));
  return build_graph(
      p.size(), std::move(basis),
      [&p](const Word& pi, int j) { return detail::promote(p, pi, j); }, mode);
}

bool is_strongly_connected(const PromotionGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> forward(n), backward(n);
  for (const auto& e : g.edges) {
    forward[e.source].push_back(e.target);
    backward[e.target].push_back(e.source);
  }
  auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(forward) && reaches_all(backward);
}

std::string to_dot(const PromotionGraph& g, bool include_loops) {
  std::ostringstream out;
  out << "digraph promotion {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << format_word(g.vertices[v]) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    if (!include_loops && e.source == e.target) continue;
    out << "  v" << e.source << " -> v" << e.target << " [label=\"x" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace promo
