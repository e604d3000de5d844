#include "promo/monoid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "promo/error.hpp"
#include "promo/promotion.hpp"

namespace promo {

Transformation Transformation::identity(std::size_t size) {
  std::vector<std::uint32_t> images(size);
  std::iota(images.begin(), images.end(), 0u);
  return Transformation(std::move(images));
}

bool Transformation::is_constant() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](std::uint32_t v) { return v == images_.front(); });
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : t.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Transformation multiply(const Transformation& x, const Transformation& y, ProductOrder order) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "transformations act on different bases");
  }
  const Transformation& first = order == ProductOrder::Matrix ? y : x;
  const Transformation& second = order == ProductOrder::Matrix ? x : y;
  std::vector<std::uint32_t> images(x.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = second[first[i]];
  return Transformation(std::move(images));
}

std::vector<Transformation> generators(const Poset& p, const Limits& limits) {
  Basis basis(linear_extensions(p, limits));
  std::vector<Transformation> gens;
  for (int i = 1; i <= p.size(); ++i) {
    std::vector<std::uint32_t> images(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Word& pi = basis[j];
      images[j] = static_cast<std::uint32_t>(
          *basis.find(detail::promote(p, pi, positions(pi)[i])));
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

Monoid Monoid::generate(std::vector<Transformation> gens, ProductOrder order,
                        std::size_t cap) {
  if (gens.empty()) throw Error(ErrorKind::MalformedInput, "no generators");
  Monoid m;
  m.order_ = order;
  m.gens_ = std::move(gens);
  const std::size_t size = m.gens_.front().size();
  m.elements_.push_back(Transformation::identity(size));
  m.index_.emplace(m.elements_.front(), 0);
  for (std::size_t k = 0; k < m.elements_.size(); ++k) {
    for (const auto& g : m.gens_) {
      Transformation y = multiply(m.elements_[k], g, order);
      if (m.index_.count(y)) continue;
      if (m.elements_.size() >= cap) {
        throw Error(ErrorKind::CapExceeded,
                    "monoid has more than " + std::to_string(cap) + " elements");
      }
      m.index_.emplace(y, m.elements_.size());
      m.elements_.push_back(std::move(y));
    }
  }
  m.build_tables();
  return m;
}

Monoid Monoid::from_elements(std::vector<Transformation> gens,
                             std::vector<Transformation> elements, ProductOrder order) {
  Monoid m;
  m.order_ = order;
  m.gens_ = std::move(gens);
  m.elements_ = std::move(elements);
  for (std::size_t i = 0; i < m.elements_.size(); ++i) m.index_.emplace(m.elements_[i], i);
  if (m.elements_.empty() || !m.index_.count(Transformation::identity(m.elements_[0].size()))) {
    throw Error(ErrorKind::NotClosed, "element list does not contain the identity");
  }
  m.build_tables();
  return m;
}

std::size_t Monoid::index_of(const Transformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw Error(ErrorKind::NotClosed, "product leaves the monoid");
  return it->second;
}

std::size_t Monoid::product(std::size_t a, std::size_t b) const {
  return index_of(multiply(elements_[a], elements_[b], order_));
}

void Monoid::build_tables() {
  gen_index_.clear();
  for (const auto& g : gens_) gen_index_.push_back(index_of(g));
  right_.assign(elements_.size(), {});
  left_.assign(elements_.size(), {});
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (const auto& g : gens_) {
      right_[a].push_back(index_of(multiply(elements_[a], g, order_)));
      left_[a].push_back(index_of(multiply(g, elements_[a], order_)));
    }
  }
}

namespace {

// Strongly connected components (iterative Tarjan); ids are renumbered in
// order of the smallest vertex of each component.
std::vector<std::size_t> components(const std::vector<std::vector<std::size_t>>& adj,
                                    std::size_t& count) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0;
  std::size_t raw = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < adj[v].size()) {
        std::size_t w = adj[v][next++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = raw;
        } while (w != v);
        ++raw;
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  std::vector<std::size_t> renumber(raw, kUnset);
  count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (renumber[comp[v]] == kUnset) renumber[comp[v]] = count++;
    comp[v] = renumber[comp[v]];
  }
  return comp;
}

}  // namespace

GreenClasses green_classes(const Monoid& m) {
  GreenClasses g;
  g.r = components(m.right_table(), g.r_count);
  g.l = components(m.left_table(), g.l_count);
  const std::size_t n = m.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
  g.h.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = h_ids.try_emplace({g.r[x], g.l[x]}, h_ids.size());
    g.h[x] = it->second;
  }
  g.h_count = h_ids.size();
  // D is the join of R and L.
  std::vector<std::size_t> parent(g.r_count + g.l_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t a = find(g.r[x]);
    std::size_t b = find(g.r_count + g.l[x]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::size_t> d_ids;
  g.d.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = d_ids.try_emplace(find(g.r[x]), d_ids.size());
    g.d[x] = it->second;
  }
  g.d_count = d_ids.size();
  return g;
}

bool is_r_trivial(const Monoid& m) { return green_classes(m).r_count == m.size(); }
bool is_l_trivial(const Monoid& m) { return green_classes(m).l_count == m.size(); }
bool is_aperiodic(const Monoid& m) { return green_classes(m).h_count == m.size(); }

bool is_idempotent(const Monoid& m, std::size_t x) { return m.product(x, x) == x; }

RFactorStats rfactor_stats(const Monoid& m, const Basis& basis, int n, std::size_t x) {
  const Transformation& t = m[x];
  if (t.size() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "element and basis sizes differ");
  }
  RFactorStats stats;
  const Word& first = basis[t[0]];
  std::size_t common = first.size();
  for (std::size_t j = 1; j < t.size() && common > 0; ++j) {
    const Word& w = basis[t[j]];
    std::size_t k = 0;
    while (k < common && w[w.size() - 1 - k] == first[first.size() - 1 - k]) ++k;
    common = k;
  }
  stats.rfactor.assign(first.end() - static_cast<std::ptrdiff_t>(common), first.end());
  for (int letter : stats.rfactor) stats.rfactor_set |= element_bit(letter);
  // x G_i in the matrix sense applies G_i first.
  const auto& table = m.order() == ProductOrder::Matrix ? m.right_table() : m.left_table();
  for (int i = 1; i <= n; ++i) {
    if (table[x][i - 1] == x) stats.des |= element_bit(i);
  }
  stats.u = {n - static_cast<int>(common), std::popcount(stats.des)};
  return stats;
}

std::size_t EggBoxGrid::stars() const {
  std::size_t count = 0;
  for (const auto& row : cells) {
    for (const auto& cell : row) count += cell.idempotent;
  }
  return count;
}

EggBox eggbox(const Monoid& m) {
  auto g = green_classes(m);
  std::vector<std::vector<std::size_t>> members(g.d_count);
  for (std::size_t x = 0; x < m.size(); ++x) members[g.d[x]].push_back(x);
  std::vector<std::size_t> order(g.d_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return members[a].front() < members[b].front();
  });
  EggBox box;
  for (std::size_t d : order) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t x : members[d]) {
      if (std::find(rows.begin(), rows.end(), g.r[x]) == rows.end()) rows.push_back(g.r[x]);
      if (std::find(cols.begin(), cols.end(), g.l[x]) == cols.end()) cols.push_back(g.l[x]);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    EggBoxGrid grid;
    grid.cells.assign(rows.size(), std::vector<EggBoxCell>(cols.size()));
    for (std::size_t x : members[d]) {
      auto r = std::find(rows.begin(), rows.end(), g.r[x]) - rows.begin();
      auto c = std::find(cols.begin(), cols.end(), g.l[x]) - cols.begin();
      auto& cell = grid.cells[r][c];
      cell.elements.push_back(x);
      if (is_idempotent(m, x)) cell.idempotent = true;
    }
    box.grids.push_back(std::move(grid));
  }
  return box;
}

std::string to_ascii(const EggBox& box) {
  std::ostringstream out;
  for (std::size_t k = 0; k < box.grids.size(); ++k) {
    const auto& grid = box.grids[k];
    out << "D" << k + 1 << ": " << grid.rows() << "x" << grid.cols() << "\n";
    std::string rule = "+";
    for (std::size_t c = 0; c < grid.cols(); ++c) rule += "---+";
    out << rule << "\n";
    for (const auto& row : grid.cells) {
      out << "|";
      for (const auto& cell : row) out << (cell.idempotent ? " * |" : "   |");
      out << "\n" << rule << "\n";
    }
  }
  return out.str();
}

std::string to_dot(const EggBox& box) {
  std::ostringstream out;
  out << "digraph eggbox {\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < box.grids.size(); ++k) {
    out << "  d" << k + 1
        << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
    for (const auto& row : box.grids[k].cells) {
      out << "<TR>";
      for (const auto& cell : row) {
        out << "<TD WIDTH=\"24\" HEIGHT=\"24\">" << (cell.idempotent ? "&#9733;" : " ")
            << "</TD>";
      }
      out << "</TR>";
    }
    out << "</TABLE>>];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace promo
