#include "promo/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "promo/error.hpp"
#include "promo/modular.hpp"

namespace promo {

TransitionMatrix::TransitionMatrix(int n, WeightMode mode, Basis basis,
                                   std::vector<Column> columns)
    : n_(n), mode_(mode), basis_(std::move(basis)), columns_(std::move(columns)) {}

LinearForm TransitionMatrix::entry(std::size_t row, std::size_t col) const {
  if (row >= size() || col >= size()) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix index outside the basis");
  }
  for (const auto& [r, form] : columns_[col]) {
    if (r == row) return form;
  }
  return LinearForm(n_);
}

std::vector<LinearForm> TransitionMatrix::column_sums() const {
  std::vector<LinearForm> out(size(), LinearForm(n_));
  for (std::size_t c = 0; c < size(); ++c) {
    for (const auto& [r, form] : columns_[c]) out[c] += form;
  }
  return out;
}

std::vector<LinearForm> TransitionMatrix::row_sums() const {
  std::vector<LinearForm> out(size(), LinearForm(n_));
  for (std::size_t c = 0; c < size(); ++c) {
    for (const auto& [r, form] : columns_[c]) out[r] += form;
  }
  return out;
}

std::string TransitionMatrix::to_text() const {
  const std::size_t n = size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n, "0"));
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [r, form] : columns_[c]) cells[r][c] = form.to_string();
  }
  std::vector<std::size_t> width(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    width[c] = format_word(basis_[c]).size();
    for (std::size_t r = 0; r < n; ++r) width[c] = std::max(width[c], cells[r][c].size());
  }
  std::size_t label_width = 0;
  for (std::size_t r = 0; r < n; ++r) {
    label_width = std::max(label_width, format_word(basis_[r]).size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  std::ostringstream out;
  std::string header = pad("", label_width);
  for (std::size_t c = 0; c < n; ++c) header += "  " + pad(format_word(basis_[c]), width[c]);
  while (!header.empty() && header.back() == ' ') header.pop_back();
  out << header << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    std::string line = pad(format_word(basis_[r]), label_width);
    for (std::size_t c = 0; c < n; ++c) line += "  " + pad(cells[r][c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

TransitionMatrix transition_matrix(const PromotionGraph& g) {
  std::vector<std::map<std::size_t, LinearForm>> acc(g.vertices.size());
  for (const auto& e : g.edges) {
    auto [it, inserted] = acc[e.source].try_emplace(e.target, LinearForm(g.n));
    it->second[e.label - 1] += 1;
  }
  std::vector<TransitionMatrix::Column> columns(g.vertices.size());
  for (std::size_t c = 0; c < acc.size(); ++c) {
    for (auto& [r, form] : acc[c]) columns[c].emplace_back(r, std::move(form));
  }
  return TransitionMatrix(g.n, g.mode, g.vertices, std::move(columns));
}

TransitionMatrix transition_matrix(const Poset& p, WeightMode mode, const Limits& limits) {
  return transition_matrix(build_promotion_graph(p, mode, limits));
}

RationalMatrix evaluate(const TransitionMatrix& m, const WeightVector& w) {
  if (w.size() != m.n()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix over " + std::to_string(m.n()) +
                                                  " variables, weights have " +
                                                  std::to_string(w.size()));
  }
  RationalMatrix out(m.size(), m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    for (const auto& [r, form] : m.columns()[c]) out(r, c) = form.evaluate(w);
  }
  return out;
}

Rational ProductFormula::evaluate(const WeightVector& w) const {
  Rational num = 1;
  for (const auto& f : numerator) num *= f.evaluate(w);
  Rational den = 1;
  for (const auto& f : denominator) {
    Rational v = f.evaluate(w);
    if (sgn(v) == 0) {
      throw Error(ErrorKind::ZeroDenominator, "factor " + f.to_string() + " vanishes");
    }
    den *= v;
  }
  return num / den;
}

namespace {

std::string factor_string(const LinearForm& f) {
  int terms = 0;
  for (const auto& c : f.coeffs()) terms += sgn(c) != 0;
  std::string s = f.to_string();
  return terms > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string ProductFormula::to_string() const {
  std::string num;
  for (const auto& f : numerator) num += factor_string(f);
  if (num.empty()) num = "1";
  if (denominator.empty()) return num;
  std::string den;
  for (const auto& f : denominator) den += factor_string(f);
  if (denominator.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

ProductFormula product_formula(const Word& pi) {
  const int n = static_cast<int>(pi.size());
  ProductFormula out;
  LinearForm top(n);
  LinearForm prefix(n);
  for (int i = 0; i < n; ++i) {
    top[i] += 1;
    prefix[pi[i] - 1] += 1;
    if (top == prefix) continue;
    out.numerator.push_back(top);
    out.denominator.push_back(prefix);
  }
  return out;
}

ProductFormula stationary_weight(const Poset& p, const Word& pi) {
  if (!is_linear_extension(p, pi)) {
    throw Error(ErrorKind::NotALinearExtension,
                format_word(pi) + " is not a linear extension of " + p.encoding());
  }
  return product_formula(pi);
}

Rational stationary_weight(const Poset& p, const Word& pi, const WeightVector& w) {
  return stationary_weight(p, pi).evaluate(w);
}

std::vector<Rational> product_weights(const Basis& basis, const WeightVector& w) {
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& pi : basis.words()) {
    if (static_cast<int>(pi.size()) != w.size()) {
      throw Error(ErrorKind::DimensionMismatch, "word length differs from weight count");
    }
    // Direct prefix-sum evaluation; cheaper than building the formula.
    Rational num = 1;
    Rational den = 1;
    Rational top = 0;
    Rational prefix = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      top += w[static_cast<int>(i)];
      prefix += w[pi[i] - 1];
      num *= top;
      den *= prefix;
    }
    if (sgn(den) == 0) throw Error(ErrorKind::ZeroDenominator, "a prefix sum vanishes");
    out.push_back(num / den);
  }
  return out;
}

Rational partition_function(const Poset& p, const WeightVector& w, PartitionMode mode,
                            const Limits& limits) {
  if (w.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight count differs from poset size");
  }
  if (mode == PartitionMode::Brute) {
    Basis basis(linear_extensions(p, limits));
    Rational total = sum(product_weights(basis, w));
    if (sgn(total) == 0) throw Error(ErrorKind::ZeroDenominator, "weights sum to zero");
    return 1 / total;
  }
  if (!classify(p).is_rooted_forest) {
    throw Error(ErrorKind::NotRootedForest, p.encoding() + " is not a rooted forest");
  }
  Rational z = 1;
  Rational prefix = 0;
  for (int i = 1; i <= p.size(); ++i) {
    prefix += w[i - 1];
    Rational down = 0;
    for (int j : elements_of(p.at_or_below(i))) down += w[j - 1];
    if (sgn(prefix) == 0) throw Error(ErrorKind::ZeroDenominator, "a prefix sum vanishes");
    z *= down / prefix;
  }
  return z;
}

std::vector<Rational> normalize(const std::vector<Rational>& v) {
  Rational total = sum(v);
  if (sgn(total) == 0) throw Error(ErrorKind::ZeroDenominator, "vector sums to zero");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / total);
  return out;
}

std::vector<Rational> stationary_solve(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(m(r, c)) < 0) throw Error(ErrorKind::NotStochastic, "negative entry");
    }
  }
  auto sums = m.column_sums();
  for (std::size_t c = 0; c < n; ++c) {
    if (sums[c] != 1) {
      throw Error(ErrorKind::NotStochastic,
                  "column " + std::to_string(c) + " sums to " + to_string(sums[c]));
    }
  }
  if (n == 0) return {};
  if (n == 1) return {Rational(1)};

  // Integer matrix D (M - I); its kernel is the kernel of M - I.
  const Integer d = m.common_denominator();
  std::vector<Integer> b(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational x = m(r, c);
      if (r == c) x -= 1;
      if (sgn(x) == 0) continue;
      b[r * n + c] = d / x.get_den() * x.get_num();
    }
  }

  // Solve modulo growing sets of primes, reconstruct, and accept only a
  // vector that satisfies M v = v exactly. Rank n - 1 modulo one prime
  // already certifies that the kernel over Q is one dimensional.
  std::vector<modular::Crt> crt(n);
  std::size_t used = 0;
  std::size_t failures = 0;
  std::size_t next_check = 2;
  std::size_t prime_index = 0;
  constexpr std::size_t kMaxPrimes = 1 << 14;
  while (prime_index < kMaxPrimes) {
    auto primes = modular::large_primes(prime_index + 1);
    modular::u64 p = primes[prime_index++];
    auto v = modular::kernel_vector(modular::reduce(b, n, p));
    if (!v) {
      if (used == 0 && ++failures >= 3) {
        throw Error(ErrorKind::SolverSingular,
                    "M - I does not have a one dimensional kernel (reducible chain)");
      }
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) crt[i].add((*v)[i], p);
    ++used;
    if (used < next_check) continue;
    next_check *= 2;
    std::vector<Rational> candidate;
    candidate.reserve(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto r = modular::rational_reconstruct(crt[i].value(), crt[i].modulus());
      if (r) {
        candidate.push_back(*r);
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    if (m * candidate == candidate) return normalize(candidate);
  }
  throw Error(ErrorKind::SolverSingular, "no stationary vector found");
}

bool verify_master_equation(const TransitionMatrix& m, const std::vector<Rational>& v,
                            const WeightVector& w) {
  if (v.size() != m.size() || w.size() != m.n()) {
    throw Error(ErrorKind::DimensionMismatch, "candidate or weights do not match the matrix");
  }
  std::vector<Rational> inflow(m.size());
  std::vector<Rational> outflow_rate(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    for (const auto& [r, form] : m.columns()[c]) {
      Rational value = form.evaluate(w);
      inflow[r] += value * v[c];
      outflow_rate[c] += value;
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (inflow[i] != v[i] * outflow_rate[i]) return false;
  }
  return true;
}

}  // namespace promo
