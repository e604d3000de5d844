#pragma once

// Slow reference implementations used to cross-check the library. They only
// rely on the cover relations of a poset and on plain rational arithmetic.

#include <algorithm>
#include <numeric>
#include <vector>

#include "promo/matrix.hpp"
#include "promo/poset.hpp"
#include "promo/word.hpp"

namespace oracle {

using promo::Rational;
using promo::Word;

// reach[a][b]: a < b, by Warshall over the covers.
inline std::vector<std::vector<bool>> closure(const promo::Poset& p) {
  const int n = p.size();
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
  for (auto [a, b] : p.covers()) reach[a][b] = true;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

inline std::vector<Word> extensions(const promo::Poset& p) {
  Word w(p.size());
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    std::vector<int> pos(p.size() + 1);
    for (int i = 0; i < p.size(); ++i) pos[w[i]] = i;
    bool ok = true;
    for (auto [a, b] : p.covers()) ok = ok && pos[a] < pos[b];
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// pi t_j t_{j+1} ... t_{n-1} with swaps of incomparable neighbours.
inline Word promotion(const promo::Poset& p, Word pi, int j) {
  auto reach = closure(p);
  for (int i = j; i < p.size(); ++i) {
    int a = pi[i - 1], b = pi[i];
    if (!reach[a][b] && !reach[b][a]) std::swap(pi[i - 1], pi[i]);
  }
  return pi;
}

// Rooted forests: move letter i to the end, then put the letters above i back
// into increasing order on the positions they occupy.
inline Word move_and_reorder(const promo::Poset& p, const Word& pi, int i) {
  auto reach = closure(p);
  Word out;
  for (int x : pi)
    if (x != i) out.push_back(x);
  out.push_back(i);
  std::vector<std::size_t> slots;
  std::vector<int> letters;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == i || reach[i][out[k]]) {
      slots.push_back(k);
      letters.push_back(out[k]);
    }
  }
  std::sort(letters.begin(), letters.end());
  for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = letters[k];
  return out;
}

inline std::vector<promo::ElementSet> upper_sets(const promo::Poset& p) {
  std::vector<promo::ElementSet> out;
  const promo::ElementSet full = (promo::ElementSet{1} << p.size()) - 1;
  for (promo::ElementSet s = 0; s <= full; ++s) {
    bool ok = true;
    for (auto [a, b] : p.covers())
      if ((s & promo::element_bit(a)) && !(s & promo::element_bit(b))) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

// Gaussian elimination on M - I with the last equation replaced by sum v = 1.
inline std::vector<Rational> stationary(const promo::RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c) - (r == c ? 1 : 0);
  for (std::size_t c = 0; c <= n; ++c) a[n - 1][c] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (a[pivot][c] == 0) ++pivot;
    std::swap(a[pivot], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i][n] / a[i][i];
  return v;
}

// Faddeev-LeVerrier: det(lambda I - A), ascending coefficients.
inline std::vector<Rational> charpoly(const promo::RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  promo::RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    promo::RationalMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    promo::RationalMatrix am = a * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

}  // namespace oracle
