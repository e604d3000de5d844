#include "promo/modular.hpp"

#include <mutex>
#include <utility>

namespace promo::modular {

namespace {

using u128 = unsigned __int128;

// Multiplication by a fixed w modulo p with a precomputed quotient
// approximation (Shoup's trick); valid for p < 2^63.
struct FixedMultiplier {
  u64 w;
  u64 w_shoup;
  u64 p;

  FixedMultiplier(u64 w_, u64 p_)
      : w(w_), w_shoup(static_cast<u64>((static_cast<u128>(w_) << 64) / p_)), p(p_) {}

  u64 operator()(u64 x) const {
    u64 q = static_cast<u64>((static_cast<u128>(x) * w_shoup) >> 64);
    u64 r = x * w - q * p;
    return r >= p ? r - p : r;
  }
};

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

// dst[k] -= w * src[k] for k in [from, to).
void axpy_neg(u64* dst, const u64* src, std::size_t from, std::size_t to,
              const FixedMultiplier& w) {
  const u64 p = w.p;
  for (std::size_t k = from; k < to; ++k) {
    if (src[k] != 0) dst[k] = sub_mod(dst[k], w(src[k]), p);
  }
}

// sum_k a[k] * b[k] mod p with 128-bit accumulation; products are below
// 2^124 so sixteen of them fit before a reduction is needed.
u64 dot(const u64* a, const u64* b, std::size_t len, u64 p) {
  u64 result = 0;
  std::size_t k = 0;
  while (k < len) {
    std::size_t stop = std::min(len, k + 16);
    u128 acc = 0;
    for (; k < stop; ++k) acc += static_cast<u128>(a[k]) * b[k];
    result = add_mod(result, static_cast<u64>(acc % p), p);
  }
  return result;
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : small) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mutex);
  u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

ModMatrix reduce(const std::vector<Integer>& entries, std::size_t n, u64 p) {
  ModMatrix m{n, p, std::vector<u64>(n * n)};
  for (std::size_t i = 0; i < n * n; ++i) {
    const Integer& x = entries[i];
    if (sgn(x) == 0) continue;
    // mpz_fdiv_ui returns the nonnegative residue.
    m.a[i] = mpz_fdiv_ui(x.get_mpz_t(), p);
  }
  return m;
}

std::vector<u64> charpoly(ModMatrix m) {
  const std::size_t n = m.n;
  const u64 p = m.p;
  u64* a = m.a.data();
  std::vector<u64> u;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) continue;
    const std::size_t target = col + 1;
    if (piv != target) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[target * n + k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r * n + piv], a[r * n + target]);
    }
    const u64 inv = inv_mod(a[target * n + col], p);
    const FixedMultiplier inv_mul(inv, p);
    const std::size_t first = col + 2;
    u.assign(n - first, 0);
    bool any = false;
    for (std::size_t i = first; i < n; ++i) {
      u64 entry = a[i * n + col];
      if (entry == 0) continue;
      u64 factor = inv_mul(entry);
      u[i - first] = factor;
      any = true;
      axpy_neg(a + i * n, a + target * n, col, n, FixedMultiplier(factor, p));
      a[i * n + col] = 0;
    }
    if (!any) continue;
    // Undo the row operations on the right: column target += sum u_i column i.
    for (std::size_t r = 0; r < n; ++r) {
      u64 extra = dot(a + r * n + first, u.data(), n - first, p);
      a[r * n + target] = add_mod(a[r * n + target], extra, p);
    }
  }

  // Characteristic polynomial of the upper Hessenberg matrix by the
  // standard recurrence on leading principal submatrices.
  auto h = [&](std::size_t r, std::size_t c) { return a[r * n + c]; };
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1 % p};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = poly[k - 1];
    std::vector<u64> cur(k + 1, 0);
    const FixedMultiplier diag(h(k - 1, k - 1), p);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add_mod(cur[d + 1], prev[d], p);
      cur[d] = sub_mod(cur[d], diag(prev[d]), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mul_mod(t, h(k - i, k - i - 1), p);
      if (t == 0) break;
      u64 c = mul_mod(t, h(k - i - 1, k - 1), p);
      if (c == 0) continue;
      const auto& lower = poly[k - i - 1];
      axpy_neg(cur.data(), lower.data(), 0, lower.size(), FixedMultiplier(c, p));
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

std::optional<std::vector<u64>> kernel_vector(ModMatrix m) {
  const std::size_t n = m.n;
  const u64 p = m.p;
  u64* a = m.a.data();
  std::vector<std::size_t> pivot_col;
  std::size_t free_col = n;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) {
      if (free_col != n) return std::nullopt;
      free_col = col;
      continue;
    }
    if (piv != row) {
      for (std::size_t k = col; k < n; ++k) std::swap(a[piv * n + k], a[row * n + k]);
    }
    const FixedMultiplier inv(inv_mod(a[row * n + col], p), p);
    for (std::size_t k = col; k < n; ++k) a[row * n + k] = inv(a[row * n + k]);
    for (std::size_t r = row + 1; r < n; ++r) {
      u64 factor = a[r * n + col];
      if (factor == 0) continue;
      axpy_neg(a + r * n, a + row * n, col, n, FixedMultiplier(factor, p));
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() + 1 != n || free_col == n) return std::nullopt;
  std::vector<u64> v(n, 0);
  v[free_col] = 1;
  for (std::size_t i = pivot_col.size(); i-- > 0;) {
    std::size_t c = pivot_col[i];
    u64 s = dot(a + i * n + c + 1, v.data() + c + 1, n - c - 1, p);
    v[c] = s == 0 ? 0 : p - s;
  }
  if (v[0] == 0) return std::nullopt;
  const FixedMultiplier scale(inv_mod(v[0], p), p);
  for (auto& x : v) x = scale(x);
  return v;
}

void Crt::add(u64 residue, u64 p) {
  // value' = value + modulus * ((residue - value) * modulus^-1 mod p)
  u64 value_mod = mpz_fdiv_ui(value_.get_mpz_t(), p);
  u64 modulus_mod = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
  u64 delta = mul_mod(sub_mod(residue % p, value_mod, p), inv_mod(modulus_mod, p), p);
  if (delta != 0) {
    Integer step = modulus_;
    mpz_mul_ui(step.get_mpz_t(), step.get_mpz_t(), delta);
    value_ += step;
  }
  mpz_mul_ui(modulus_.get_mpz_t(), modulus_.get_mpz_t(), p);
}

Integer Crt::symmetric() const {
  Integer twice = value_ * 2;
  if (twice > modulus_) return value_ - modulus_;
  return value_;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m;
  Integer r1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer t0 = 0;
  Integer t1 = 1;
  Integer q;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace promo::modular
