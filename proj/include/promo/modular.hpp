#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "promo/rational.hpp"

// Word-size prime field kernels used by the exact linear algebra. Every
// result produced from them is either certified by a bound or verified
// exactly afterwards; nothing here is probabilistic.
namespace promo::modular {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);
/// a^-1 mod p for prime p and a != 0 mod p.
u64 inv_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 n);

/// The first `count` primes below 2^62 in decreasing order.
std::vector<u64> large_primes(std::size_t count);

/// Square matrix over Z/p, row-major.
struct ModMatrix {
  std::size_t n = 0;
  u64 p = 0;
  std::vector<u64> a;

  u64& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  u64 at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// Reduces an integer matrix (row-major, n x n) modulo p.
ModMatrix reduce(const std::vector<Integer>& entries, std::size_t n, u64 p);

/// det(lambda I - A) mod p, ascending coefficients, via reduction to upper
/// Hessenberg form.
std::vector<u64> charpoly(ModMatrix m);

/// When A has rank n-1 mod p, returns the kernel vector scaled so that its
/// first entry is 1 (nullopt if the rank differs or the first entry is 0).
std::optional<std::vector<u64>> kernel_vector(ModMatrix m);

/// Incremental Chinese remaindering of one integer.
class Crt {
 public:
  void add(u64 residue, u64 p);
  /// Representative in (-M/2, M/2].
  Integer symmetric() const;
  const Integer& modulus() const { return modulus_; }
  const Integer& value() const { return value_; }

 private:
  Integer value_ = 0;
  Integer modulus_ = 1;
};

/// Rational n/d with |n|, d <= sqrt(m/2) and n/d = a mod m, if one exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

}  // namespace promo::modular
