#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "promo/error.hpp"
#include "promo/linear_form.hpp"
#include "promo/matrix.hpp"
#include "promo/modular.hpp"
#include "promo/polynomial.hpp"
#include "promo/rational.hpp"
#include "promo/spectral.hpp"
#include "promo/word.hpp"

using namespace promo;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  auto list = parse_rational_list("1/4, 1/4,1/2");
  REQUIRE(list.size() == 3);
  CHECK(sum(list) == 1);
}

TEST_CASE("words") {
  CHECK(parse_word("2413") == Word{2, 4, 1, 3});
  CHECK(parse_word("2 4 1 3") == Word{2, 4, 1, 3});
  CHECK(parse_word("2,4,1,3") == Word{2, 4, 1, 3});
  CHECK(format_word({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}) == "10 1 2 3 4 5 6 7 8 9");
  CHECK(inversion_count({3, 2, 1}) == 3);
  CHECK(positions({2, 4, 1, 3})[1] == 3);
  CHECK_FALSE(is_permutation({1, 1, 2}));
  Basis b({{2, 1}, {1, 2}, {2, 1}});
  CHECK(b.size() == 2);
  CHECK(b[0] == Word{1, 2});
  CHECK(b.find({2, 1}) == std::optional<std::size_t>(1));
}

TEST_CASE("linear forms") {
  auto f = LinearForm::variable(4, 4) - LinearForm::variable(4, 1);
  CHECK(f.to_string() == "x4-x1");
  CHECK((LinearForm(4) - LinearForm::variable(4, 1) - LinearForm::variable(4, 2)).to_string() ==
        "-x1-x2");
  CHECK(LinearForm(3).to_string() == "0");
  WeightVector w({Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(f.evaluate(w) == 3);
  CHECK(w.normalized().total() == 1);
  CHECK_THROWS_AS(WeightVector({Rational(1), Rational(0)}).require_positive(false), Error);
  CHECK(WeightVector::parse("uniform", 4)[2] == Rational(1, 4));
  std::mt19937_64 rng(7);
  auto r = WeightVector::random(6, rng);
  CHECK(r.total() == 1);
  CHECK(r.is_positive());
}

TEST_CASE("polynomials") {
  auto p = from_roots({{Rational(1), 2}, {Rational(-1, 2), 1}});
  CHECK(p.degree() == 3);
  CHECK(p.root_multiplicity(Rational(1)) == 2);
  CHECK(p.root_multiplicity(Rational(-1, 2)) == 1);
  CHECK(p.root_multiplicity(Rational(0)) == 0);
  CHECK(p.divide_root(Rational(1), 2) == Polynomial::linear(Rational(-1, 2)));
  CHECK_THROWS_AS(p.divide_root(Rational(2), 1), Error);
  CHECK(Polynomial({Rational(0), Rational(-1), Rational(1)}).to_string() == "l^2-l");
}

TEST_CASE("primes and Chinese remaindering") {
  for (modular::u64 n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (modular::u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK(modular::is_prime(n) == trial);
  }
  CHECK_FALSE(modular::is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  auto primes = modular::large_primes(5);
  REQUIRE(primes.size() == 5);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(primes[i] < (modular::u64{1} << 62));
    CHECK(modular::is_prime(primes[i]));
    if (i > 0) CHECK(primes[i] < primes[i - 1]);
  }
  const modular::u64 p = primes[0];
  CHECK(modular::mul_mod(modular::inv_mod(12345, p), 12345, p) == 1);

  Integer target("-123456789012345678901234567890");
  modular::Crt crt;
  for (auto q : primes) {
    Integer r = target % Integer(std::to_string(q));
    if (r < 0) r += Integer(std::to_string(q));
    crt.add(r.get_ui(), q);
  }
  CHECK(crt.symmetric() == target);

  // 3/7 modulo a product of two primes.
  Integer m = Integer(std::to_string(primes[0])) * Integer(std::to_string(primes[1]));
  Integer inv7;
  mpz_invert(inv7.get_mpz_t(), Integer(7).get_mpz_t(), m.get_mpz_t());
  Integer a = (3 * inv7) % m;
  auto r = modular::rational_reconstruct(a, m);
  REQUIRE(r);
  CHECK(*r == Rational(3, 7));
}

TEST_CASE("characteristic polynomial against Faddeev-LeVerrier") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 7; ++n) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
        m(r, c).canonicalize();
      }
    CHECK(char_poly(m).coeffs() == oracle::charpoly(m));
  }
  // A nilpotent matrix and one with a repeated root.
  RationalMatrix nil(3, 3);
  nil(0, 1) = 1;
  nil(1, 2) = 1;
  CHECK(char_poly(nil) == from_roots({{Rational(0), 3}}));
  CHECK(char_poly(RationalMatrix::identity(4)) == from_roots({{Rational(1), 4}}));
}

TEST_CASE("matrix products") {
  RationalMatrix a(2, 3);
  a(0, 0) = 1;
  a(1, 2) = Rational(1, 2);
  CHECK_THROWS_AS(a * a, Error);
  auto v = a * std::vector<Rational>{Rational(1), Rational(2), Rational(4)};
  CHECK(v == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(a.common_denominator() == 2);
}
