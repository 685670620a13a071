#include <doctest.h>

#include "wloc/number_theory.hpp"

using namespace wloc;

TEST_CASE("primes and residues") {
  CHECK(nt::is_prime(3));
  CHECK(nt::is_prime(11));
  CHECK_FALSE(nt::is_prime(9));
  CHECK_FALSE(nt::is_prime(1));
  CHECK(nt::least_nonresidue(3) == 2);
  CHECK(nt::least_nonresidue(7) == 3);
  CHECK(nt::least_nonresidue(17) == 3);
  CHECK(nt::legendre(2, 7) == 1);
  CHECK(nt::legendre(3, 7) == -1);
  CHECK(nt::legendre(14, 7) == 0);
  CHECK(nt::legendre(-1, 5) == 1);
  CHECK(nt::legendre(-1, 3) == -1);
}

TEST_CASE("square classes of rationals") {
  CHECK(nt::squarefree_kernel(Rational(12)) == 3);
  CHECK(nt::squarefree_kernel(Rational(-8)) == -2);
  CHECK(nt::squarefree_kernel(Rational(3, 4)) == 3);
  CHECK(nt::squarefree_kernel(Rational(1, 2)) == 2);
  CHECK(nt::is_square(Rational(9, 4)));
  CHECK_FALSE(nt::is_square(Rational(-1)));
  CHECK(nt::rational_sqrt(Rational(9, 4)) == Rational(3, 2));
}

TEST_CASE("valuations and factoring") {
  CHECK(nt::valuation(Integer(48), Integer(2)) == 4);
  CHECK(nt::valuation(Rational(5, 9), Integer(3)) == -2);
  auto f = nt::factor(Integer(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0].first == 2);
  CHECK(f[0].second == 3);
  CHECK(f[2].first == 5);
}

TEST_CASE("modular square roots") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long a = 1; a < p; ++a) {
      if (nt::legendre(a, p) != 1) continue;
      Integer r = nt::sqrt_mod_prime_power(a, p, 3);
      Integer m = p * p * p;
      CHECK(nt::mod(r * r - a, m) == 0);
    }
  }
  for (long a : {1L, 17L, 33L, 41L, -7L}) {
    Integer r = nt::sqrt_mod_two_power(a, 10);
    CHECK(nt::mod(r * r - a, Integer(1024)) == 0);
  }
  CHECK(nt::inverse_mod(3, 7) == 5);
  CHECK(nt::lcm(4, 6) == 12);
}
