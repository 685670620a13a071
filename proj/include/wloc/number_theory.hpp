#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace wloc {

using Integer = mpz_class;
using Rational = mpq_class;

namespace nt {

bool is_prime(long n);

// Legendre symbol (a/p) for an odd prime p: 0, 1 or -1.
int legendre(const Integer& a, long p);

// Least positive quadratic non-residue modulo the odd prime p.
long least_nonresidue(long p);

// Prime factorization of |n| by trial division; n != 0.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

// Signed squarefree integer in the same square class of Q^* as q (q != 0).
Integer squarefree_kernel(const Rational& q);

bool is_square(const Integer& n);
bool is_square(const Rational& q);

// Rational square root when q is a square.
Rational rational_sqrt(const Rational& q);

// p-adic valuation of a nonzero integer or rational.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

// Non-negative remainder.
Integer mod(const Integer& a, const Integer& m);
long mod(const Integer& a, long m);

Integer inverse_mod(const Integer& a, const Integer& m);

// Square root of a modulo p^k (p odd, a a unit residue) by Tonelli-Shanks + Hensel.
Integer sqrt_mod_prime_power(const Integer& a, long p, int k);

// Square root of a modulo 2^k for a = 1 mod 8.
Integer sqrt_mod_two_power(const Integer& a, int k);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace nt
}  // namespace wloc
