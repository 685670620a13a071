#pragma once

#include <vector>

#include "wloc/witt.hpp"

namespace wloc::local {

// Hilbert symbol (a, b)_p over Q_p for nonzero rationals; p = 2 allowed.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

// Decides whether sum mult_i <c_i> is hyperbolic over Q or Q(sqrt a): even
// rank, square signed discriminant, vanishing real signatures and matching
// Hasse invariants at the finite places (one place is left to the product
// formula).
bool is_hyperbolic(const FieldDescriptor& field, const std::vector<WittEntry>& entries);

// Signs of u + v sqrt(a) under the two real embeddings (a > 0, rational base).
int real_sign(const FieldElement& c, const Rational& a, int embedding);

}  // namespace wloc::local
