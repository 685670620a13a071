#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wloc/number_theory.hpp"

namespace wloc {

enum class FieldKind { Rationals, Reals, FinitePrime, QuadExt };

// u + v * sqrt(a). Outside quadratic extensions v is always 0; over F_p both
// coordinates are kept reduced into [0, p).
struct FieldElement {
  Rational u;
  Rational v;

  FieldElement() = default;
  FieldElement(Rational u_, Rational v_ = 0) : u(std::move(u_)), v(std::move(v_)) {}

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.u == y.u && x.v == y.v;
  }
};

// Total order used for deterministic entry ordering (|u| first, then sign, then v).
bool element_less(const FieldElement& x, const FieldElement& y);

// One of Q, R, F_p (p odd prime) or k(sqrt a) for k in {Q, R, F_p} with a a
// non-square of k. Values are small and freely copied.
class FieldDescriptor {
 public:
  FieldDescriptor() : FieldDescriptor(FieldKind::Rationals, FieldKind::Rationals, 0, 0) {}

  static FieldDescriptor rationals();
  static FieldDescriptor reals();
  static FieldDescriptor finite_prime(long p);
  static FieldDescriptor quad_ext(const FieldDescriptor& base, const Rational& a);

  FieldKind kind() const { return kind_; }
  bool is_quad_ext() const { return kind_ == FieldKind::QuadExt; }
  // Kind of the prime field underneath (equal to kind() unless a QuadExt).
  FieldKind base_kind() const { return base_kind_; }
  long prime() const { return p_; }
  const Rational& radicand() const { return a_; }
  FieldDescriptor base() const;

  bool is_finite() const { return base_kind_ == FieldKind::FinitePrime; }
  // R(sqrt a) with a < 0.
  bool is_complex() const { return is_quad_ext() && base_kind_ == FieldKind::Reals; }
  // Q(sqrt a) with a > 0 has two orderings, Q and R one, the rest none.
  int orderings() const;

  std::string tag() const;

  FieldElement element(const Rational& u, const Rational& v = 0) const;
  FieldElement one() const { return element(1); }
  FieldElement sqrt_generator() const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement inv(const FieldElement& x) const;
  bool is_zero(const FieldElement& x) const { return x.u == 0 && x.v == 0; }

  // u^2 - a v^2, as an element of the base field.
  Rational norm(const FieldElement& x) const;

  bool is_square(const FieldElement& x) const;
  bool same_square_class(const FieldElement& x, const FieldElement& y) const;
  bool minus_one_is_square() const { return is_square(element(-1)); }

  // Deterministic representative of the square class of x. Unique per class
  // except over Q(sqrt a), where it is only a scaled normal form.
  FieldElement square_class_rep(const FieldElement& x) const;

  // Canonical non-square for finite fields (least non-residue over F_p).
  FieldElement canonical_nonsquare() const;

  std::string to_string(const FieldElement& x) const;

  friend bool operator==(const FieldDescriptor& x, const FieldDescriptor& y) {
    return x.kind_ == y.kind_ && x.base_kind_ == y.base_kind_ && x.p_ == y.p_ && x.a_ == y.a_;
  }

 private:
  FieldDescriptor(FieldKind kind, FieldKind base_kind, long p, Rational a)
      : kind_(kind), base_kind_(base_kind), p_(p), a_(std::move(a)) {}

  Rational reduce(const Rational& x) const;

  FieldKind kind_;
  FieldKind base_kind_;
  long p_;
  Rational a_;
};

// Field tags: "Q", "R", "Fp:7" (or "F7"), "Q(sqrt:2)", "Fp:5(sqrt:2)", "R(sqrt:-1)".
FieldDescriptor parse_field(std::string_view tag);

// Scalar literal for a field: rationals "3", "-1/2"; over extensions the
// keyword "sqrt" stands for the chosen generator, e.g. "1+2*sqrt".
FieldElement parse_scalar(std::string_view text, const FieldDescriptor& field);

void require_same_field(const FieldDescriptor& x, const FieldDescriptor& y);

}  // namespace wloc
