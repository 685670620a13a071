#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wloc/quad_ext.hpp"
#include "wloc/witt.hpp"

namespace wloc {

enum class PresentationKind { BSL2n, BNn, TwistedPoint, BNTwistedModule };

// One of the presented W(k)-algebras (or the rank-one module over BN):
//   BSL2n(n)         W(k)[e1..en]
//   BNn(n)           tensor power of W(k)[x, e]/((1+x)e, x^2-1); BN = BNn(1)
//   TwistedPoint     W(k)[e, y]/(y^2 - 2(1-<a>), I_a y, I_a e), with x = <a>
//   BNTwistedModule  free W(k)[e]-module on eT with x eT = -eT
class Presentation {
 public:
  static Presentation bsl2n(int n, const FieldDescriptor& field);
  static Presentation bn(const FieldDescriptor& field) { return bnn(1, field); }
  static Presentation bnn(int n, const FieldDescriptor& field);
  static Presentation twisted_point(const QuadExtContext& ctx);
  static Presentation bn_twisted_module(const FieldDescriptor& field);

  PresentationKind kind() const { return kind_; }
  int n() const { return n_; }
  const FieldDescriptor& field() const { return field_; }
  const QuadExtContext& ctx() const;
  bool is_bn() const { return kind_ == PresentationKind::BNn && n_ == 1; }

  std::size_t monomial_size() const;
  std::string name() const;

  friend bool operator==(const Presentation& x, const Presentation& y);

 private:
  Presentation(PresentationKind kind, int n, FieldDescriptor field, std::optional<QuadExtContext> ctx)
      : kind_(kind), n_(n), field_(std::move(field)), ctx_(std::move(ctx)) {}

  PresentationKind kind_;
  int n_;
  FieldDescriptor field_;
  std::optional<QuadExtContext> ctx_;
};

// Exponent vector. Layouts: BSL2n [e1..en]; BNn [x1, e1, ..., xn, en];
// TwistedPoint [y, e]; BNTwistedModule [e] (times eT).
using Monomial = std::vector<int>;

class GradedElement {
 public:
  explicit GradedElement(Presentation pres);

  static GradedElement scalar(const Presentation& pres, const WittClass& c);
  static GradedElement integer(const Presentation& pres, long n);
  static GradedElement term(const Presentation& pres, Monomial m, const WittClass& c);
  static GradedElement generator(const Presentation& pres, std::string_view name);

  const Presentation& presentation() const { return pres_; }
  const std::map<Monomial, WittClass>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  WittClass coefficient(const Monomial& m) const;
  WittClass constant_term() const;
  bool is_scalar() const;

  // Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  static int monomial_degree(const Presentation& pres, const Monomial& m);

  std::string to_string() const;

  GradedElement& operator+=(const GradedElement& y);
  GradedElement operator-() const;

  friend GradedElement operator+(GradedElement x, const GradedElement& y) { return x += y; }
  friend GradedElement operator-(const GradedElement& x, const GradedElement& y) { return x + (-y); }
  friend GradedElement operator*(const GradedElement& x, const GradedElement& y);
  friend GradedElement operator*(const WittClass& c, const GradedElement& x);
  friend bool operator==(const GradedElement& x, const GradedElement& y);

  GradedElement pow(int k) const;

  // Adds c * m with the presentation's rewriting rules applied.
  void add_term(Monomial m, const WittClass& c);

 private:
  Presentation pres_;
  std::map<Monomial, WittClass> terms_;
};

// Printing order of monomials: by degree, then by exponent vector descending.
bool monomial_print_less(const Presentation& pres, const Monomial& a, const Monomial& b);

// prod e_i * prod_{i>j} (e_i - e_j) in BSL2n(n)
GradedElement e_star(int n, const FieldDescriptor& field);

// Embeds factors over BSL2n(n_i) (or BNn(n_i)) into the product presentation.
GradedElement kunneth(const std::vector<GradedElement>& factors);

enum class OrbitType { A, B, CPlus, CMinus };

long n_loc_multiplier(const std::vector<std::pair<long, OrbitType>>& orbits);

// BN -> TwistedPoint: x -> <a>, e -> e.
GradedElement restrict_to_twisted(const GradedElement& x, const QuadExtContext& ctx);

// Exact quotient in the polynomial presentations (fixed lex order, coefficient
// division in W(k)); verified by multiplying back.
std::optional<GradedElement> exact_divide(const GradedElement& f, const GradedElement& d);

class LocalizedElement {
 public:
  LocalizedElement(GradedElement numerator, GradedElement inverted, int exponent);

  const GradedElement& numerator() const { return num_; }
  const GradedElement& inverted() const { return s_; }
  int exponent() const { return k_; }
  const Presentation& presentation() const { return num_.presentation(); }

  // Numerator when the element lies in the image of the ring, if found.
  std::optional<GradedElement> cleared() const;
  std::optional<LocalizedElement> inverse() const;

  std::string to_string() const;

  friend LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y);
  friend LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y);
  friend LocalizedElement operator-(const LocalizedElement& x);

 private:
  GradedElement num_;
  GradedElement s_;
  int k_;
};

LocalizedElement localize(const GradedElement& x, const GradedElement& s);

// u = v in the localization: (s t)^j (a t^l - b s^k) = 0 for some j <= 4.
bool loc_eq(const LocalizedElement& u, const LocalizedElement& v);

}  // namespace wloc
