#include "wloc/euler.hpp"

#include <algorithm>
#include <map>

#include "wloc/errors.hpp"

namespace wloc {

Integer SL2nIrrep::rank() const {
  Integer r = 1;
  for (const auto& [i, m] : factors) r *= m + 1;
  return r;
}

std::string SL2nIrrep::to_string() const {
  std::string out;
  for (const auto& [i, m] : factors) {
    if (!out.empty()) out += "*";
    out += (m == 1 ? std::string("F") : "Sym(" + std::to_string(m) + ")") + "@" + std::to_string(i);
  }
  return out.empty() ? "Sym(0)@1" : out;
}

std::string NIrrep::to_string() const {
  switch (kind) {
    case Kind::Rho: return "rho(" + std::to_string(m) + ")";
    case Kind::Rho0: return "rho0";
    case Kind::Rho0Minus: return "rho0-";
  }
  return "?";
}

RepSum& RepSum::add(const SL2nIrrep& irrep, long mult) {
  if (group.kind != GroupKind::SL2n) fail(ErrorCode::UnsupportedIrrep, "SL2n irreducible in an N representation");
  if (mult < 1) fail(ErrorCode::BadParameters, "multiplicities must be positive");
  for (const auto& [i, m] : irrep.factors)
    if (i < 1 || i > group.n || m < 0)
      fail(ErrorCode::UnsupportedIrrep, irrep.to_string() + " does not live on SL2^" + std::to_string(group.n));
  sl2n_terms.emplace_back(irrep, mult);
  return *this;
}

RepSum& RepSum::add(const NIrrep& irrep, long mult) {
  if (group.kind != GroupKind::N) fail(ErrorCode::UnsupportedIrrep, "N irreducible in an SL2n representation");
  if (mult < 1) fail(ErrorCode::BadParameters, "multiplicities must be positive");
  if (irrep.kind == NIrrep::Kind::Rho && irrep.m < 1) fail(ErrorCode::UnsupportedIrrep, "rho(m) needs m >= 1");
  n_terms.emplace_back(irrep, mult);
  return *this;
}

Integer RepSum::rank() const {
  Integer r = 0;
  for (const auto& [irrep, mult] : sl2n_terms) r += irrep.rank() * mult;
  for (const auto& [irrep, mult] : n_terms) r += irrep.rank() * mult;
  return r;
}

namespace {

template <class Irrep>
std::map<Irrep, long> merged(const std::vector<std::pair<Irrep, long>>& terms) {
  std::map<Irrep, long> out;
  for (const auto& [irrep, mult] : terms) out[irrep] += mult;
  return out;
}

}  // namespace

bool RepSum::same_as(const RepSum& other) const {
  return group == other.group && merged(sl2n_terms) == merged(other.sl2n_terms) &&
         merged(n_terms) == merged(other.n_terms);
}

std::string RepSum::to_string() const {
  std::string out;
  auto emit = [&](const std::string& s, long mult) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += s;
  };
  for (const auto& [irrep, mult] : sl2n_terms) emit(irrep.to_string(), mult);
  for (const auto& [irrep, mult] : n_terms) emit(irrep.to_string(), mult);
  return out.empty() ? "0" : out;
}

RepSum operator+(const RepSum& x, const RepSum& y) {
  if (!(x.group == y.group)) fail(ErrorCode::PresentationMismatch, "representations of different groups");
  RepSum out = x;
  out.sl2n_terms.insert(out.sl2n_terms.end(), y.sl2n_terms.begin(), y.sl2n_terms.end());
  out.n_terms.insert(out.n_terms.end(), y.n_terms.begin(), y.n_terms.end());
  return out;
}

std::string determinacy_name(Determinacy d) {
  switch (d) {
    case Determinacy::Exact: return "exact";
    case Determinacy::UpToSign: return "up_to_sign";
    case Determinacy::SquareOnly: return "square_only";
  }
  return "?";
}

Integer double_factorial(int m) {
  Integer out = 1;
  for (int k = m; k > 1; k -= 2) out *= k;
  return out;
}

Presentation euler_presentation(const GroupSpec& group, const FieldDescriptor& field) {
  return group.kind == GroupKind::SL2n ? Presentation::bsl2n(group.n, field) : Presentation::bn(field);
}

namespace {

EulerClassValue exact(const GradedElement& v) { return {v, Determinacy::Exact, v * v}; }

}  // namespace

EulerClassValue euler_sl2n_irrep(const SL2nIrrep& irrep, int n, const FieldDescriptor& field) {
  Presentation pres = Presentation::bsl2n(n, field);
  std::vector<int> exps(n, 0);
  std::vector<int> order;  // nonzero factors in tensor order
  std::vector<bool> seen(n, false);
  for (const auto& [i, m] : irrep.factors) {
    if (i < 1 || i > n) fail(ErrorCode::UnsupportedIrrep, irrep.to_string() + " names a missing factor");
    if (seen[i - 1]) fail(ErrorCode::UnsupportedIrrep, irrep.to_string() + " repeats a factor");
    seen[i - 1] = true;
    exps[i - 1] = m;
    if (m > 0) order.push_back(i);
  }
  if (std::all_of(exps.begin(), exps.end(), [](int m) { return m % 2 == 0; }))
    return exact(GradedElement(pres));  // odd rank
  auto e = [&](int i) {
    Monomial mono(n, 0);
    mono[i - 1] = 1;
    return GradedElement::term(pres, mono, integer_class(1, field));
  };
  if (order.size() == 1) {
    int i = order[0], m = exps[i - 1];
    return exact(integer_class(double_factorial(m), field) * e(i).pow(m + 1));
  }
  if (order.size() == 2 && exps[order[0] - 1] == 1 && exps[order[1] - 1] == 1)
    return exact(e(order[0]).pow(2) - e(order[1]).pow(2));
  fail(ErrorCode::UnsupportedIrrep, "no Euler class formula for " + irrep.to_string());
}

EulerClassValue euler_n_irrep(const NIrrep& irrep, const FieldDescriptor& field) {
  Presentation pres = Presentation::bn(field);
  if (irrep.kind != NIrrep::Kind::Rho) return exact(GradedElement(pres));
  if (irrep.m < 1) fail(ErrorCode::UnsupportedIrrep, "rho(m) needs m >= 1");
  GradedElement e = GradedElement::generator(pres, "e");
  GradedElement sq = integer_class(Integer(irrep.m) * irrep.m, field) * e.pow(2);
  if (irrep.m % 2 == 1) return {integer_class(irrep.m, field) * e, Determinacy::UpToSign, sq};
  return {std::nullopt, Determinacy::SquareOnly, sq};
}

EulerClassValue euler_rep(const RepSum& rep, const FieldDescriptor& field) {
  Presentation pres = euler_presentation(rep.group, field);
  GradedElement one = GradedElement::integer(pres, 1);
  if (rep.group.kind == GroupKind::SL2n) {
    GradedElement v = one;
    for (const auto& [irrep, mult] : merged(rep.sl2n_terms))
      v = v * euler_sl2n_irrep(irrep, rep.group.n, field).value->pow(static_cast<int>(mult));
    return exact(v);
  }
  GradedElement value = one, square = one;
  bool any_sign = false, any_square_only = false;
  for (const auto& [irrep, mult] : merged(rep.n_terms)) {
    EulerClassValue f = euler_n_irrep(irrep, field);
    if (f.known_square.is_zero()) return exact(GradedElement(pres));
    int mu = static_cast<int>(mult);
    square = square * f.known_square.pow(mu);
    // an even number of copies is known exactly through the square
    value = value * f.known_square.pow(mu / 2);
    if (mu % 2 == 1) {
      if (f.value) value = value * *f.value;
      if (f.determinacy == Determinacy::SquareOnly) any_square_only = true;
      if (f.determinacy == Determinacy::UpToSign) any_sign = true;
    }
  }
  if (any_square_only) return {std::nullopt, Determinacy::SquareOnly, square};
  if (any_sign) return {value, Determinacy::UpToSign, square};
  return {value, Determinacy::Exact, square};
}

GradedElement generic_euler(const RepSum& rep, const FieldDescriptor& field) {
  return euler_rep(rep, field).known_square;
}

}  // namespace wloc
