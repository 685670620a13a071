#include "wloc/quad_ext.hpp"

#include <functional>

#include "wloc/errors.hpp"

namespace wloc {

QuadExtContext::QuadExtContext(FieldDescriptor base, const Rational& a)
    : base_(std::move(base)), ext_(FieldDescriptor::quad_ext(base_, a)) {}

WittClass QuadExtContext::radicand_class() const { return WittClass::unit(base_, base_.element(a())); }

WittClass QuadExtContext::one_minus_a() const { return integer_class(1, base_) - radicand_class(); }

WittClass base_change(const WittClass& x, const QuadExtContext& ctx) {
  require_same_field(x.field(), ctx.base());
  std::vector<WittEntry> entries;
  for (const auto& e : x.entries()) entries.push_back({ctx.ext().element(e.value.u), e.mult});
  return WittClass::from_entries(ctx.ext(), std::move(entries));
}

WittClass transfer(const WittClass& x, const QuadExtContext& ctx) {
  require_same_field(x.field(), ctx.ext());
  const auto& k = ctx.base();
  const auto& K = ctx.ext();
  std::vector<WittEntry> out;
  for (const auto& e : x.entries()) {
    // Gram matrix of (s, t) -> Tr(c s t) on the basis {1, sqrt a}
    const FieldElement& c = e.value;
    FieldElement r = K.sqrt_generator();
    auto tr = [&](const FieldElement& z) { return k.element(2 * z.u); };
    FieldElement g00 = tr(c), g01 = tr(K.mul(c, r)), g11 = tr(K.mul(c, K.mul(r, r)));
    QuadraticForm q = diagonalize({{g00, g01}, {g01, g11}}, k);
    for (const auto& d : q.entries) out.push_back({d, e.mult});
  }
  return WittClass::from_entries(k, std::move(out));
}

WittClass scaled_transfer(const WittClass& x, const QuadExtContext& ctx) {
  require_same_field(x.field(), ctx.ext());
  return transfer(WittClass::unit(ctx.ext(), ctx.ext().sqrt_generator()) * x, ctx);
}

bool in_Ia(const WittClass& x, const QuadExtContext& ctx) {
  require_same_field(x.field(), ctx.base());
  return (x * ctx.one_minus_a()).is_zero();
}

WittClass ideal_multiplier(const WittClass& x, const QuadExtContext& ctx, int max_terms) {
  const auto& k = ctx.base();
  require_same_field(x.field(), k);
  if (x.is_zero()) return WittClass(k);
  const WittClass g = ctx.one_minus_a();

  std::vector<WittClass> gens;
  auto add_gen = [&](const FieldElement& c) {
    WittClass w = WittClass::unit(k, c);
    for (const auto& h : gens)
      if (h == w) return;
    gens.push_back(w);
  };
  const Rational a = ctx.a();
  for (const Rational& c : {Rational(1), Rational(2), a, Rational(2 * a)}) {
    add_gen(k.element(c));
    add_gen(k.element(-c));
  }
  for (const auto& e : x.entries()) {
    add_gen(e.value);
    add_gen(k.mul(e.value, k.element(a)));
  }

  // multisets of generators, size 1..max_terms
  std::vector<std::size_t> idx;
  std::function<std::optional<WittClass>(std::size_t, int, const WittClass&)> search =
      [&](std::size_t from, int left, const WittClass& acc) -> std::optional<WittClass> {
    if (!acc.is_zero() && acc * g == x) return acc;
    if (left == 0) return std::nullopt;
    for (std::size_t i = from; i < gens.size(); ++i)
      if (auto r = search(i, left - 1, acc + gens[i])) return r;
    return std::nullopt;
  };
  if (auto y = search(0, max_terms, WittClass(k))) return *y;
  fail(ErrorCode::Undecided, "no multiplier found for " + x.to_string() + " in (1-<a>)W(k)");
}

LamReport lam_exactness_check(const QuadExtContext& ctx, const std::vector<WittClass>& samples) {
  LamReport report;
  const WittClass g = ctx.one_minus_a();
  auto check = [&](bool ok, const std::string& what, const WittClass& x) {
    ++report.checks;
    if (!ok) report.violations.push_back(what + " fails for " + x.to_string());
  };
  for (const auto& x : samples) {
    ++report.samples;
    if (x.field() == ctx.base()) {
      WittClass bx = base_change(x, ctx);
      check(in_Ia(transfer(bx, ctx), ctx), "Tr(i(x)) in I_a", x);
      check(scaled_transfer(bx, ctx).is_zero(), "Tr^sqrt(i(x)) = 0", x);
      if (bx.is_zero()) {
        try {
          ideal_multiplier(x, ctx);
          ++report.checks;
        } catch (const Error& err) {
          ++report.checks;
          report.violations.push_back("ker i in (1-<a>)W(k) fails for " + x.to_string() + ": " + err.what());
        }
      }
      check(base_change(x * g, ctx).is_zero(), "i((1-<a>) x) = 0", x);
    } else if (x.field() == ctx.ext()) {
      check(in_Ia(transfer(x, ctx), ctx), "Tr(z) in I_a", x);
      check((scaled_transfer(x, ctx) * g).is_zero(), "(1-<a>) Tr^sqrt(z) = 0", x);
    } else {
      report.violations.push_back("sample over unrelated field " + x.field().tag());
    }
  }
  return report;
}

}  // namespace wloc
