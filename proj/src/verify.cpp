#include "wloc/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wloc/errors.hpp"
#include "wloc/number_theory.hpp"

namespace wloc {

bool SuiteReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

std::string format_table(const SuiteReport& report) {
  std::size_t width = 4;
  for (const auto& r : report.rows) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << "suite " << report.suite << "\n";
  for (const auto& r : report.rows) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
        << "\n";
  }
  std::size_t passed = std::count_if(report.rows.begin(), report.rows.end(), [](const CheckRow& r) { return r.passed; });
  out << passed << "/" << report.rows.size() << " passed\n";
  return out.str();
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long bound) {
  long v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? v : -v;
}

}  // namespace

FieldElement random_unit(const FieldDescriptor& field, Rng& rng) {
  if (field.is_finite()) {
    long p = field.prime();
    while (true) {
      FieldElement c = field.element(uniform(rng, 0, p - 1), field.is_quad_ext() ? uniform(rng, 0, p - 1) : 0);
      if (!field.is_zero(c)) return c;
    }
  }
  switch (field.kind()) {
    case FieldKind::Reals: return field.element(nonzero(rng, 5));
    case FieldKind::Rationals: return field.element(Rational(nonzero(rng, 12), uniform(rng, 1, 3)));
    default: break;
  }
  while (true) {
    FieldElement c = field.element(uniform(rng, -4, 4), uniform(rng, -2, 2));
    if (!field.is_zero(c)) return c;
  }
}

WittClass random_witt(const FieldDescriptor& field, Rng& rng, int max_rank) {
  std::vector<WittEntry> entries;
  int rank = static_cast<int>(uniform(rng, 0, max_rank));
  for (int i = 0; i < rank; ++i) entries.push_back({random_unit(field, rng), 1});
  return WittClass::from_entries(field, std::move(entries));
}

GradedElement random_element(const Presentation& pres, Rng& rng, int max_terms, int max_exponent) {
  const FieldDescriptor& field = pres.field();
  GradedElement out(pres);
  int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m(pres.monomial_size(), 0);
    for (auto& v : m) v = static_cast<int>(uniform(rng, 0, max_exponent));
    out.add_term(m, random_witt(field, rng, 2));
  }
  return out;
}

std::vector<long> representation_counts(const std::vector<long>& diag, long p) {
  long nonres = nt::least_nonresidue(p);
  // value distribution of q one coordinate at a time
  std::vector<long> dist(p, 0);
  dist[0] = 1;
  for (long d : diag) {
    std::vector<long> next(p, 0);
    for (long s = 0; s < p; ++s) {
      if (!dist[s]) continue;
      for (long v = 0; v < p; ++v) next[(s + d % p * (v * v % p)) % p] += dist[s];
    }
    dist.swap(next);
  }
  return {dist[0], dist[1], dist[nonres]};
}

namespace {

long as_long(const Rational& r) { return mpz_class(r.get_num()).get_si(); }

std::vector<std::vector<long>> fp_forms(long p, int max_rank) {
  long nonres = nt::least_nonresidue(p);
  std::vector<std::vector<long>> forms;
  for (int r = 1; r <= max_rank; ++r)
    for (long mask = 0; mask < (1L << r); ++mask) {
      std::vector<long> d;
      for (int i = 0; i < r; ++i) d.push_back((mask >> i) & 1 ? nonres : 1);
      forms.push_back(d);
    }
  return forms;
}

std::string check_fp_form(const std::vector<long>& diag, long p) {
  const FieldDescriptor field = FieldDescriptor::finite_prime(p);
  QuadraticForm q{field, {}};
  for (long d : diag) q.entries.push_back(field.element(d));
  const WittClass cls = witt_class(q);
  const QuadraticForm rep = cls.representative();
  std::vector<long> rep_diag;
  for (const auto& c : rep.entries) rep_diag.push_back(as_long(c.u));
  long n = static_cast<long>(diag.size());
  long r = static_cast<long>(rep_diag.size());
  std::string label = "<";
  for (std::size_t i = 0; i < diag.size(); ++i) label += (i ? "," : "") + std::to_string(diag[i]);
  label += "> -> " + cls.to_string();
  if (r > n || (n - r) % 2 != 0) return label + ": rank parity";
  std::vector<long> predicted = representation_counts(rep_diag, p);
  long dim = r;
  for (long k = 0; k < (n - r) / 2; ++k) {
    long pd = 1;
    for (long i = 0; i < dim; ++i) pd *= p;
    for (auto& c : predicted) c = p * c + (p - 1) * pd;
    dim += 2;
  }
  if (predicted != representation_counts(diag, p)) return label + ": representation counts differ";
  return {};
}

}  // namespace

WittFpOutcome witt_fp_sweep_serial(long p, int max_rank) {
  auto forms = fp_forms(p, max_rank);
  WittFpOutcome out{p, forms.size(), {}};
  for (const auto& f : forms) {
    std::string bad;
    try {
      bad = check_fp_form(f, p);
    } catch (const std::exception& e) {
      bad = e.what();
    }
    if (!bad.empty()) out.mismatches.push_back(bad);
  }
  return out;
}

WittFpOutcome witt_fp_sweep(long p, int max_rank) {
  auto forms = fp_forms(p, max_rank);
  std::vector<std::string> results(forms.size());
  const long count = static_cast<long>(forms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      results[i] = check_fp_form(forms[i], p);
    } catch (const std::exception& e) {
      results[i] = e.what();
    }
  }
  WittFpOutcome out{p, forms.size(), {}};
  for (auto& r : results)
    if (!r.empty()) out.mismatches.push_back(std::move(r));
  return out;
}

SuiteReport verify_witt_fp(const std::vector<long>& primes, int max_rank) {
  SuiteReport rep{"witt-fp", {}};
  for (long p : primes) {
    CheckRow row{"F" + std::to_string(p) + " rank<=" + std::to_string(max_rank), false, ""};
    try {
      WittFpOutcome o = witt_fp_sweep(p, max_rank);
      row.passed = o.mismatches.empty();
      std::ostringstream d;
      d << o.forms << " forms, " << o.mismatches.size() << " mismatches";
      if (!o.mismatches.empty()) d << "; first: " << o.mismatches.front();
      row.detail = d.str();
    } catch (const Error& e) {
      row.detail = e.what();
    }
    rep.rows.push_back(row);
  }
  return rep;
}

SuiteReport verify_lam(const QuadExtContext& ctx, std::size_t sample_size, std::uint64_t seed) {
  SuiteReport rep{"lam", {}};
  std::vector<WittClass> base_samples, ext_samples;
  if (ctx.base().is_finite()) {
    base_samples = enumerate_finite_witt(ctx.base());
    ext_samples = enumerate_finite_witt(ctx.ext());
  } else {
    Rng rng(seed);
    // every other base sample is forced into (1 - <a>) W(k), which exercises the kernel side
    for (std::size_t i = 0; i < sample_size; ++i) {
      WittClass x = random_witt(ctx.base(), rng, 3);
      base_samples.push_back(i % 2 ? ctx.one_minus_a() * x : x);
    }
    for (std::size_t i = 0; i < sample_size; ++i) ext_samples.push_back(random_witt(ctx.ext(), rng, 2));
  }
  auto run = [&](const std::string& where, const WittClass& x) {
    CheckRow row{where + " " + x.to_string(), false, ""};
    try {
      LamReport r = lam_exactness_check(ctx, {x});
      row.passed = r.ok();
      row.detail = std::to_string(r.checks) + " checks";
      if (!r.ok()) row.detail += "; " + r.violations.front();
    } catch (const Error& e) {
      row.detail = e.what();
    }
    rep.rows.push_back(row);
  };
  for (const auto& x : base_samples) run(ctx.base().tag(), x);
  for (const auto& z : ext_samples) run(ctx.ext().tag(), z);
  return rep;
}

namespace {

CheckRow law_row(const std::string& name, std::size_t triples, Rng& rng, const Presentation& pres) {
  CheckRow row{name, true, ""};
  std::size_t checks = 0;
  try {
    const GradedElement one = GradedElement::integer(pres, 1);
    for (std::size_t i = 0; i < triples && row.passed; ++i) {
      GradedElement a = random_element(pres, rng), b = random_element(pres, rng), c = random_element(pres, rng);
      auto expect = [&](bool ok, const char* law) {
        ++checks;
        if (!ok && row.passed) {
          row.passed = false;
          row.detail = std::string(law) + " fails for a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
        }
      };
      expect(a + b == b + a, "additive commutativity");
      expect((a + b) + c == a + (b + c), "additive associativity");
      expect((a - a).is_zero(), "additive inverse");
      expect(a * b == b * a, "commutativity");
      expect((a * b) * c == a * (b * c), "associativity");
      expect(a * (b + c) == a * b + a * c, "distributivity");
      expect(one * a == a, "unit");
    }
  } catch (const Error& e) {
    row.passed = false;
    row.detail = e.what();
  }
  if (row.passed) row.detail = std::to_string(triples) + " triples, " + std::to_string(checks) + " checks";
  return row;
}

CheckRow module_row(std::size_t triples, Rng& rng, const FieldDescriptor& field) {
  CheckRow row{"BN-module eT", true, ""};
  try {
    const Presentation bn = Presentation::bn(field);
    const Presentation mod = Presentation::bn_twisted_module(field);
    for (std::size_t i = 0; i < triples && row.passed; ++i) {
      GradedElement r = random_element(bn, rng), s = random_element(bn, rng), m = random_element(mod, rng);
      bool ok = (r * s) * m == r * (s * m) && (r + s) * m == r * m + s * m;
      if (!ok) {
        row.passed = false;
        row.detail = "module axioms fail for r=" + r.to_string() + " s=" + s.to_string() + " m=" + m.to_string();
      }
    }
  } catch (const Error& e) {
    row.passed = false;
    row.detail = e.what();
  }
  if (row.passed) row.detail = std::to_string(triples) + " triples";
  return row;
}

CheckRow relation_row(const std::string& name, const std::function<bool()>& holds) {
  CheckRow row{name, false, ""};
  try {
    row.passed = holds();
    row.detail = row.passed ? "normalizes to 0" : "nonzero";
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

}  // namespace

SuiteReport verify_ring_laws(const FieldDescriptor& field, const Rational& a, std::size_t triples, std::uint64_t seed) {
  SuiteReport rep{"ring-laws", {}};
  Rng rng(seed);
  const QuadExtContext ctx(field, a);
  const Presentation bn = Presentation::bn(field);
  const Presentation tw = Presentation::twisted_point(ctx);
  auto gen = [](const Presentation& p, const char* g) { return GradedElement::generator(p, g); };
  auto one = [](const Presentation& p) { return GradedElement::integer(p, 1); };

  rep.rows.push_back(relation_row("x^2 - 1", [&] { return (gen(bn, "x").pow(2) - one(bn)).is_zero(); }));
  rep.rows.push_back(relation_row("(1 + x) e", [&] { return ((one(bn) + gen(bn, "x")) * gen(bn, "e")).is_zero(); }));
  rep.rows.push_back(relation_row("y^2 - 2(<1> - <a>)", [&] {
    return (gen(tw, "y").pow(2) - GradedElement::scalar(tw, integer_class(2, field) * ctx.one_minus_a())).is_zero();
  }));
  // I_a is the image of the transfer
  std::vector<WittClass> ideal;
  if (field.is_finite()) {
    for (const auto& z : enumerate_finite_witt(ctx.ext())) ideal.push_back(transfer(z, ctx));
  } else {
    for (int i = 0; i < 12; ++i) ideal.push_back(transfer(random_witt(ctx.ext(), rng, 2), ctx));
  }
  rep.rows.push_back(relation_row("I_a y", [&] {
    for (const auto& c : ideal)
      if (!(c * gen(tw, "y")).is_zero()) return false;
    return true;
  }));
  rep.rows.push_back(relation_row("I_a e", [&] {
    for (const auto& c : ideal)
      if (!(c * gen(tw, "e")).is_zero()) return false;
    return true;
  }));
  rep.rows.push_back(relation_row("y^2 e - 4e", [&] {
    return (gen(tw, "y").pow(2) * gen(tw, "e") - GradedElement::integer(tw, 4) * gen(tw, "e")).is_zero();
  }));

  for (const auto& pres : {Presentation::bsl2n(1, field), Presentation::bsl2n(2, field), bn, Presentation::bnn(2, field), tw})
    rep.rows.push_back(law_row(pres.name(), triples, rng, pres));
  rep.rows.push_back(module_row(triples, rng, field));
  return rep;
}

SuiteReport verify_degree_table(int max_n, const FieldDescriptor& field) {
  SuiteReport rep{"paper-table", {}};
  auto binom = [](int n, int r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
  };
  auto run = [&](const std::string& name, const std::function<LocalizationProblem()>& build, const Integer& expected) {
    CheckRow row{name, false, ""};
    try {
      ResidueResult r = bott_residue(build());
      WittClass want = integer_class(expected, field);
      row.passed = r.degree_zero && *r.degree_zero == want;
      row.detail = "degree_zero " + (r.degree_zero ? r.degree_zero->to_string() : std::string("absent")) +
                   ", expected " + want.to_string();
    } catch (const Error& e) {
      row.detail = e.what();
    }
    rep.rows.push_back(row);
  };
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    run("P^" + std::to_string(2 * n), [&] { return build_projective_problem(2 * n, n, field); }, 1);
    run("P^" + std::to_string(2 * n - 1), [&] { return build_projective_problem(2 * n - 1, n, field); }, 0);
  }
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r < n; ++r) {
      auto gr = [&](int m, int amb) { return "Gr(" + std::to_string(m) + "," + std::to_string(amb) + ")"; };
      run(gr(2 * r, 2 * n), [&] { return build_grassmannian_problem(2 * r, 2 * n, n, field); }, binom(n, r));
      run(gr(2 * r + 1, 2 * n), [&] { return build_grassmannian_problem(2 * r + 1, 2 * n, n, field); }, 0);
      run(gr(2 * r, 2 * n + 1), [&] { return build_grassmannian_problem(2 * r, 2 * n + 1, n, field); }, binom(n, r));
      run(gr(2 * r + 1, 2 * n + 1), [&] { return build_grassmannian_problem(2 * r + 1, 2 * n + 1, n, field); },
          binom(n, r));
    }
  return rep;
}

}  // namespace wloc
