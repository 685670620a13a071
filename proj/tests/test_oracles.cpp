// Library against the independent oracles in tests/oracles.
#include <doctest.h>

#include "oracles/bn_rewrite.hpp"
#include "oracles/fp_isometry.hpp"
#include "oracles/rational_witt.hpp"
#include "wloc/coh_rings.hpp"
#include "wloc/number_theory.hpp"

using namespace wloc;

namespace {

std::vector<std::vector<long>> square_class_forms(long p, int max_rank) {
  auto is_square = [p](long t) {
    for (long r = 1; r < p; ++r)
      if (r * r % p == t) return true;
    return false;
  };
  long nonres = 2;
  while (is_square(nonres)) ++nonres;
  std::vector<std::vector<long>> out{{}};
  for (int r = 1; r <= max_rank; ++r)
    for (long mask = 0; mask < (1L << r); ++mask) {
      std::vector<long> d;
      for (int i = 0; i < r; ++i) d.push_back((mask >> i) & 1 ? nonres : 1);
      out.push_back(d);
    }
  return out;
}

WittClass class_of(const std::vector<long>& d, const FieldDescriptor& f) {
  QuadraticForm q{f, {}};
  for (long v : d) q.entries.push_back(f.element(v));
  return witt_class(q);
}

std::vector<long> rep_diag(const WittClass& x) {
  std::vector<long> out;
  for (const auto& c : x.representative().entries) out.push_back(mpz_class(c.u.get_num()).get_si());
  return out;
}

}  // namespace

TEST_CASE("oracle sanity: F_p isometry search") {
  CHECK(oracle::witt_equivalent({1, -1}, {}, 7));
  CHECK(oracle::witt_equivalent({1, 1}, {}, 5));       // -1 is a square mod 5
  CHECK_FALSE(oracle::witt_equivalent({1, 1}, {}, 3));  // but not mod 3
  CHECK(oracle::witt_equivalent({1, 1, 1}, {1}, 5));
  CHECK_FALSE(oracle::witt_equivalent({1}, {2}, 5));
  CHECK(oracle::witt_equivalent({1, 1, 1, 1}, {}, 3));
}

TEST_CASE("oracle sanity: rational hyperbolicity") {
  CHECK(oracle::rational_hyperbolic({1, -1}));
  CHECK(oracle::rational_hyperbolic({2, -8}));
  CHECK_FALSE(oracle::rational_hyperbolic({1, 1}));
  CHECK(oracle::rational_hyperbolic({2, 2, -1, -1}));
  CHECK_FALSE(oracle::rational_hyperbolic({1, 1, 1, 1}));
  CHECK_FALSE(oracle::rational_hyperbolic({3, 3, -1, -1}));
}

TEST_CASE("witt_class over F_p matches the isometry oracle") {
  for (long p : {3L, 5L, 7L, 11L}) {
    const auto f = FieldDescriptor::finite_prime(p);
    auto forms = square_class_forms(p, 4);
    std::vector<WittClass> classes;
    for (const auto& d : forms) {
      classes.push_back(class_of(d, f));
      INFO("p=" << p << " rank=" << d.size());
      CHECK(oracle::witt_equivalent(d, rep_diag(classes.back()), p));
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = i; j < forms.size(); ++j)
        CHECK((classes[i] == classes[j]) == oracle::witt_equivalent(forms[i], forms[j], p));
  }
}

TEST_CASE("W(Q) equality matches the hyperbolicity oracle on binary forms") {
  const auto Q = FieldDescriptor::rationals();
  const std::vector<long> units{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10};
  std::vector<std::pair<long, long>> binaries;
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i; j < units.size(); ++j) binaries.emplace_back(units[i], units[j]);
  std::size_t agree = 0, equal = 0;
  for (const auto& [a, b] : binaries) {
    WittClass x = class_of({a, b}, Q);
    CHECK((x.is_zero()) == oracle::rational_hyperbolic({a, b}));
    for (const auto& [c, d] : binaries) {
      bool lib = x == class_of({c, d}, Q);
      bool orc = oracle::rational_hyperbolic({a, b, -c, -d});
      if (lib == orc) ++agree;
      if (orc) ++equal;
      if (lib != orc) FAIL_CHECK("<" << a << "," << b << "> vs <" << c << "," << d << ">");
    }
  }
  CHECK(agree == binaries.size() * binaries.size());
  CHECK(equal > binaries.size());  // nontrivial isometries were found
}

TEST_CASE("BN normal form matches naive rewriting") {
  const auto Q = FieldDescriptor::rationals();
  const auto bn = Presentation::bn(Q);
  std::vector<WittClass> coeffs;
  for (const char* s : {"1", "-1", "2", "3", "-6", "5"}) coeffs.push_back(WittClass::unit(Q, parse_scalar(s, Q)));
  coeffs[3] = coeffs[3] + coeffs[4];  // a rank-two coefficient
  for (int xi = 0; xi <= 6; ++xi)
    for (int ei = 0; xi + ei <= 6; ++ei)
      for (int xj = 0; xi + ei + xj <= 6; ++xj)
        for (int ej = 0; xi + ei + xj + ej <= 6; ++ej)
          for (const auto& ci : coeffs)
            for (const auto& cj : coeffs) {
              GradedElement lib = GradedElement::term(bn, {xi, ei}, ci) * GradedElement::term(bn, {xj, ej}, cj);
              oracle::BnElement orc;
              oracle::add_word(orc, oracle::word_of(xi, ei) + oracle::word_of(xj, ej), ci * cj);
              GradedElement from_oracle(bn);
              for (const auto& [w, c] : orc) {
                int x = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
                int e = static_cast<int>(std::count(w.begin(), w.end(), 'e'));
                from_oracle += GradedElement::term(bn, {x, e}, c);
              }
              CHECK(lib == from_oracle);
              REQUIRE(lib.terms().size() == orc.size());
            }
}
