#include <doctest.h>

#include "test_util.hpp"

using namespace wloc;
using testutil::code_of;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

GradedElement R(const char* text, int n) { return parse_ring(text, Presentation::bsl2n(n, Q)); }
GradedElement BN(const char* text) { return parse_ring(text, Presentation::bn(Q)); }

}  // namespace

TEST_CASE("Sym^m of the fundamental representation") {
  auto v = euler_sl2n_irrep(SL2nIrrep::sym(1, 3), 1, Q);
  REQUIRE(v.value);
  CHECK(*v.value == R("3*e^4", 1));
  CHECK(v.determinacy == Determinacy::Exact);
  CHECK(euler_sl2n_irrep(SL2nIrrep::sym(1, 2), 1, Q).value->is_zero());
  CHECK(*euler_sl2n_irrep(SL2nIrrep::sym(1, 9), 1, Q).value == R("945*e^10", 1));
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(1) == 1);
  auto t = euler_sl2n_irrep(SL2nIrrep::tensor(1, 2), 2, Q);
  CHECK(*t.value == R("e1^2 - e2^2", 2));
  CHECK(*euler_sl2n_irrep(SL2nIrrep::tensor(2, 1), 2, Q).value == -*t.value);
  CHECK(*euler_sl2n_irrep(SL2nIrrep{{{1, 2}, {2, 4}}}, 2, Q).value == R("0", 2));
  CHECK(code_of([] { euler_sl2n_irrep(SL2nIrrep{{{1, 1}, {2, 3}}}, 2, Q); }) == ErrorCode::UnsupportedIrrep);
  CHECK(code_of([] { euler_sl2n_irrep(SL2nIrrep::sym(3, 1), 2, Q); }) == ErrorCode::UnsupportedIrrep);
}

TEST_CASE("N representations") {
  auto r1 = euler_n_irrep(NIrrep::rho(1), Q);
  CHECK(*r1.value == BN("e"));
  CHECK(r1.determinacy == Determinacy::UpToSign);
  CHECK(r1.known_square == BN("e^2"));
  auto r2 = euler_n_irrep(NIrrep::rho(2), Q);
  CHECK_FALSE(r2.value);
  CHECK(r2.determinacy == Determinacy::SquareOnly);
  CHECK(r2.known_square == BN("4*e^2"));
  CHECK(euler_n_irrep(NIrrep::rho0(), Q).value->is_zero());
  CHECK(euler_n_irrep(NIrrep::rho0_minus(), Q).value->is_zero());
  CHECK(euler_n_irrep(NIrrep::rho(6), Q).known_square == BN("36*e^2"));
}

TEST_CASE("Whitney sums") {
  auto v = euler_rep(parse_rep("F@1 + F@2", {GroupKind::SL2n, 2}), Q);
  // every odd m follows m!! e^(m+1), including m = 1
  CHECK(*v.value == R("e1^2*e2^2", 2));
  CHECK(v.determinacy == Determinacy::Exact);
  auto w = euler_rep(parse_rep("rho(1) + rho(1)", {GroupKind::N, 1}), Q);
  REQUIRE(w.value);
  CHECK(*w.value == BN("e^2"));
  CHECK(w.determinacy == Determinacy::Exact);
  CHECK(w.known_square == BN("e^4"));
  auto s = euler_rep(parse_rep("2*rho(2)", {GroupKind::N, 1}), Q);
  CHECK(s.determinacy == Determinacy::Exact);
  CHECK(*s.value == BN("4*e^2"));
  auto m = euler_rep(parse_rep("rho(1) + rho(3)", {GroupKind::N, 1}), Q);
  CHECK(m.determinacy == Determinacy::UpToSign);
  CHECK(*m.value == BN("3*e^2"));
}

TEST_CASE("generic Euler classes") {
  CHECK(generic_euler(parse_rep("F@1", {GroupKind::SL2n, 1}), Q) == R("e^4", 1));
  CHECK(generic_euler(parse_rep("rho(3)", {GroupKind::N, 1}), Q) == BN("9*e^2"));
  CHECK(generic_euler(parse_rep("rho0", {GroupKind::N, 1}), Q).is_zero());
}

TEST_CASE("exact values square to the known square") {
  GroupSpec g{GroupKind::SL2n, 3};
  for (const char* rep : {"F@1", "Sym(3)@2", "F@1*F@3 + F@2", "Sym(5)@1 + 2*F@3", "Sym(2)@1"}) {
    auto v = euler_rep(parse_rep(rep, g), Q);
    REQUIRE(v.value);
    CHECK(v.known_square == *v.value * *v.value);
  }
}
