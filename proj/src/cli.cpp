#include "wloc/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wloc/errors.hpp"
#include "wloc/expr.hpp"
#include "wloc/problem_io.hpp"
#include "wloc/verify.hpp"

namespace wloc {

using nlohmann::json;

namespace {

struct Options {
  std::string field = "Q";
  std::string a;
  int n = 1;
  std::string expr;
  std::string pres = "bn";
  std::string group = "SL2n";
  std::string builder;
  std::string dim;
  std::string m;
  std::string ambient;
  std::string problem;
  std::string suite;
  long invert_m = 0;
  int rank = 4;
  std::size_t samples = 50;
  std::size_t triples = 1000;
  std::uint64_t seed = 20260418;
  bool as_json = false;
};

Rational parse_radicand(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw SyntaxError(0, "bad radicand '" + text + "'");
  r.canonicalize();
  return r;
}

// "2n", "2n-1", "2n+1" relative to n, or a plain integer
int parse_dimension(const std::string& text, int n) {
  if (text.empty()) throw SyntaxError(0, "missing dimension");
  std::size_t pos = text.find('n');
  if (pos == std::string::npos) {
    if (text.find_first_not_of("0123456789") != std::string::npos) throw SyntaxError(0, "bad dimension '" + text + "'");
    return std::stoi(text);
  }
  int coef = pos == 0 ? 1 : std::stoi(text.substr(0, pos));
  int shift = 0;
  if (pos + 1 < text.size()) {
    std::string rest = text.substr(pos + 1);
    if ((rest[0] != '+' && rest[0] != '-') || rest.size() < 2 ||
        rest.find_first_not_of("0123456789", 1) != std::string::npos)
      throw SyntaxError(pos + 1, "bad dimension '" + text + "'");
    shift = std::stoi(rest);
  }
  return coef * n + shift;
}

Presentation presentation_for(const Options& o, const FieldDescriptor& field) {
  const std::string& p = o.pres;
  if (p == "bsl2n") return Presentation::bsl2n(o.n, field);
  if (p == "bn") return Presentation::bn(field);
  if (p == "bnn") return Presentation::bnn(o.n, field);
  if (p == "module") return Presentation::bn_twisted_module(field);
  if (p == "twisted") {
    if (o.a.empty()) fail(ErrorCode::BadParameters, "--pres twisted needs --a");
    return Presentation::twisted_point(QuadExtContext(field, parse_radicand(o.a)));
  }
  throw SyntaxError(0, "unknown presentation '" + p + "' (bsl2n, bn, bnn, twisted, module)");
}

GroupSpec group_for(const Options& o) {
  if (o.group == "SL2n") return {GroupKind::SL2n, o.n};
  if (o.group == "N") return {GroupKind::N, 1};
  throw SyntaxError(0, "unknown group '" + o.group + "' (SL2n, N)");
}

int cmd_witt(const Options& o, std::ostream& out) {
  FieldDescriptor field = parse_field(o.field);
  WittClass x = parse_witt(o.expr, field);
  if (!o.as_json) {
    out << x.to_string() << "\n";
    return kExitOk;
  }
  json j{{"field", field.tag()}, {"class", x.to_string()}, {"rank_parity", x.rank_is_even() ? "even" : "odd"}};
  j["entries"] = json::array();
  for (const auto& e : x.entries()) j["entries"].push_back({{"value", field.to_string(e.value)}, {"mult", e.mult.get_str()}});
  j["signatures"] = json::array();
  for (const auto& s : signatures(x)) j["signatures"].push_back(s.get_str());
  if (field.kind() == FieldKind::Rationals) {
    RationalInvariants inv = rational_invariants(x);
    json res = json::object();
    for (const auto& [p, r] : inv.residues) res[p.get_str()] = {{"odd", r.odd}, {"disc_nonsquare", r.disc_nonsquare}};
    j["invariants"] = {{"signature", inv.signature.get_str()}, {"residues", res}, {"dyadic", inv.dyadic}};
  } else if (field.is_finite() || field.is_complex()) {
    FiniteWittInvariant inv = finite_invariant(x);
    j["invariants"] = {{"odd", inv.odd}, {"disc_nonsquare", inv.disc_nonsquare}};
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_ring(const Options& o, std::ostream& out) {
  FieldDescriptor field = parse_field(o.field);
  GradedElement x = parse_ring(o.expr, presentation_for(o, field));
  if (o.as_json) {
    json j{{"presentation", x.presentation().name()}, {"element", x.to_string()}};
    if (auto d = x.degree()) j["degree"] = *d;
    out << j.dump(2) << "\n";
  } else {
    out << x.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_euler(const Options& o, std::ostream& out) {
  FieldDescriptor field = parse_field(o.field);
  RepSum rep = parse_rep(o.expr, group_for(o));
  EulerClassValue v = euler_rep(rep, field);
  if (o.as_json) {
    json j{{"rep", rep.to_string()},
           {"rank", rep.rank().get_str()},
           {"euler", v.value ? json(v.value->to_string()) : json(nullptr)},
           {"determinacy", determinacy_name(v.determinacy)},
           {"square", v.known_square.to_string()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "euler: " << (v.value ? v.value->to_string() : std::string("unknown")) << "\n";
  out << "determinacy: " << determinacy_name(v.determinacy) << "\n";
  out << "square: " << v.known_square.to_string() << "\n";
  return kExitOk;
}

int cmd_localize(const Options& o, std::ostream& out) {
  LocalizationProblem p;
  if (!o.problem.empty()) {
    if (!o.builder.empty()) throw SyntaxError(0, "--problem and --builder are exclusive");
    p = load_problem_file(o.problem);
  } else {
    FieldDescriptor field = parse_field(o.field);
    if (o.builder == "p") {
      p = build_projective_problem(parse_dimension(o.dim.empty() ? "2n" : o.dim, o.n), o.n, field);
    } else if (o.builder == "gr") {
      if (o.m.empty()) throw SyntaxError(0, "--builder gr needs --m");
      p = build_grassmannian_problem(parse_dimension(o.m, o.n), parse_dimension(o.ambient.empty() ? "2n" : o.ambient, o.n),
                                     o.n, field);
    } else {
      throw SyntaxError(0, "localize needs --problem or --builder p|gr");
    }
  }
  if (o.invert_m != 0) p.invert_m = o.invert_m;
  ResidueResult r = bott_residue(p);
  if (o.as_json) out << result_to_json(r).dump(2) << "\n";
  else out << result_to_text(r);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteReport rep;
  if (o.suite == "witt-fp") {
    std::vector<long> primes{3, 5, 7, 11};
    if (o.field != "Q") {
      FieldDescriptor f = parse_field(o.field);
      if (f.kind() != FieldKind::FinitePrime) fail(ErrorCode::UnsupportedField, "witt-fp needs a prime field");
      primes = {f.prime()};
    }
    if (o.rank < 1 || o.rank > 6) fail(ErrorCode::BadParameters, "--rank must be in 1..6");
    rep = verify_witt_fp(primes, o.rank);
  } else if (o.suite == "lam") {
    QuadExtContext ctx(parse_field(o.field), parse_radicand(o.a.empty() ? "-1" : o.a));
    rep = verify_lam(ctx, o.samples, o.seed);
  } else if (o.suite == "ring-laws") {
    rep = verify_ring_laws(parse_field(o.field), parse_radicand(o.a.empty() ? "2" : o.a), o.triples, o.seed);
  } else if (o.suite == "paper-table") {
    if (o.n < 1 || o.n > 5) fail(ErrorCode::BadParameters, "--n must be in 1..5");
    rep = verify_degree_table(o.n, parse_field(o.field));
  } else {
    throw SyntaxError(0, "unknown suite '" + o.suite + "' (witt-fp, lam, ring-laws, paper-table)");
  }
  if (o.as_json) {
    json j{{"suite", rep.suite}, {"ok", rep.ok()}, {"rows", json::array()}};
    for (const auto& r : rep.rows) j["rows"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << j.dump(2) << "\n";
  } else {
    out << format_table(rep);
  }
  return rep.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Witt-sheaf localization calculator", "wloc"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.as_json, "machine-readable output");

  auto field_opt = [&](CLI::App* sub) { sub->add_option("--field", o.field, "Q, R, Fp:7 or F7, Q(sqrt:2), ...")->capture_default_str(); };

  CLI::App* witt = app.add_subcommand("witt", "canonical class of a form expression");
  witt->add_option("expr", o.expr, "e.g. \"3*<2> - <-1>\"")->required();
  field_opt(witt);

  CLI::App* ring = app.add_subcommand("ring", "normal form in a presented ring");
  ring->add_option("expr", o.expr, "e.g. \"x*e + 2*e^2\"")->required();
  field_opt(ring);
  ring->add_option("--pres", o.pres, "bsl2n, bn, bnn, twisted or module")->capture_default_str();
  ring->add_option("--n", o.n, "number of factors");
  ring->add_option("--a", o.a, "radicand of the twisted point");

  CLI::App* euler = app.add_subcommand("euler", "Euler class of a representation");
  euler->add_option("rep", o.expr, "e.g. \"Sym(3)@1 + F@1*F@2\" or \"rho(3)\"")->required();
  field_opt(euler);
  euler->add_option("--group", o.group, "SL2n or N")->capture_default_str();
  euler->add_option("--n", o.n, "number of SL2 factors");

  CLI::App* loc = app.add_subcommand("localize", "Bott residue of a localization problem");
  field_opt(loc);
  loc->add_option("--problem", o.problem, "JSON problem file");
  loc->add_option("--builder", o.builder, "p (projective space) or gr (Grassmannian)");
  loc->add_option("dim", o.dim, "projective dimension: 2n, 2n-1 or an integer");
  loc->add_option("--n", o.n, "number of SL2 factors");
  loc->add_option("--m", o.m, "Grassmannian subspace dimension");
  loc->add_option("--ambient", o.ambient, "Grassmannian ambient dimension: 2n, 2n+1 or an integer");
  loc->add_option("--M", o.invert_m, "multiplier M of the localizing element M e (N problems)");

  CLI::App* ver = app.add_subcommand("verify", "oracle suites with a pass/fail table");
  ver->add_option("suite,--suite", o.suite, "witt-fp, lam, ring-laws or paper-table");
  field_opt(ver);
  ver->add_option("--a", o.a, "radicand for lam and ring-laws");
  ver->add_option("--n", o.n, "largest n for paper-table");
  ver->add_option("--rank", o.rank, "largest rank for witt-fp");
  ver->add_option("--samples", o.samples, "sample size over infinite fields");
  ver->add_option("--triples", o.triples, "random triples per presentation");
  ver->add_option("--seed", o.seed, "random seed");

  for (CLI::App* sub : {witt, ring, euler, loc, ver}) sub->add_flag("--json", o.as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (ver->parsed() && o.n == 1 && !ver->count("--n")) o.n = 4;
  if (ver->parsed() && o.suite.empty()) {
    err << "usage error: verify needs a suite\n";
    return kExitUsage;
  }

  try {
    if (witt->parsed()) return cmd_witt(o, out);
    if (ring->parsed()) return cmd_ring(o, out);
    if (euler->parsed()) return cmd_euler(o, out);
    if (loc->parsed()) return cmd_localize(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool usage = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::UnknownGenerator;
    return usage ? kExitUsage : kExitCompute;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wloc
