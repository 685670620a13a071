#include "wloc/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "wloc/errors.hpp"
#include "wloc/expr.hpp"

namespace wloc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::SyntaxError, "problem document: " + what); }

const json& need(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing '") + key + "'");
  return obj.at(key);
}

std::string need_string(const json& obj, const char* key) {
  const json& v = need(obj, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Rational radicand_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    Rational r;
    if (r.set_str(v.get<std::string>(), 10) != 0) bad("bad radicand '" + v.get<std::string>() + "'");
    r.canonicalize();
    return r;
  }
  bad("'a' must be an integer or a string");
}

FixedComponent component_from_json(const json& j, const GroupDescriptor& g, std::size_t index) {
  if (!j.is_object()) bad("components must be objects");
  FixedComponent c;
  c.id = j.contains("id") ? j.at("id").get<std::string>() : "C" + std::to_string(index + 1);
  std::string residue = j.value("residue", std::string("rational"));
  if (residue == "twisted") {
    c.residue = ResidueKind::TwistedPoint;
    c.ctx = QuadExtContext(g.field, radicand_of(need(j, "a")));
  } else if (residue != "rational") {
    bad("residue must be 'rational' or 'twisted'");
  }
  c.normal = parse_rep(need_string(j, "normal"), g.group);
  if (!j.contains("restricted")) {
    c.restricted = c.normal;
  } else if (const json& r = j.at("restricted"); r.is_string()) {
    c.restricted = parse_rep(r.get<std::string>(), g.group);
  } else if (r.is_object() && r.contains("class")) {
    c.restricted = parse_ring(need_string(r, "class"), component_presentation(c, g));
  } else {
    bad("'restricted' must be a representation or {\"class\": ...}");
  }
  if (j.contains("twist")) {
    RepSum t = parse_rep(need_string(j, "twist"), GroupSpec{GroupKind::N, 1});
    if (t.n_terms.size() != 1 || t.n_terms[0].second != 1) bad("'twist' must be a single N irreducible");
    c.twist = t.n_terms[0].first;
  }
  if (j.contains("residue_field")) c.residue_field = parse_field(need_string(j, "residue_field"));
  return c;
}

}  // namespace

LocalizationProblem problem_from_json(const json& doc) {
  const json& gj = need(doc, "group");
  std::string kind = need_string(gj, "kind");
  GroupSpec gs;
  if (kind == "SL2n") gs.kind = GroupKind::SL2n;
  else if (kind == "N") gs.kind = GroupKind::N;
  else bad("group kind must be 'SL2n' or 'N'");
  gs.n = gj.value("n", 1);
  LocalizationProblem p{GroupDescriptor{gs, parse_field(need_string(gj, "field"))}, {}, std::nullopt};
  if (doc.contains("components")) {
    const json& cs = doc.at("components");
    if (!cs.is_array()) bad("'components' must be an array");
    for (std::size_t i = 0; i < cs.size(); ++i) p.components.push_back(component_from_json(cs[i], p.group, i));
  }
  if (doc.contains("invert") && doc.at("invert").contains("M")) p.invert_m = doc.at("invert").at("M").get<long>();
  return p;
}

LocalizationProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadParameters, "cannot open problem file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte, std::string("problem file is not JSON: ") + e.what());
  }
  try {
    return problem_from_json(doc);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json problem_to_json(const LocalizationProblem& p) {
  json doc;
  doc["group"] = {{"kind", p.group.group.kind == GroupKind::SL2n ? "SL2n" : "N"},
                  {"n", p.group.group.n},
                  {"field", p.group.field.tag()}};
  doc["components"] = json::array();
  for (const auto& c : p.components) {
    json j{{"id", c.id}, {"residue", c.residue == ResidueKind::TwistedPoint ? "twisted" : "rational"},
           {"normal", c.normal.to_string()}};
    if (c.ctx) j["a"] = c.ctx->a().get_str();
    if (const auto* rep = std::get_if<RepSum>(&c.restricted)) j["restricted"] = rep->to_string();
    else j["restricted"] = {{"class", std::get<GradedElement>(c.restricted).to_string()}};
    if (c.twist) j["twist"] = c.twist->to_string();
    if (c.residue_field) j["residue_field"] = c.residue_field->tag();
    doc["components"].push_back(j);
  }
  if (p.invert_m) doc["invert"] = {{"M", *p.invert_m}};
  return doc;
}

json result_to_json(const ResidueResult& r) {
  json out;
  out["localized"] = r.value.to_string();
  out["cleared"] = r.cleared ? json(r.cleared->to_string()) : json(nullptr);
  out["degree_zero"] = r.degree_zero ? json(r.degree_zero->to_string()) : json(nullptr);
  out["sign_ambiguous"] = r.sign_ambiguous;
  out["potentially_vacuous"] = r.potentially_vacuous;
  out["notes"] = r.notes;
  return out;
}

std::string result_to_text(const ResidueResult& r) {
  std::ostringstream out;
  out << "localized: " << r.value.to_string() << "\n";
  if (r.cleared) out << "cleared: " << r.cleared->to_string() << "\n";
  if (r.degree_zero) out << "degree_zero: " << r.degree_zero->to_string() << "\n";
  if (r.sign_ambiguous) out << "sign_ambiguous: true\n";
  if (r.potentially_vacuous) out << "potentially_vacuous: true\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace wloc
