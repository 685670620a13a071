#include "wloc/expr.hpp"

#include <cctype>

#include "wloc/errors.hpp"

namespace wloc {

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse_all() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(0, "empty expression");
    NodePtr root = expr();
    skip();
    if (pos_ < s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return root;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '<' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int small_exponent() {
    std::size_t at = pos_;
    Integer e = integer();
    if (e > 64) throw SyntaxError(at, "exponent too large");
    return static_cast<int>(e.get_si());
  }

  NodePtr expr() {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Sum;
    node->offset = pos_;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    node->terms.emplace_back(sign, term());
    while (true) {
      if (eat('+')) node->terms.emplace_back(1, term());
      else if (eat('-')) node->terms.emplace_back(-1, term());
      else break;
    }
    if (node->terms.size() == 1 && node->terms[0].first == 1) return node->terms[0].second;
    return node;
  }

  NodePtr term() {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Product;
    node->offset = pos_;
    node->factors.push_back(factor());
    while (true) {
      if (eat('*')) {
        node->factors.push_back(factor());
      } else if (node->factors.back()->kind == ExprNode::Kind::Integer && at_factor_start()) {
        node->factors.push_back(factor());
      } else {
        break;
      }
    }
    if (node->factors.size() == 1) return node->factors[0];
    return node;
  }

  NodePtr factor() {
    skip();
    auto node = std::make_shared<ExprNode>();
    node->offset = pos_;
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '<') {
      auto close = s_.find('>', pos_);
      if (close == std::string_view::npos) throw SyntaxError(pos_, "unterminated '<'");
      node->kind = ExprNode::Kind::Scalar;
      node->text = std::string(s_.substr(pos_ + 1, close - pos_ - 1));
      if (node->text.find_first_not_of(" \t") == std::string::npos) throw SyntaxError(pos_ + 1, "empty scalar");
      pos_ = close + 1;
      return node;
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      if (eat('^')) {
        auto prod = std::make_shared<ExprNode>();
        prod->kind = ExprNode::Kind::Product;
        prod->offset = node->offset;
        prod->factors.push_back(inner);
        prod->power = small_exponent();
        return prod;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      node->kind = ExprNode::Kind::Integer;
      node->value = integer();
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      node->kind = ExprNode::Kind::Generator;
      node->text = std::string(s_.substr(start, pos_ - start));
      if (eat('^')) node->power = small_exponent();
      return node;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Evaluation over any algebra providing the hooks below.
template <class Value, class Ops>
Value evaluate(const ExprNode& node, const Ops& ops) {
  Value v = ops.integer(0);
  switch (node.kind) {
    case ExprNode::Kind::Integer: v = ops.integer(node.value); break;
    case ExprNode::Kind::Scalar: v = ops.scalar(node.text, node.offset); break;
    case ExprNode::Kind::Generator: v = ops.generator(node.text, node.offset); break;
    case ExprNode::Kind::Sum: {
      bool first = true;
      for (const auto& [sign, child] : node.terms) {
        Value t = evaluate<Value>(*child, ops);
        if (sign < 0) t = ops.neg(t);
        v = first ? t : ops.add(v, t);
        first = false;
      }
      break;
    }
    case ExprNode::Kind::Product: {
      v = evaluate<Value>(*node.factors[0], ops);
      for (std::size_t i = 1; i < node.factors.size(); ++i) v = ops.mul(v, evaluate<Value>(*node.factors[i], ops));
      break;
    }
  }
  if (node.power != 1) {
    Value base = v;
    v = ops.integer(1);
    for (int i = 0; i < node.power; ++i) v = ops.mul(v, base);
  }
  return v;
}

struct WittOps {
  const FieldDescriptor& field;

  WittClass integer(const Integer& n) const { return integer_class(n, field); }
  WittClass scalar(const std::string& text, std::size_t offset) const {
    FieldElement c;
    try {
      c = parse_scalar(text, field);
    } catch (const SyntaxError& e) {
      throw SyntaxError(offset + 1 + e.offset(), std::string("bad scalar '") + text + "'");
    }
    if (field.is_zero(c)) fail(ErrorCode::ZeroInput, "<0> is not a form");
    return WittClass::unit(field, c);
  }
  WittClass generator(const std::string& name, std::size_t) const {
    fail(ErrorCode::UnknownGenerator, "'" + name + "' in a Witt ring expression");
  }
  WittClass neg(const WittClass& x) const { return -x; }
  WittClass add(const WittClass& x, const WittClass& y) const { return x + y; }
  WittClass mul(const WittClass& x, const WittClass& y) const { return x * y; }
};

struct RingOps {
  const Presentation& pres;
  Presentation scalar_pres;

  GradedElement integer(const Integer& n) const {
    return GradedElement::scalar(scalar_pres, integer_class(n, pres.field()));
  }
  GradedElement scalar(const std::string& text, std::size_t offset) const {
    return GradedElement::scalar(scalar_pres, WittOps{pres.field()}.scalar(text, offset));
  }
  GradedElement generator(const std::string& name, std::size_t) const {
    return GradedElement::generator(pres, name);
  }
  GradedElement neg(const GradedElement& x) const { return -x; }
  GradedElement add(const GradedElement& x, const GradedElement& y) const { return x + y; }
  GradedElement mul(const GradedElement& x, const GradedElement& y) const { return x * y; }
};

std::string scalar_or_integer(const ExprNode& n) {
  if (n.kind == ExprNode::Kind::Integer) return n.value.get_str();
  if (n.kind == ExprNode::Kind::Scalar) return "<" + n.text + ">";
  return n.text;
}

}  // namespace

ParsedExpr parse_expr(std::string_view text) {
  Parser p(text);
  return {p.parse_all(), std::string(text)};
}

std::string print_expr(const ExprNode& node) {
  std::string out;
  switch (node.kind) {
    case ExprNode::Kind::Integer:
    case ExprNode::Kind::Scalar:
    case ExprNode::Kind::Generator: out = scalar_or_integer(node); break;
    case ExprNode::Kind::Sum:
      for (std::size_t i = 0; i < node.terms.size(); ++i) {
        const auto& [sign, child] = node.terms[i];
        if (i == 0) out += sign < 0 ? "-" : "";
        else out += sign < 0 ? " - " : " + ";
        out += print_expr(*child);
      }
      out = "(" + out + ")";
      break;
    case ExprNode::Kind::Product:
      for (std::size_t i = 0; i < node.factors.size(); ++i) out += (i ? "*" : "") + print_expr(*node.factors[i]);
      if (node.power != 1) out = "(" + out + ")";
      break;
  }
  if (node.power != 1) out += "^" + std::to_string(node.power);
  return out;
}

WittClass eval_witt(const ParsedExpr& expr, const FieldDescriptor& field) {
  return evaluate<WittClass>(*expr.root, WittOps{field});
}

GradedElement eval_ring(const ParsedExpr& expr, const Presentation& pres) {
  Presentation sp = pres.kind() == PresentationKind::BNTwistedModule ? Presentation::bn(pres.field()) : pres;
  return evaluate<GradedElement>(*expr.root, RingOps{pres, sp});
}

WittClass parse_witt(std::string_view text, const FieldDescriptor& field) {
  return eval_witt(parse_expr(text), field);
}

GradedElement parse_ring(std::string_view text, const Presentation& pres) {
  return eval_ring(parse_expr(text), pres);
}

namespace {

class RepParser {
 public:
  RepParser(std::string_view text, const GroupSpec& group) : s_(text), group_(group) {}

  RepSum parse() {
    RepSum out{group_, {}, {}};
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(0, "empty representation");
    if (s_.substr(pos_) == "0") return out;
    rterm(out);
    while (eat('+')) rterm(out);
    skip();
    if (pos_ < s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected an integer");
    if (pos_ - start > 6) throw SyntaxError(start, "integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void rterm(RepSum& out) {
    skip();
    long mult = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mult = number();
      eat('*');
    }
    std::size_t at = pos_;
    if (group_.kind == GroupKind::N) {
      NIrrep irrep = n_irrep();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*')
        fail(ErrorCode::UnsupportedIrrep, "tensor products of N irreducibles at offset " + std::to_string(pos_));
      out.add(irrep, mult);
      return;
    }
    SL2nIrrep irrep = sl2n_irrep();
    while (eat('*')) {
      SL2nIrrep more = sl2n_irrep();
      irrep.factors.insert(irrep.factors.end(), more.factors.begin(), more.factors.end());
    }
    std::vector<bool> seen(group_.n + 1, false);
    for (const auto& [i, m] : irrep.factors) {
      if (i < 1 || i > group_.n) throw SyntaxError(at, "factor index " + std::to_string(i) + " out of range");
      if (seen[i]) throw SyntaxError(at, "factor " + std::to_string(i) + " used twice in one tensor product");
      seen[i] = true;
    }
    out.add(irrep, mult);
  }

  int at_index() {
    if (!eat('@')) return 0;
    return static_cast<int>(number());
  }

  SL2nIrrep sl2n_irrep() {
    skip();
    std::size_t at = pos_;
    if (eat_word("Sym(")) {
      std::vector<int> exps{static_cast<int>(number())};
      while (eat(',')) exps.push_back(static_cast<int>(number()));
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      int idx = at_index();
      if (idx > 0) {
        if (exps.size() != 1) throw SyntaxError(at, "'@' needs a single exponent");
        return SL2nIrrep::sym(idx, exps[0]);
      }
      SL2nIrrep out;
      for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0 || exps.size() == 1) out.factors.emplace_back(static_cast<int>(i) + 1, exps[i]);
      return out;
    }
    if (eat_word("rho")) fail(ErrorCode::UnsupportedIrrep, "rho is an N representation");
    if (eat_word("F")) {
      int idx = at_index();
      return SL2nIrrep::fundamental(idx > 0 ? idx : 1);
    }
    throw SyntaxError(at, "expected Sym(...) or F");
  }

  NIrrep n_irrep() {
    skip();
    std::size_t at = pos_;
    if (eat_word("rho(")) {
      long m = number();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      if (m < 1) fail(ErrorCode::UnsupportedIrrep, "rho(m) needs m >= 1");
      return NIrrep::rho(static_cast<int>(m));
    }
    if (eat_word("rho0-")) return NIrrep::rho0_minus();
    if (eat_word("rho0")) return NIrrep::rho0();
    if (eat_word("F")) {
      int idx = at_index();
      if (idx > 1) throw SyntaxError(at, "N has a single factor");
      return NIrrep::rho(1);
    }
    if (eat_word("Sym(")) fail(ErrorCode::UnsupportedIrrep, "Sym is an SL2n representation");
    throw SyntaxError(at, "expected rho(m), rho0, rho0- or F");
  }

  std::string_view s_;
  GroupSpec group_;
  std::size_t pos_ = 0;
};

}  // namespace

RepSum parse_rep(std::string_view text, const GroupSpec& group) { return RepParser(text, group).parse(); }

}  // namespace wloc
