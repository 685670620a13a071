#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wloc/coh_rings.hpp"
#include "wloc/euler.hpp"

namespace wloc {

// Syntax tree for form and ring literals.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*      juxtaposition only after an integer, as in 3<2>
//   factor := '<' scalar '>' | generator ['^' int] | int | '(' expr ')' ['^' int]
struct ExprNode {
  enum class Kind { Sum, Product, Scalar, Generator, Integer };

  Kind kind = Kind::Integer;
  std::vector<std::pair<int, std::shared_ptr<const ExprNode>>> terms;  // Sum: (sign, term)
  std::vector<std::shared_ptr<const ExprNode>> factors;               // Product
  Integer value;                                                      // Integer
  std::string text;                                                   // Scalar body or generator name
  int power = 1;
  std::size_t offset = 0;
};

struct ParsedExpr {
  std::shared_ptr<const ExprNode> root;
  std::string source;
};

ParsedExpr parse_expr(std::string_view text);

std::string print_expr(const ExprNode& node);

WittClass eval_witt(const ParsedExpr& expr, const FieldDescriptor& field);
GradedElement eval_ring(const ParsedExpr& expr, const Presentation& pres);

WittClass parse_witt(std::string_view text, const FieldDescriptor& field);
GradedElement parse_ring(std::string_view text, const Presentation& pres);

// rep    := rterm ('+' rterm)*
// rterm  := [int ['*']] irrep ('*' irrep)*
// irrep  := 'Sym(' int {',' int} ')' ['@' int] | 'F' ['@' int] | 'rho(' int ')' | 'rho0' | 'rho0-'
// In N context 'F' stands for rho(1).
RepSum parse_rep(std::string_view text, const GroupSpec& group);

}  // namespace wloc
