#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wloc/witt.hpp"

namespace wloc {

// k(sqrt a) over k, with the generator sqrt(a) fixed by the stored radicand.
class QuadExtContext {
 public:
  QuadExtContext(FieldDescriptor base, const Rational& a);

  const FieldDescriptor& base() const { return base_; }
  const FieldDescriptor& ext() const { return ext_; }
  const Rational& a() const { return ext_.radicand(); }

  // <a> and 1 - <a> in W(k)
  WittClass radicand_class() const;
  WittClass one_minus_a() const;

  friend bool operator==(const QuadExtContext& x, const QuadExtContext& y) { return x.ext_ == y.ext_; }

 private:
  FieldDescriptor base_;
  FieldDescriptor ext_;
};

WittClass base_change(const WittClass& x, const QuadExtContext& ctx);

// Scharlau transfer along the trace k(sqrt a) -> k.
WittClass transfer(const WittClass& x, const QuadExtContext& ctx);

// transfer(<sqrt a> * x)
WittClass scaled_transfer(const WittClass& x, const QuadExtContext& ctx);

// x * (1 - <a>) = 0
bool in_Ia(const WittClass& x, const QuadExtContext& ctx);

// y with (1 - <a>) y = x, searched over sums of at most max_terms rank-one
// classes from a bounded generating set. Raises Undecided when none is found.
WittClass ideal_multiplier(const WittClass& x, const QuadExtContext& ctx, int max_terms = 3);

struct LamReport {
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Samples may live over the base or over the extension.
LamReport lam_exactness_check(const QuadExtContext& ctx, const std::vector<WittClass>& samples);

}  // namespace wloc
