#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wloc/euler.hpp"

namespace wloc {

struct GroupDescriptor {
  GroupSpec group;
  FieldDescriptor field;
};

enum class ResidueKind { RationalPoint, TwistedPoint };

struct FixedComponent {
  std::string id;
  ResidueKind residue = ResidueKind::RationalPoint;
  std::optional<QuadExtContext> ctx;  // TwistedPoint only
  RepSum normal;
  // Restriction of the global class: a representation (its Euler class) or a
  // literal element of the component's coefficient ring.
  std::variant<RepSum, GradedElement> restricted;
  std::optional<NIrrep> twist;
  // Residue field of a rational point with trivial action, when larger than k.
  std::optional<FieldDescriptor> residue_field;
};

struct LocalizationProblem {
  GroupDescriptor group;
  std::vector<FixedComponent> components;
  std::optional<long> invert_m;  // N only
};

struct ResidueResult {
  LocalizedElement value;
  std::optional<GradedElement> cleared;
  std::optional<WittClass> degree_zero;
  bool sign_ambiguous = false;
  bool potentially_vacuous = false;
  std::vector<std::string> notes;
};

// Coefficient ring of a component: BSL2n(n), BN or the twisted point.
Presentation component_presentation(const FixedComponent& c, const GroupDescriptor& g);

// Base ring element inverted by the problem: e_* for SL2n, M e for N.
GradedElement localizing_element(const LocalizationProblem& p);

LocalizedElement component_residue(const FixedComponent& c, const GroupDescriptor& g);

// pi_* for a twisted point on plain elements: TwistedPoint -> BN.
GradedElement twisted_pushforward(const GradedElement& x);

LocalizedElement push_to_base(const LocalizedElement& x, const FixedComponent& c, const GroupDescriptor& g);

// Component residues are evaluated in parallel when OpenMP is available.
ResidueResult bott_residue(const LocalizationProblem& p);
ResidueResult bott_residue_serial(const LocalizationProblem& p);

LocalizationProblem build_projective_problem(int dim, int n, const FieldDescriptor& field);
LocalizationProblem build_grassmannian_problem(int m, int ambient, int n, const FieldDescriptor& field);

}  // namespace wloc
