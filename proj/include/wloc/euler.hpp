#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wloc/coh_rings.hpp"

namespace wloc {

// Sym^{m_1}(F_{i_1}) (x) ... listed in tensor order; factor indices are 1-based.
struct SL2nIrrep {
  std::vector<std::pair<int, int>> factors;  // (factor, exponent)

  static SL2nIrrep sym(int factor, int m) { return {{{factor, m}}}; }
  static SL2nIrrep fundamental(int factor) { return sym(factor, 1); }
  static SL2nIrrep tensor(int i, int j) { return {{{i, 1}, {j, 1}}}; }

  Integer rank() const;
  std::string to_string() const;

  friend auto operator<=>(const SL2nIrrep&, const SL2nIrrep&) = default;
};

struct NIrrep {
  enum class Kind { Rho, Rho0, Rho0Minus };
  Kind kind = Kind::Rho;
  int m = 1;  // only for Rho

  static NIrrep rho(int m) { return {Kind::Rho, m}; }
  static NIrrep rho0() { return {Kind::Rho0, 0}; }
  static NIrrep rho0_minus() { return {Kind::Rho0Minus, 0}; }

  int rank() const { return kind == Kind::Rho ? 2 : 1; }
  std::string to_string() const;

  friend auto operator<=>(const NIrrep&, const NIrrep&) = default;
};

enum class GroupKind { SL2n, N };

struct GroupSpec {
  GroupKind kind = GroupKind::SL2n;
  int n = 1;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Formal sum of irreducibles with positive multiplicities.
struct RepSum {
  GroupSpec group;
  std::vector<std::pair<SL2nIrrep, long>> sl2n_terms;
  std::vector<std::pair<NIrrep, long>> n_terms;

  static RepSum sl2n(int n) { return {{GroupKind::SL2n, n}, {}, {}}; }
  static RepSum n_group() { return {{GroupKind::N, 1}, {}, {}}; }

  RepSum& add(const SL2nIrrep& irrep, long mult = 1);
  RepSum& add(const NIrrep& irrep, long mult = 1);

  bool empty() const { return sl2n_terms.empty() && n_terms.empty(); }
  Integer rank() const;
  // Same irreducibles with the same total multiplicities.
  bool same_as(const RepSum& other) const;
  std::string to_string() const;
};

RepSum operator+(const RepSum& x, const RepSum& y);

enum class Determinacy { Exact, UpToSign, SquareOnly };

std::string determinacy_name(Determinacy d);

struct EulerClassValue {
  std::optional<GradedElement> value;  // absent when only the square is known
  Determinacy determinacy = Determinacy::Exact;
  GradedElement known_square;
};

// m(m-2)...3*1 for odd m
Integer double_factorial(int m);

// Presentation holding Euler classes for the group: BSL2n(n) or BN.
Presentation euler_presentation(const GroupSpec& group, const FieldDescriptor& field);

EulerClassValue euler_sl2n_irrep(const SL2nIrrep& irrep, int n, const FieldDescriptor& field);
EulerClassValue euler_n_irrep(const NIrrep& irrep, const FieldDescriptor& field);
EulerClassValue euler_rep(const RepSum& rep, const FieldDescriptor& field);
GradedElement generic_euler(const RepSum& rep, const FieldDescriptor& field);

}  // namespace wloc
