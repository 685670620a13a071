#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wloc/field.hpp"

namespace wloc {

using Matrix = std::vector<std::vector<FieldElement>>;

struct QuadraticForm {
  FieldDescriptor field;
  std::vector<FieldElement> entries;

  std::size_t rank() const { return entries.size(); }
};

// mult copies of <value>; mult > 0 in every stored representative.
struct WittEntry {
  FieldElement value;
  Integer mult;

  friend bool operator==(const WittEntry& x, const WittEntry& y) {
    return x.value == y.value && x.mult == y.mult;
  }
};

// Class of W(F_q) for a finite field, or of W(C): rank parity and whether the
// signed discriminant is a non-square.
struct FiniteWittInvariant {
  bool odd = false;
  bool disc_nonsquare = false;

  bool is_zero() const { return !odd && !disc_nonsquare; }
  friend bool operator==(const FiniteWittInvariant&, const FiniteWittInvariant&) = default;
};

// Invariants of a class in W(Q): signature, second residues at odd primes (only
// nonzero ones stored) and the dyadic residue in W(F_2) = Z/2.
struct RationalInvariants {
  Integer signature;
  std::map<Integer, FiniteWittInvariant> residues;
  bool dyadic = false;

  friend bool operator==(const RationalInvariants&, const RationalInvariants&) = default;
};

class WittClass {
 public:
  WittClass() = default;
  explicit WittClass(FieldDescriptor field) : field_(std::move(field)) {}

  // Canonicalizes an arbitrary list of entries.
  static WittClass from_entries(const FieldDescriptor& field, std::vector<WittEntry> entries);
  static WittClass unit(const FieldDescriptor& field, const FieldElement& c);

  const FieldDescriptor& field() const { return field_; }
  const std::vector<WittEntry>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  Integer rank() const;
  bool rank_is_even() const;

  // Expanded diagonal representative; refuses ranks above max_rank.
  QuadraticForm representative(std::size_t max_rank = 4096) const;

  std::string to_string() const;

  friend bool operator==(const WittClass& x, const WittClass& y);

 private:
  FieldDescriptor field_;
  std::vector<WittEntry> entries_;
};

WittClass operator+(const WittClass& x, const WittClass& y);
WittClass operator-(const WittClass& x, const WittClass& y);
WittClass operator-(const WittClass& x);
WittClass operator*(const WittClass& x, const WittClass& y);
WittClass operator*(const Integer& n, const WittClass& x);

// Gram-Schmidt over a field of characteristic != 2.
QuadraticForm diagonalize(const Matrix& gram, const FieldDescriptor& field);

WittClass witt_class(const QuadraticForm& form);

WittClass integer_class(const Integer& n, const FieldDescriptor& field);

// True iff multiplication by n has a nontrivial kernel on W(field).
bool is_zero_divisor_int(const Integer& n, const FieldDescriptor& field);

// Nilpotent iff every signature vanishes (iff even rank when there is no ordering).
bool is_nilpotent(const WittClass& x);

// Signatures at the orderings of the field (empty for non-real fields).
std::vector<Integer> signatures(const WittClass& x);

RationalInvariants rational_invariants(const WittClass& x);
FiniteWittInvariant finite_invariant(const WittClass& x);

// All classes of W(F_q) (q = p or p^2) or W(C).
std::vector<WittClass> enumerate_finite_witt(const FieldDescriptor& field);

// Exact quotient c / d in W(k) when one is found among units, integer classes
// and small candidates; nullopt otherwise. Always verified by multiplication.
std::optional<WittClass> exact_quotient(const WittClass& c, const WittClass& d);

bool is_unit(const WittClass& x);

}  // namespace wloc
