#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wloc/localization.hpp"

namespace wloc {

struct CheckRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;

  bool ok() const;
};

std::string format_table(const SuiteReport& report);

using Rng = std::mt19937_64;

// Random samples for the suites and for property tests.
FieldElement random_unit(const FieldDescriptor& field, Rng& rng);
WittClass random_witt(const FieldDescriptor& field, Rng& rng, int max_rank = 3);
GradedElement random_element(const Presentation& pres, Rng& rng, int max_terms = 3, int max_exponent = 3);

// Representation counts of a diagonal form over F_p: N(t) = #{v : q(v) = t}
// for t = 0, 1 and the least non-residue.
std::vector<long> representation_counts(const std::vector<long>& diag, long p);

// Compares every diagonal form of rank <= max_rank over {1, non-residue}
// with its canonical representative padded by hyperbolic planes, by counts.
struct WittFpOutcome {
  long p = 0;
  std::size_t forms = 0;
  std::vector<std::string> mismatches;
};

WittFpOutcome witt_fp_sweep(long p, int max_rank);
WittFpOutcome witt_fp_sweep_serial(long p, int max_rank);

SuiteReport verify_witt_fp(const std::vector<long>& primes, int max_rank);

// Finite base fields are enumerated exhaustively, infinite ones sampled.
SuiteReport verify_lam(const QuadExtContext& ctx, std::size_t sample_size, std::uint64_t seed);

// Ring axioms on random triples plus the defining relations.
SuiteReport verify_ring_laws(const FieldDescriptor& field, const Rational& a, std::size_t triples, std::uint64_t seed);

// Equivariant degrees of projective spaces and Grassmannians.
SuiteReport verify_degree_table(int max_n, const FieldDescriptor& field);

}  // namespace wloc
