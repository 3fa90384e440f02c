#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcgen/conditions.hpp"
#include "tcgen/genop.hpp"

namespace tcgen {

// Deterministic probe points: the uniform grid i/D plus every structurally
// interesting point of the instance (piece boundaries, overrides, gap
// endpoints, summand endpoints and their pull-backs through the
// pseudo-inverse).
struct ProbeSet {
  std::vector<Q01> points;  // sorted, unique
  int grid_denominator = 0;
  std::size_t critical_count = 0;
};

ProbeSet build_probes(const GeneratedOp& g, int denominator);

struct Counterexample {
  Q01 x, y, z;
  Q01 lhs;  // T(T(x,y),z)
  Q01 rhs;  // T(x,T(y,z))
};

struct AxiomReport {
  bool t1_commutative = true;
  bool t3_monotone = true;
  bool s4_boundary = true;
  bool t2_not_falsified = true;  // grid evidence only, never proof
  std::optional<Counterexample> t2_counterexample;
  std::optional<std::pair<Q01, Q01>> t1_witness;
  std::optional<Q01> s4_witness;
  std::size_t probe_count = 0;
  std::size_t triples_checked = 0;
};

// Exhaustive exact T1/T3/S4 over pairs and T2 over all probe triples; the
// first counterexample in lexicographic probe order is recorded.
AxiomReport axiom_check(const GeneratedOp& g, const ProbeSet& probes);

struct BorderWitness {
  Q01 x, y;
  std::string direction;
  Q01 limit;
  Q01 required;
};

struct BorderReport {
  bool continuous = true;       // all corner limits match the value on the border
  bool s4_boundary = true;      // T(x,0) = x = T(0,x) on probes
  bool prop31_consistent = true;  // analytic result <=> f(0+) idempotent
  std::optional<BorderWitness> witness;
};

BorderReport border_continuity_check(const GeneratedOp& g, const ProbeSet& probes);

struct CancellationWitness {
  Q01 x, y, z;
  Q01 value;
};

struct CancellationReport {
  // conditional law inside each summand, capped at the carrier top
  bool within_summands = true;
  // global conditional law S(x,y) = S(x,z) < 1 => y = z
  bool global_conditional = true;
  std::optional<CancellationWitness> witness;
};

CancellationReport cancellation_check(const OrdinalSumConorm& s, const ProbeSet& probes);

struct OtimesCounterexample {
  Q01 x, y, z;
  Q01 lhs, rhs;
};

struct WitnessSearchResult {
  std::optional<OtimesCounterexample> found;
  std::size_t evaluated = 0;
};

// Directed search for an exact associativity counterexample of (x), seeded
// from the failed condition's witness geometry, then fixed-seed random
// sampling. Deterministic: candidates are tried in a fixed order and the
// first violation found is returned.
WitnessSearchResult witness_search(const GeneratedOp& g, const ConditionReport& failed,
                                   std::size_t budget);

struct OracleReport {
  AxiomReport axioms;
  BorderReport border;
  std::optional<WitnessSearchResult> search;
};

}  // namespace tcgen
