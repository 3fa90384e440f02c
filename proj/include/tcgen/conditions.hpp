#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tcgen/genop.hpp"
#include "tcgen/rangeset.hpp"
#include "tcgen/triples.hpp"

namespace tcgen {

enum class ConditionId {
  D0, D1, D2, D3, D4, D5, D6, D7, D8, D8PRIME,
  HYP_IDEMPOTENT, HYP_SUMMAND, HYP_A0,
  EQ45, EQ46, COR_I, COR_II, COR_III,
};

std::string condition_name(ConditionId id);

struct IndexTriple {
  std::size_t i, j, k;  // 1-based
  bool operator==(const IndexTriple&) const = default;
};

using Witness = std::variant<std::monostate, RangeSet, IndexTriple, std::vector<Q01>>;

struct ConditionReport {
  ConditionId condition;
  bool holds;
  Witness witness;  // non-empty whenever holds is false
  std::string notes;
};

enum class Conclusion { border_continuous_tconorm, not_tconorm, hypotheses_not_met };
enum class Branch { f0plus_positive, f0plus_zero };

std::string conclusion_name(Conclusion c);
std::string branch_name(Branch b);

struct Verdict {
  bool hypotheses_ok;
  std::vector<ConditionReport> hypotheses;  // HYP_IDEMPOTENT, HYP_SUMMAND, HYP_A0
  std::vector<ConditionReport> conditions;  // D0..D5 diagnostics, D6, then D7/D8 when run
  std::optional<TripleSequence> triples;
  Conclusion conclusion;
  Branch branch;
};

// The three Theorem hypotheses: f(0+) idempotent for T*, a single summand
// containing f((0,1)), and membership of Ran(f) in A0.
std::vector<ConditionReport> check_hypotheses(const GeneratedOp& g);

// D0 through D5; `which` must be one of those six.
ConditionReport check_D(const GeneratedOp& g, ConditionId which);

enum class DecomposeReason {
  ok,
  f0_not_least,             // f(0) is not the least element of M
  not_open_above_f0plus,    // no (f(0+), e] part right above f(0+)
  a1_mismatch,              // first open part does not start at f(0+)
  closed_left_part,         // a part closed on the left without a pending c
  isolated_point_misplaced, // point with no open part awaiting its c
  missing_final_c,          // last open part never received its c
  bn_reaches_one,           // b_n < 1 (n >= 2) violated
  ordering_violation,       // a parsed sequence breaks a triple ordering constraint
  infinite_index_unsupported,  // reserved: I = N cannot arise from finite range sets
};

std::string decompose_reason_name(DecomposeReason r);

struct DecomposeResult {
  std::optional<TripleSequence> triples;
  DecomposeReason reason = DecomposeReason::ok;
  std::string detail;
  bool ok() const { return triples.has_value(); }
};

DecomposeResult decompose_triples(const GeneratedOp& g);
DecomposeResult decompose_triples(const RangeSet& m, const Q01& f0, const Q01& f0plus);

enum class D7Mode { disjunction, eq45_46 };

// (D7) in the requested reading; both readings are evaluated and must agree.
ConditionReport check_D7(const TripleSequence& triples, const OrdinalSumConorm& s, D7Mode mode);

// (D8) over {c_i : i in I u {0}} when include_c0, else (D8') over {c_i : i in I}.
ConditionReport check_D8(const GeneratedOp& g, const TripleSequence& triples, bool include_c0);

Verdict theorem_verdict(const GeneratedOp& g);

// Corollary items (i)-(iii) as explicit set computations; (i) and (ii)
// together must match check_D7 and (iii) must match check_D8.
std::vector<ConditionReport> corollary_check(const GeneratedOp& g, const TripleSequence& triples);

}  // namespace tcgen
