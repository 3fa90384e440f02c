#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcgen/rational.hpp"

namespace tcgen {

enum class BoundKind : std::uint8_t { open, closed };

struct Bound {
  Q01 value;
  BoundKind kind;
  bool closed() const { return kind == BoundKind::closed; }
  bool operator==(const Bound&) const = default;
};

// A nonempty generalized subinterval of [0,1]: positive length with any
// endpoint kinds, or a single point (both endpoints closed).
class GenInterval {
 public:
  GenInterval(Bound lo, Bound hi);  // throws BuildError on an empty shape

  static GenInterval make(Q01 lo, bool lo_closed, Q01 hi, bool hi_closed);
  static GenInterval closed(Q01 lo, Q01 hi);
  static GenInterval open(Q01 lo, Q01 hi);
  static GenInterval point(Q01 at);

  const Bound& lo() const { return lo_; }
  const Bound& hi() const { return hi_; }
  bool is_point() const { return lo_.value == hi_.value; }
  bool contains(const Q01& x) const;

  std::string str() const;
  bool operator==(const GenInterval&) const = default;

 private:
  Bound lo_, hi_;
};

// Canonical finite union of disjoint, non-mergeable generalized intervals.
// Two RangeSets are equal iff their part lists are identical.
class RangeSet {
 public:
  RangeSet() = default;  // empty set

  static RangeSet normalize(std::vector<GenInterval> raw);
  static RangeSet single(const GenInterval& iv);
  static RangeSet point(const Q01& at);
  static RangeSet points(const std::vector<Q01>& pts);
  static RangeSet full();

  bool empty() const { return parts_.empty(); }
  const std::vector<GenInterval>& parts() const { return parts_; }

  bool member(const Q01& x) const;
  RangeSet complement() const;
  RangeSet unite(const RangeSet& o) const;
  RangeSet intersect(const RangeSet& o) const;
  RangeSet difference(const RangeSet& o) const;
  bool subset_of(const RangeSet& o) const { return difference(o).empty(); }

  enum class AccSide { left, right, both };
  // Acc- / Acc+ / Acc0 of the set: each positive-length part <l,h> contributes
  // (l,h] on the left side and [l,h) on the right; points contribute nothing.
  RangeSet acc_set(AccSide side) const;

  // Endpoint values ignoring kinds; sup of empty = 0, inf of empty = 1.
  Q01 sup_value() const;
  Q01 inf_value() const;
  std::optional<Q01> min_member() const;  // least element if attained
  std::optional<Q01> max_member() const;

  std::string str() const;
  bool operator==(const RangeSet&) const = default;

 private:
  std::vector<GenInterval> parts_;
};

// One interval [b,d] of the associated pair together with its representative
// c in M. Zero-length entries (b == d) are bookkeeping only and are skipped
// by positive-length iterations.
struct GapEntry {
  Q01 b, d, c;
  bool in_K;  // whether the entry's index belongs to K
  bool positive_length() const { return b < d; }
};

// The pair (S,C) associated with M = Ran(f). entries[0] is always the
// stipulated k=0 slot [0, f(0+)] with c0 = f(0); it belongs to K exactly
// when f(0+) > 0 (has_zero_gap). Remaining entries come from jumps of f,
// sorted by b. For M = [0,1] the single K-entry is the degenerate [1,1].
struct AssociatedPair {
  std::vector<GapEntry> entries;
  bool has_zero_gap = false;

  const GapEntry& zero_entry() const { return entries.front(); }
  Q01 f0() const { return entries.front().c; }
  Q01 f0plus() const { return entries.front().d; }

  // {c_k : k in K} as a point set.
  RangeSet c_set() const;
  // Entries with k in K \ {0}.
  std::vector<GapEntry> nonzero_entries() const;

  // Checks [b_k,d_k] ∩ M == {c_k} for every K-entry; throws BuildError.
  void validate_against(const RangeSet& m) const;
};

// Range-collapse map: identity on M, gap representative c_k on [b_k,d_k]\{c_k}.
// Total on [0,1]; throws BuildError if x falls outside M and every gap.
Q01 f_cap(const RangeSet& m, const AssociatedPair& pair, const Q01& x);

// The sup/inf formulation of the same map: the unique element of
// M ∩ [sup([0,x] ∩ M), inf([x,1] ∩ M)], with sup ∅ = 0 and inf ∅ = 1.
Q01 f_cap_supinf(const RangeSet& m, const Q01& x);

std::ostream& operator<<(std::ostream& os, const RangeSet& s);

}  // namespace tcgen
