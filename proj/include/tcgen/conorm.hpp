#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcgen/rangeset.hpp"
#include "tcgen/rational.hpp"

namespace tcgen {

// Built-in Archimedean summand kinds. probabilistic_sum (x+y-xy) is strict,
// lukasiewicz (min{x+y,1}) is nilpotent. New kinds plug in through
// scaled_eval/section breakpoints below without touching the image logic.
enum class ArchKind : std::uint8_t { probabilistic_sum, lukasiewicz };

bool is_strict(ArchKind kind);
std::string arch_kind_name(ArchKind kind);
std::optional<ArchKind> arch_kind_from_name(std::string_view name);

struct Summand {
  Q01 lo, hi;  // lo < hi
  ArchKind kind;
  bool covers(const Q01& x) const { return lo <= x && x <= hi; }
};

// A continuous t-conorm given as an ordinal sum of Archimedean summands on
// pairwise disjoint open carriers, max outside.
class OrdinalSumConorm {
 public:
  static OrdinalSumConorm build(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }

  Q01 eval(const Q01& x, const Q01& y) const;

  // [0,1] minus the union of open carriers.
  RangeSet idempotents() const;
  bool is_idempotent(const Q01& x) const { return idempotents().member(x); }

  // n-fold power x, x·x, ...; n >= 1.
  Q01 power(const Q01& x, int n) const;
  // First n <= n_max with power(x,n) == 1 for x in (0,1), if any.
  std::optional<int> nilpotency_index(const Q01& x, int n_max) const;

  // Exact image {T*(u,c) : u in I}. Endpoint kinds are decided per affine
  // segment of the section: strictly increasing segments keep their openness,
  // plateau segments collapse to closed points.
  RangeSet section_image(const GenInterval& i, const Q01& c) const;

  // Exact image {T*(x,y) : x in A, y in B}; empty when A or B is empty.
  RangeSet set_image(const RangeSet& a, const RangeSet& b) const;

 private:
  explicit OrdinalSumConorm(std::vector<Summand> s) : summands_(std::move(s)) {}
  bool corner_attained_(const GenInterval& ia, const GenInterval& ib, bool at_sup,
                        const Q01& corner_value) const;
  std::vector<Summand> summands_;  // sorted by lo
};

}  // namespace tcgen
