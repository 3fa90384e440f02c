#pragma once

#include <map>
#include <vector>

#include "tcgen/rangeset.hpp"
#include "tcgen/rational.hpp"

namespace tcgen {

enum class Side { left, right };

// One affine piece value(x) = slope*x + intercept on a positive-length
// subinterval of [0,1]; slope > 0 and the image must stay inside [0,1].
struct AffinePiece {
  GenInterval domain;
  BigRational slope;
  BigRational intercept;

  BigRational at(const Q01& x) const { return slope * x.value() + intercept; }
};

struct JumpInfo {
  Q01 x;      // jump location in (0,1]
  Q01 left;   // f(x-)
  Q01 value;  // f(x)
  Q01 right;  // f(x+), with f(1+) = 1
};

// Strictly increasing piecewise-affine generator. Piece domains together with
// the override points partition [0,1] exactly; overrides model isolated
// redefinitions such as f(1) = 1.
class PiecewiseMonotone {
 public:
  static PiecewiseMonotone build(std::vector<AffinePiece> pieces,
                                 std::map<Q01, Q01> overrides = {});

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::map<Q01, Q01>& overrides() const { return overrides_; }

  Q01 eval(const Q01& x) const;

  // One-sided limit with the conventions f(0-) = 0 and f(1+) = 1.
  Q01 limit(const Q01& x, Side side) const;

  // Ran(f), canonical.
  RangeSet range() const;
  // Image of f restricted to a subinterval of [0,1].
  RangeSet range_over(const GenInterval& dom) const;

  // sup{x : f(x) < y} with sup(empty) = 0; closed form per piece.
  Q01 pseudo_inverse(const Q01& y) const;

  // All x in (0,1] with f(x-) < f(x+). The jump at 0 (when f(0+) > 0) is
  // carried by the associated pair's k=0 entry instead.
  std::vector<JumpInfo> jumps() const;

  // Canonical pair from the jumps plus the stipulated k=0 entry;
  // for Ran(f) = [0,1] the degenerate pair ({[1,1]}, {1}).
  AssociatedPair associated_pair() const;

 private:
  PiecewiseMonotone(std::vector<AffinePiece> pieces, std::map<Q01, Q01> overrides)
      : pieces_(std::move(pieces)), overrides_(std::move(overrides)) {}
  std::vector<AffinePiece> pieces_;  // sorted by domain
  std::map<Q01, Q01> overrides_;
};

}  // namespace tcgen
