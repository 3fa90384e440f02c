#pragma once

#include <cstddef>

#include "tcgen/conorm.hpp"
#include "tcgen/generator.hpp"
#include "tcgen/rangeset.hpp"
#include "tcgen/triples.hpp"

namespace tcgen {

enum class Approach { below, at, above };

// The generated operation T(x,y) = f^(-1)(T*(f(x),f(y))) together with the
// cached range M = Ran(f) and its associated pair.
class GeneratedOp {
 public:
  GeneratedOp(PiecewiseMonotone f, OrdinalSumConorm s);

  const PiecewiseMonotone& f() const { return f_; }
  const OrdinalSumConorm& conorm() const { return s_; }
  const RangeSet& range() const { return m_; }
  const AssociatedPair& pair() const { return pair_; }
  Q01 f0() const { return pair_.f0(); }
  Q01 f0plus() const { return pair_.f0plus(); }

  Q01 eval(const Q01& x, const Q01& y) const;

  // x (x) y = F_M(T*(x,y)) on M x M; throws DomainError off M.
  Q01 otimes(const Q01& x, const Q01& y) const;

  // Exact limit of T approaching (x,y) coordinate-wise: each coordinate is
  // taken from below, at, or above its value, reducing to one-sided limits of
  // f because T* and the pseudo-inverse are continuous. Out-of-domain
  // approaches use the conventions f(0-) = 0 and f(1+) = 1.
  Q01 limit(const Q01& x, Approach ax, const Q01& y, Approach ay) const;

  enum class Direction { x_left, x_right, y_left, y_right };
  Q01 one_sided_limit(const Q01& x, const Q01& y, Direction dir) const;

 private:
  PiecewiseMonotone f_;
  OrdinalSumConorm s_;
  RangeSet m_;
  AssociatedPair pair_;
};

struct OplusResult {
  std::size_t k;  // 1-based index
  Q01 m_ij;       // min{T*(a_i,b_j), T*(a_j,b_i)}
};

// i (+) j = max{k : a_k <= T*(a_i,a_j)}; i, j are 1-based.
OplusResult oplus(const TripleSequence& triples, const OrdinalSumConorm& s, std::size_t i,
                  std::size_t j);

}  // namespace tcgen
