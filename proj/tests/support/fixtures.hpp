#pragma once

// Instances used across the test suites, built directly against the library.

#include "tcgen/genop.hpp"

namespace tcgen::testing {

inline Q01 q(long long num, long long den = 1) { return Q01::of(num, den); }

inline GenInterval iv(Q01 lo, bool lo_closed, Q01 hi, bool hi_closed) {
  return GenInterval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

inline AffinePiece piece(Q01 lo, bool lo_closed, Q01 hi, bool hi_closed, BigRational slope,
                         BigRational intercept) {
  return {iv(std::move(lo), lo_closed, std::move(hi), hi_closed), std::move(slope),
          std::move(intercept)};
}

// f = 4x/5 on [0,1/2], (2x+1)/3 on (1/2,1]; T* = (<0,1/2,Sp>, <1/2,1,Sp>).
inline GeneratedOp example_3_1() {
  auto f = PiecewiseMonotone::build({
      piece(q(0), true, q(1, 2), true, BigRational(4, 5), BigRational(0)),
      piece(q(1, 2), false, q(1), true, BigRational(2, 3), BigRational(1, 3)),
  });
  auto s = OrdinalSumConorm::build({{q(0), q(1, 2), ArchKind::probabilistic_sum},
                                    {q(1, 2), q(1), ArchKind::probabilistic_sum}});
  return {std::move(f), std::move(s)};
}

// f = (x+3)/6 on [0,1), f(1) = 1; T* = (<1/2,1,Sp>).
inline GeneratedOp example_4_2_1() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), true, q(1), false, BigRational(1, 6), BigRational(1, 2))},
      {{q(1), q(1)}});
  auto s = OrdinalSumConorm::build({{q(1, 2), q(1), ArchKind::probabilistic_sum}});
  return {std::move(f), std::move(s)};
}

// f = x/2; T* = (<0,1/2,SL>).
inline GeneratedOp example_4_2_2() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), true, q(1), true, BigRational(1, 2), BigRational(0))});
  auto s = OrdinalSumConorm::build({{q(0), q(1, 2), ArchKind::lukasiewicz}});
  return {std::move(f), std::move(s)};
}

// f = x/5 on [0,1/2), f(1/2) = 1/5, x/10 + 1/4 on (1/2,1]; T* = (<0,1,SL>).
// Triples {(0,1/10,1/5), (3/10,7/20,7/20)}; D7 fails at (1,1,2).
inline GeneratedOp no_instance() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), true, q(1, 2), false, BigRational(1, 5), BigRational(0)),
       piece(q(1, 2), false, q(1), true, BigRational(1, 10), BigRational(1, 4))},
      {{q(1, 2), q(1, 5)}});
  auto s = OrdinalSumConorm::build({{q(0), q(1), ArchKind::lukasiewicz}});
  return {std::move(f), std::move(s)};
}

// f = (1+x)/4; T* = (<0,1,SL>). f(0+) = 1/4 is not idempotent; T == 1.
inline GeneratedOp non_idempotent_instance() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), true, q(1), true, BigRational(1, 4), BigRational(1, 4))});
  auto s = OrdinalSumConorm::build({{q(0), q(1), ArchKind::lukasiewicz}});
  return {std::move(f), std::move(s)};
}

// Realizes M = {1/100} u (1/4,1/2] u (2/3,5/6] u (7/8,8/9]; T* = (<1/4,1,Sp>).
inline GeneratedOp def_4_1_example_1() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), false, q(1, 3), false, BigRational(3, 4), BigRational(1, 4)),
       piece(q(1, 3), false, q(2, 3), false, BigRational(1, 2), BigRational(1, 2)),
       piece(q(2, 3), false, q(1), false, BigRational(1, 24), BigRational(61, 72))},
      {{q(0), q(1, 100)}, {q(1, 3), q(1, 2)}, {q(2, 3), q(5, 6)}, {q(1), q(8, 9)}});
  auto s = OrdinalSumConorm::build({{q(1, 4), q(1), ArchKind::probabilistic_sum}});
  return {std::move(f), std::move(s)};
}

// Realizes M = [0,1/3] u (1/2,1]; not in triple normal form (b_2 = 1).
inline GeneratedOp def_4_1_example_3() {
  auto f = PiecewiseMonotone::build(
      {piece(q(0), true, q(1, 2), true, BigRational(2, 3), BigRational(0)),
       piece(q(1, 2), false, q(1), true, BigRational(1), BigRational(0))});
  auto s = OrdinalSumConorm::build({{q(0), q(1), ArchKind::probabilistic_sum}});
  return {std::move(f), std::move(s)};
}

}  // namespace tcgen::testing
