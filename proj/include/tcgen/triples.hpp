#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcgen/rational.hpp"

namespace tcgen {

struct Triple {
  Q01 a, b, c;
};

// The normal form of a range set: M = {f(0)} u U_i ((a_i,b_i) u {c_i}) with
// a_1 = f(0+), a_i < b_i <= c_i, b_i < a_{i+1}, c_i <= a_{i+1}, and b_n < 1
// whenever n >= 2. Indices are 1-based throughout.
class TripleSequence {
 public:
  TripleSequence(std::vector<Triple> triples, Q01 f0, Q01 f0plus);

  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& at(std::size_t i) const { return triples_[i - 1]; }  // 1-based
  const Q01& f0() const { return f0_; }
  const Q01& f0plus() const { return f0plus_; }

  // d_i = a_{i+1} when i+1 is an index, otherwise 1.
  Q01 d(std::size_t i) const;

  // Reconstructs {f0} u U((a_i,b_i) u {c_i}).
  class RangeSet reconstruct() const;

  std::string str() const;

 private:
  std::vector<Triple> triples_;
  Q01 f0_;
  Q01 f0plus_;
};

// Checks every ordering constraint of the normal form; throws BuildError
// with the first violated constraint.
void validate_triples(const std::vector<Triple>& triples, const Q01& f0, const Q01& f0plus);

}  // namespace tcgen
