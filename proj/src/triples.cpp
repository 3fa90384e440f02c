#include "tcgen/triples.hpp"

#include <sstream>

#include "tcgen/errors.hpp"
#include "tcgen/rangeset.hpp"

namespace tcgen {

TripleSequence::TripleSequence(std::vector<Triple> triples, Q01 f0, Q01 f0plus)
    : triples_(std::move(triples)), f0_(std::move(f0)), f0plus_(std::move(f0plus)) {
  validate_triples(triples_, f0_, f0plus_);
}

Q01 TripleSequence::d(std::size_t i) const {
  return i < triples_.size() ? triples_[i].a : Q01::one();
}

RangeSet TripleSequence::reconstruct() const {
  std::vector<GenInterval> parts;
  parts.push_back(GenInterval::point(f0_));
  for (const Triple& t : triples_) {
    parts.push_back(GenInterval::open(t.a, t.b));
    parts.push_back(GenInterval::point(t.c));
  }
  return RangeSet::normalize(std::move(parts));
}

std::string TripleSequence::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << triples_[i].a << "," << triples_[i].b << "," << triples_[i].c << ")";
  }
  os << "}";
  return os.str();
}

void validate_triples(const std::vector<Triple>& triples, const Q01& f0, const Q01& f0plus) {
  if (triples.empty()) throw BuildError("triple sequence must be non-empty");
  if (triples.front().a != f0plus) {
    throw BuildError("a_1 = " + triples.front().a.str() + " differs from f(0+) = " + f0plus.str());
  }
  if (f0 > f0plus) throw BuildError("f(0) exceeds f(0+)");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (!(t.a < t.b)) throw BuildError("a_i < b_i violated at i=" + std::to_string(i + 1));
    if (!(t.b <= t.c)) throw BuildError("b_i <= c_i violated at i=" + std::to_string(i + 1));
    if (i + 1 < triples.size()) {
      const Triple& n = triples[i + 1];
      if (!(t.b < n.a)) throw BuildError("b_i < a_{i+1} violated at i=" + std::to_string(i + 1));
      if (!(t.c <= n.a)) throw BuildError("c_i <= a_{i+1} violated at i=" + std::to_string(i + 1));
    }
  }
  if (triples.size() >= 2 && !(triples.back().b < Q01::one())) {
    throw BuildError("b_n < 1 violated at n=" + std::to_string(triples.size()));
  }
}

}  // namespace tcgen
