#include "tcgen/genop.hpp"

#include "tcgen/errors.hpp"

namespace tcgen {

GeneratedOp::GeneratedOp(PiecewiseMonotone f, OrdinalSumConorm s)
    : f_(std::move(f)), s_(std::move(s)), m_(f_.range()), pair_(f_.associated_pair()) {}

Q01 GeneratedOp::eval(const Q01& x, const Q01& y) const {
  return f_.pseudo_inverse(s_.eval(f_.eval(x), f_.eval(y)));
}

Q01 GeneratedOp::otimes(const Q01& x, const Q01& y) const {
  if (!m_.member(x)) throw DomainError("otimes: " + x.str() + " not in Ran(f)");
  if (!m_.member(y)) throw DomainError("otimes: " + y.str() + " not in Ran(f)");
  return f_cap(m_, pair_, s_.eval(x, y));
}

Q01 GeneratedOp::limit(const Q01& x, Approach ax, const Q01& y, Approach ay) const {
  auto arg = [this](const Q01& v, Approach a) {
    switch (a) {
      case Approach::below: return f_.limit(v, Side::left);
      case Approach::above: return f_.limit(v, Side::right);
      case Approach::at: break;
    }
    return f_.eval(v);
  };
  return f_.pseudo_inverse(s_.eval(arg(x, ax), arg(y, ay)));
}

Q01 GeneratedOp::one_sided_limit(const Q01& x, const Q01& y, Direction dir) const {
  switch (dir) {
    case Direction::x_left: return limit(x, Approach::below, y, Approach::at);
    case Direction::x_right: return limit(x, Approach::above, y, Approach::at);
    case Direction::y_left: return limit(x, Approach::at, y, Approach::below);
    case Direction::y_right: return limit(x, Approach::at, y, Approach::above);
  }
  throw InternalError("bad direction");
}

OplusResult oplus(const TripleSequence& triples, const OrdinalSumConorm& s, std::size_t i,
                  std::size_t j) {
  if (i < 1 || i > triples.size() || j < 1 || j > triples.size()) {
    throw DomainError("oplus: index out of range");
  }
  Q01 taa = s.eval(triples.at(i).a, triples.at(j).a);
  std::size_t k = 1;  // a_1 = f(0+) <= T*(a_i,a_j) always
  for (std::size_t t = triples.size(); t >= 1; --t) {
    if (triples.at(t).a <= taa) {
      k = t;
      break;
    }
  }
  Q01 m = min(s.eval(triples.at(i).a, triples.at(j).b), s.eval(triples.at(j).a, triples.at(i).b));
  return {k, m};
}

}  // namespace tcgen
