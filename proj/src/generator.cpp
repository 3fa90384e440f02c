#include "tcgen/generator.hpp"

#include <algorithm>
#include <optional>

#include "tcgen/errors.hpp"

namespace tcgen {

namespace {

// Endpoint position on the refined line, as in rangeset.cpp.
struct Pos {
  Q01 v;
  int t;
  auto operator<=>(const Pos&) const = default;
};

// An occupied stretch of [0,1]: either a piece's domain or an override point.
struct Item {
  Pos lo, hi;
  bool is_override;
  std::size_t index;  // into pieces_ or the override order
  Q01 boundary_value_low;   // f approached/attained at lo.v from inside
  Q01 boundary_value_high;  // f approached/attained at hi.v from inside
};

Pos succ(const Pos& p) { return {p.v, p.t + 1}; }

}  // namespace

PiecewiseMonotone PiecewiseMonotone::build(std::vector<AffinePiece> pieces,
                                           std::map<Q01, Q01> overrides) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const AffinePiece& p = pieces[i];
    if (p.slope <= 0) throw BuildError("piece slope must be positive");
    if (p.domain.is_point()) {
      throw BuildError("point-sized piece domain at " + p.domain.lo().value.str() +
                       "; use an override instead");
    }
    BigRational vlo = p.at(p.domain.lo().value);
    BigRational vhi = p.at(p.domain.hi().value);
    if (vlo < 0 || vhi > 1) {
      throw BuildError("piece on " + p.domain.str() + " maps outside [0,1]");
    }
    items.push_back({{p.domain.lo().value, p.domain.lo().closed() ? 0 : +1},
                     {p.domain.hi().value, p.domain.hi().closed() ? 0 : -1},
                     false,
                     i,
                     Q01::from_rational(vlo),
                     Q01::from_rational(vhi)});
  }
  std::size_t oi = 0;
  for (const auto& [x, v] : overrides) {
    items.push_back({{x, 0}, {x, 0}, true, oi++, v, v});
  }
  if (items.empty()) throw BuildError("generator needs at least one piece");

  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.lo < b.lo; });

  if (items.front().lo != Pos{Q01::zero(), 0}) {
    throw BuildError("domain coverage does not start at 0");
  }
  for (std::size_t i = 1; i < items.size(); ++i) {
    Pos expected = succ(items[i - 1].hi);
    if (items[i].lo < expected) {
      throw BuildError("overlapping domains at boundary " + items[i].lo.v.str());
    }
    if (items[i].lo > expected) {
      throw BuildError("coverage gap at boundary " + items[i - 1].hi.v.str());
    }
  }
  if (items.back().hi != Pos{Q01::one(), 0}) {
    throw BuildError("domain coverage does not end at 1");
  }

  // Strict increase across each boundary. Exactly one of the two adjacent
  // items attains the boundary point, so equality of the attained value and
  // the other side's limit keeps x < y => f(x) < f(y).
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1].boundary_value_high > items[i].boundary_value_low) {
      throw BuildError("monotonicity violation at boundary " + items[i].lo.v.str() + ": " +
                       items[i - 1].boundary_value_high.str() + " > " +
                       items[i].boundary_value_low.str());
    }
  }

  std::sort(pieces.begin(), pieces.end(), [](const AffinePiece& a, const AffinePiece& b) {
    return a.domain.lo().value < b.domain.lo().value;
  });
  return PiecewiseMonotone(std::move(pieces), std::move(overrides));
}

Q01 PiecewiseMonotone::eval(const Q01& x) const {
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  for (const AffinePiece& p : pieces_) {
    if (p.domain.contains(x)) return Q01::from_rational(p.at(x));
  }
  throw InternalError("generator does not cover " + x.str());
}

Q01 PiecewiseMonotone::limit(const Q01& x, Side side) const {
  if (side == Side::left) {
    if (x == Q01::zero()) return Q01::zero();  // f(0-) = 0
    for (const AffinePiece& p : pieces_) {
      if (p.domain.lo().value < x && x <= p.domain.hi().value) {
        return Q01::from_rational(p.at(x));
      }
    }
  } else {
    if (x == Q01::one()) return Q01::one();  // f(1+) = 1
    for (const AffinePiece& p : pieces_) {
      if (p.domain.lo().value <= x && x < p.domain.hi().value) {
        return Q01::from_rational(p.at(x));
      }
    }
  }
  throw InternalError("no adjacent piece for limit at " + x.str());
}

RangeSet PiecewiseMonotone::range() const {
  std::vector<GenInterval> images;
  for (const AffinePiece& p : pieces_) {
    images.push_back(GenInterval::make(Q01::from_rational(p.at(p.domain.lo().value)),
                                       p.domain.lo().closed(),
                                       Q01::from_rational(p.at(p.domain.hi().value)),
                                       p.domain.hi().closed()));
  }
  for (const auto& [x, v] : overrides_) images.push_back(GenInterval::point(v));
  return RangeSet::normalize(std::move(images));
}

RangeSet PiecewiseMonotone::range_over(const GenInterval& dom) const {
  RangeSet window = RangeSet::single(dom);
  std::vector<GenInterval> images;
  for (const AffinePiece& p : pieces_) {
    RangeSet clipped = RangeSet::single(p.domain).intersect(window);
    for (const GenInterval& part : clipped.parts()) {
      images.push_back(GenInterval::make(Q01::from_rational(p.at(part.lo().value)),
                                         part.lo().closed(),
                                         Q01::from_rational(p.at(part.hi().value)),
                                         part.hi().closed()));
    }
  }
  for (const auto& [x, v] : overrides_) {
    if (dom.contains(x)) images.push_back(GenInterval::point(v));
  }
  return RangeSet::normalize(std::move(images));
}

Q01 PiecewiseMonotone::pseudo_inverse(const Q01& y) const {
  // {x : f(x) < y} is an initial segment; walk items upward and track its sup.
  Q01 result = Q01::zero();
  auto precedes = [](const Q01& x, const GenInterval& dom) {
    return x < dom.lo().value || (x == dom.lo().value && !dom.lo().closed());
  };
  auto ov = overrides_.begin();
  for (const AffinePiece& p : pieces_) {
    while (ov != overrides_.end() && precedes(ov->first, p.domain)) {
      if (ov->second < y) result = ov->first;
      ++ov;
    }
    BigRational vhi = p.at(p.domain.hi().value);
    bool whole = p.domain.hi().closed() ? vhi < y.value() : vhi <= y.value();
    if (whole) {
      result = p.domain.hi().value;
      continue;
    }
    if (p.at(p.domain.lo().value) < y.value()) {
      result = Q01::from_rational((y.value() - p.intercept) / p.slope);
    }
    return result;
  }
  while (ov != overrides_.end()) {
    if (ov->second < y) result = ov->first;
    ++ov;
  }
  return result;
}

std::vector<JumpInfo> PiecewiseMonotone::jumps() const {
  std::vector<Q01> candidates;
  for (const AffinePiece& p : pieces_) {
    candidates.push_back(p.domain.lo().value);
    candidates.push_back(p.domain.hi().value);
  }
  for (const auto& [x, v] : overrides_) candidates.push_back(x);
  candidates.push_back(Q01::one());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<JumpInfo> out;
  for (const Q01& x : candidates) {
    if (x == Q01::zero()) continue;
    Q01 l = limit(x, Side::left);
    Q01 r = limit(x, Side::right);
    if (l < r) out.push_back({x, l, eval(x), r});
  }
  return out;
}

AssociatedPair PiecewiseMonotone::associated_pair() const {
  RangeSet m = range();
  Q01 f0 = eval(Q01::zero());
  Q01 f0p = limit(Q01::zero(), Side::right);

  AssociatedPair pair;
  pair.has_zero_gap = f0p > Q01::zero();
  pair.entries.push_back({Q01::zero(), f0p, f0, pair.has_zero_gap});
  if (m == RangeSet::full()) {
    pair.entries.push_back({Q01::one(), Q01::one(), Q01::one(), true});
  } else {
    for (const JumpInfo& j : jumps()) {
      pair.entries.push_back({j.left, j.right, j.value, true});
    }
  }
  pair.validate_against(m);
  return pair;
}

}  // namespace tcgen
