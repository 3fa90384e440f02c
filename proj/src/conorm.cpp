#include "tcgen/conorm.hpp"

#include <algorithm>

#include "tcgen/errors.hpp"

namespace tcgen {

namespace {

// Scaled Archimedean evaluation on [lo,hi]^2, exact.
BigRational scaled_eval(const Summand& s, const BigRational& x, const BigRational& y) {
  BigRational lo = s.lo.value(), hi = s.hi.value();
  BigRational delta = hi - lo;
  switch (s.kind) {
    case ArchKind::probabilistic_sum:
      // lo + delta * Sp(u,v) with u=(x-lo)/delta, v=(y-lo)/delta
      return x + y - lo - (x - lo) * (y - lo) / delta;
    case ArchKind::lukasiewicz: {
      BigRational v = x + y - lo;
      return v > hi ? hi : v;
    }
  }
  throw InternalError("unknown summand kind");
}

}  // namespace

bool is_strict(ArchKind kind) { return kind == ArchKind::probabilistic_sum; }

std::string arch_kind_name(ArchKind kind) {
  return kind == ArchKind::probabilistic_sum ? "probabilistic_sum" : "lukasiewicz";
}

std::optional<ArchKind> arch_kind_from_name(std::string_view name) {
  if (name == "probabilistic_sum") return ArchKind::probabilistic_sum;
  if (name == "lukasiewicz") return ArchKind::lukasiewicz;
  return std::nullopt;
}

OrdinalSumConorm OrdinalSumConorm::build(std::vector<Summand> summands) {
  for (const Summand& s : summands) {
    if (!(s.lo < s.hi)) {
      throw BuildError("summand carrier [" + s.lo.str() + "," + s.hi.str() + "] is empty");
    }
  }
  std::sort(summands.begin(), summands.end(),
            [](const Summand& a, const Summand& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < summands.size(); ++i) {
    if (summands[i].lo < summands[i - 1].hi) {
      throw BuildError("summand carriers overlap at " + summands[i].lo.str());
    }
  }
  return OrdinalSumConorm(std::move(summands));
}

Q01 OrdinalSumConorm::eval(const Q01& x, const Q01& y) const {
  for (const Summand& s : summands_) {
    if (s.covers(x) && s.covers(y)) {
      return Q01::from_rational(scaled_eval(s, x.value(), y.value()));
    }
  }
  return max(x, y);
}

RangeSet OrdinalSumConorm::idempotents() const {
  std::vector<GenInterval> carriers;
  for (const Summand& s : summands_) {
    carriers.push_back(GenInterval::open(s.lo, s.hi));
  }
  return RangeSet::normalize(std::move(carriers)).complement();
}

Q01 OrdinalSumConorm::power(const Q01& x, int n) const {
  if (n < 1) throw DomainError("power: n must be >= 1");
  Q01 acc = x;
  for (int i = 2; i <= n; ++i) acc = eval(acc, x);
  return acc;
}

std::optional<int> OrdinalSumConorm::nilpotency_index(const Q01& x, int n_max) const {
  if (!(Q01::zero() < x && x < Q01::one())) return std::nullopt;
  Q01 acc = x;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) acc = eval(acc, x);
    if (acc == Q01::one()) return n;
    if (eval(acc, x) == acc) return std::nullopt;  // stuck at an idempotent below 1
  }
  return std::nullopt;
}

RangeSet OrdinalSumConorm::section_image(const GenInterval& i, const Q01& c) const {
  const Q01 lo = i.lo().value, hi = i.hi().value;
  if (i.is_point()) return RangeSet::point(eval(lo, c));

  // Cut the segment wherever the section u -> T*(u,c) can change form:
  // carrier boundaries, the max-regime switch at u = c, and Lukasiewicz caps.
  std::vector<Q01> cuts;
  auto add_cut = [&](const Q01& v) {
    if (lo < v && v < hi) cuts.push_back(v);
  };
  for (const Summand& s : summands_) {
    add_cut(s.lo);
    add_cut(s.hi);
    if (s.kind == ArchKind::lukasiewicz && s.covers(c)) {
      BigRational cap = s.hi.value() + s.lo.value() - c.value();
      if (cap >= 0 && cap <= 1) add_cut(Q01::from_rational(cap));
    }
  }
  add_cut(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<GenInterval> pieces;
  if (i.lo().closed()) pieces.push_back(GenInterval::point(lo));
  Q01 prev = lo;
  for (const Q01& v : cuts) {
    pieces.push_back(GenInterval::open(prev, v));
    pieces.push_back(GenInterval::point(v));
    prev = v;
  }
  pieces.push_back(GenInterval::open(prev, hi));
  if (i.hi().closed()) pieces.push_back(GenInterval::point(hi));

  std::vector<GenInterval> images;
  for (const GenInterval& p : pieces) {
    if (p.is_point()) {
      images.push_back(GenInterval::point(eval(p.lo().value, c)));
      continue;
    }
    // Uniform form on the open piece; the section is continuous, so the
    // endpoint evaluations are the one-sided limits.
    Q01 vlo = eval(p.lo().value, c);
    Q01 vhi = eval(p.hi().value, c);
    if (vlo == vhi) {
      images.push_back(GenInterval::point(vlo));  // plateau, value attained inside
    } else {
      images.push_back(GenInterval::open(vlo, vhi));
    }
  }
  return RangeSet::normalize(std::move(images));
}

RangeSet OrdinalSumConorm::set_image(const RangeSet& a, const RangeSet& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<GenInterval> images;
  for (const GenInterval& ia : a.parts()) {
    for (const GenInterval& ib : b.parts()) {
      // The image of ia x ib is an interval between the corner values; only
      // the endpoint kinds need attainment analysis.
      Q01 m = eval(ia.lo().value, ib.lo().value);
      Q01 mm = eval(ia.hi().value, ib.hi().value);
      if (m == mm) {
        images.push_back(GenInterval::point(m));
        continue;
      }
      bool lo_att = corner_attained_(ia, ib, /*at_sup=*/false, m);
      bool hi_att = corner_attained_(ia, ib, /*at_sup=*/true, mm);
      images.push_back(GenInterval::make(m, lo_att, mm, hi_att));
    }
  }
  return RangeSet::normalize(std::move(images));
}

// Decides whether the infimum (at_sup=false) or supremum value of T* over
// ia x ib is attained. Open corner coordinates are nudged inward by a step
// chosen strictly inside the first structurally-uniform cell, where the
// section along the probe direction is monotone and either constant or
// strictly off the corner value; a single exact evaluation then decides.
bool OrdinalSumConorm::corner_attained_(const GenInterval& ia, const GenInterval& ib,
                                        bool at_sup, const Q01& corner_value) const {
  const Bound& ba = at_sup ? ia.hi() : ia.lo();
  const Bound& bb = at_sup ? ib.hi() : ib.lo();
  bool move_a = !ba.closed();
  bool move_b = !bb.closed();
  if (!move_a && !move_b) return true;  // corner itself is in the rectangle

  const BigRational pa = ba.value.value();
  const BigRational pb = bb.value.value();
  const int dir = at_sup ? -1 : +1;
  const int moving = (move_a ? 1 : 0) + (move_b ? 1 : 0);

  std::vector<BigRational> dists;
  auto add = [&](const BigRational& d) {
    if (d > 0) dists.push_back(d);
  };
  auto add_coord_cuts = [&](const BigRational& p) {
    for (const Summand& s : summands_) {
      add(dir * (s.lo.value() - p));
      add(dir * (s.hi.value() - p));
    }
  };
  if (move_a) {
    add_coord_cuts(pa);
    add(BigRational(ia.hi().value.value() - ia.lo().value.value()));
  }
  if (move_b) {
    add_coord_cuts(pb);
    add(BigRational(ib.hi().value.value() - ib.lo().value.value()));
  }
  if (moving == 1) {
    // max-regime switch where the moving coordinate crosses the fixed one
    add(dir * (move_a ? pb - pa : pa - pb));
  }
  for (const Summand& s : summands_) {
    if (s.kind != ArchKind::lukasiewicz) continue;
    // cap boundary u+v = lo+hi along the probe direction
    BigRational num = dir * (s.lo.value() + s.hi.value() - pa - pb);
    add(num / moving);
  }
  BigRational step = *std::min_element(dists.begin(), dists.end()) / 2;

  BigRational nudge = BigRational(dir) * step;
  BigRational qa = move_a ? BigRational(pa + nudge) : pa;
  BigRational qb = move_b ? BigRational(pb + nudge) : pb;
  return eval(Q01::from_rational(qa), Q01::from_rational(qb)) == corner_value;
}

}  // namespace tcgen
