#include "tcgen/rangeset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tcgen/errors.hpp"

namespace tcgen {

namespace {

// Position of an interval endpoint on the refined line: tag -1 sits just
// below the value, 0 on it, +1 just above. A lower bound occupies tag 0
// (closed) or +1 (open); an upper bound tag 0 (closed) or -1 (open).
struct Pos {
  Q01 v;
  int t;
  auto operator<=>(const Pos&) const = default;
};

Pos lo_pos(const Bound& b) { return {b.value, b.closed() ? 0 : +1}; }
Pos hi_pos(const Bound& b) { return {b.value, b.closed() ? 0 : -1}; }

Bound bound_from_lo(const Pos& p) { return {p.v, p.t == 0 ? BoundKind::closed : BoundKind::open}; }
Bound bound_from_hi(const Pos& p) { return {p.v, p.t == 0 ? BoundKind::closed : BoundKind::open}; }

// True when [..hi1] and [lo2..] overlap or are adjacent with no point missing.
bool mergeable(const Pos& hi1, const Pos& lo2) {
  if (lo2.v < hi1.v) return true;
  if (lo2.v > hi1.v) return false;
  return !(hi1.t == -1 && lo2.t == +1);
}

std::optional<GenInterval> interval_between(const Pos& lo, const Pos& hi) {
  if (lo > hi) return std::nullopt;
  if (lo.v == hi.v && (lo.t != 0 || hi.t != 0)) return std::nullopt;
  return GenInterval(bound_from_lo(lo), bound_from_hi(hi));
}

}  // namespace

GenInterval::GenInterval(Bound lo, Bound hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.value > hi_.value ||
      (lo_.value == hi_.value && !(lo_.closed() && hi_.closed()))) {
    throw BuildError("empty interval: " + str());
  }
}

GenInterval GenInterval::make(Q01 lo, bool lo_closed, Q01 hi, bool hi_closed) {
  return GenInterval({std::move(lo), lo_closed ? BoundKind::closed : BoundKind::open},
                     {std::move(hi), hi_closed ? BoundKind::closed : BoundKind::open});
}

GenInterval GenInterval::closed(Q01 lo, Q01 hi) { return make(std::move(lo), true, std::move(hi), true); }
GenInterval GenInterval::open(Q01 lo, Q01 hi) { return make(std::move(lo), false, std::move(hi), false); }
GenInterval GenInterval::point(Q01 at) { return closed(at, at); }

bool GenInterval::contains(const Q01& x) const {
  return lo_pos(lo_) <= Pos{x, 0} && Pos{x, 0} <= hi_pos(hi_);
}

std::string GenInterval::str() const {
  if (is_point()) return "{" + lo_.value.str() + "}";
  std::string s = lo_.closed() ? "[" : "(";
  s += lo_.value.str() + "," + hi_.value.str();
  s += hi_.closed() ? "]" : ")";
  return s;
}

RangeSet RangeSet::normalize(std::vector<GenInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const GenInterval& a, const GenInterval& b) {
    return lo_pos(a.lo()) < lo_pos(b.lo()) ||
           (lo_pos(a.lo()) == lo_pos(b.lo()) && hi_pos(a.hi()) < hi_pos(b.hi()));
  });
  RangeSet out;
  for (const GenInterval& iv : raw) {
    if (!out.parts_.empty() && mergeable(hi_pos(out.parts_.back().hi()), lo_pos(iv.lo()))) {
      GenInterval& last = out.parts_.back();
      if (hi_pos(iv.hi()) > hi_pos(last.hi())) {
        last = GenInterval(last.lo(), iv.hi());
      }
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

RangeSet RangeSet::single(const GenInterval& iv) { return normalize({iv}); }
RangeSet RangeSet::point(const Q01& at) { return single(GenInterval::point(at)); }

RangeSet RangeSet::points(const std::vector<Q01>& pts) {
  std::vector<GenInterval> raw;
  raw.reserve(pts.size());
  for (const Q01& p : pts) raw.push_back(GenInterval::point(p));
  return normalize(std::move(raw));
}

RangeSet RangeSet::full() { return single(GenInterval::closed(Q01::zero(), Q01::one())); }

bool RangeSet::member(const Q01& x) const {
  for (const GenInterval& p : parts_) {
    if (p.contains(x)) return true;
    if (p.lo().value > x) break;
  }
  return false;
}

RangeSet RangeSet::complement() const {
  RangeSet out;
  Pos cursor{Q01::zero(), 0};
  for (const GenInterval& p : parts_) {
    Pos lo = lo_pos(p.lo());
    // Gap before this part: [cursor, just-before-lo].
    Pos gap_hi{lo.v, lo.t - 1};
    if (auto iv = interval_between(cursor, gap_hi)) out.parts_.push_back(*iv);
    Pos hi = hi_pos(p.hi());
    cursor = Pos{hi.v, hi.t + 1};
  }
  if (auto iv = interval_between(cursor, Pos{Q01::one(), 0})) out.parts_.push_back(*iv);
  return out;
}

RangeSet RangeSet::unite(const RangeSet& o) const {
  std::vector<GenInterval> raw = parts_;
  raw.insert(raw.end(), o.parts_.begin(), o.parts_.end());
  return normalize(std::move(raw));
}

RangeSet RangeSet::intersect(const RangeSet& o) const {
  std::vector<GenInterval> raw;
  for (const GenInterval& a : parts_) {
    for (const GenInterval& b : o.parts_) {
      if (b.lo().value > a.hi().value) break;
      Pos lo = std::max(lo_pos(a.lo()), lo_pos(b.lo()));
      Pos hi = std::min(hi_pos(a.hi()), hi_pos(b.hi()));
      if (auto iv = interval_between(lo, hi)) raw.push_back(*iv);
    }
  }
  return normalize(std::move(raw));
}

RangeSet RangeSet::difference(const RangeSet& o) const { return intersect(o.complement()); }

RangeSet RangeSet::acc_set(AccSide side) const {
  if (side == AccSide::both) {
    return acc_set(AccSide::left).intersect(acc_set(AccSide::right));
  }
  std::vector<GenInterval> raw;
  for (const GenInterval& p : parts_) {
    if (p.is_point()) continue;
    if (side == AccSide::left) {
      raw.push_back(GenInterval::make(p.lo().value, false, p.hi().value, true));
    } else {
      raw.push_back(GenInterval::make(p.lo().value, true, p.hi().value, false));
    }
  }
  return normalize(std::move(raw));
}

Q01 RangeSet::sup_value() const { return parts_.empty() ? Q01::zero() : parts_.back().hi().value; }
Q01 RangeSet::inf_value() const { return parts_.empty() ? Q01::one() : parts_.front().lo().value; }

std::optional<Q01> RangeSet::min_member() const {
  if (parts_.empty() || !parts_.front().lo().closed()) return std::nullopt;
  return parts_.front().lo().value;
}

std::optional<Q01> RangeSet::max_member() const {
  if (parts_.empty() || !parts_.back().hi().closed()) return std::nullopt;
  return parts_.back().hi().value;
}

std::string RangeSet::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    os << parts_[i].str();
  }
  return os.str();
}

RangeSet AssociatedPair::c_set() const {
  std::vector<Q01> cs;
  for (const GapEntry& e : entries) {
    if (e.in_K) cs.push_back(e.c);
  }
  return RangeSet::points(cs);
}

std::vector<GapEntry> AssociatedPair::nonzero_entries() const {
  return {entries.begin() + 1, entries.end()};
}

void AssociatedPair::validate_against(const RangeSet& m) const {
  if (entries.empty()) throw BuildError("associated pair has no k=0 slot");
  for (const GapEntry& e : entries) {
    if (!e.in_K) continue;
    if (e.b > e.c || e.c > e.d) {
      throw BuildError("gap representative outside [b,d]: c=" + e.c.str());
    }
    RangeSet hit = m.intersect(RangeSet::single(GenInterval::closed(e.b, e.d)));
    if (hit != RangeSet::point(e.c)) {
      throw BuildError("gap [" + e.b.str() + "," + e.d.str() + "] meets M in " + hit.str() +
                       ", expected exactly {" + e.c.str() + "}");
    }
  }
}

Q01 f_cap(const RangeSet& m, const AssociatedPair& pair, const Q01& x) {
  if (m.member(x)) return x;
  for (const GapEntry& e : pair.entries) {
    if (!e.in_K) continue;
    if (e.b <= x && x <= e.d) return e.c;
  }
  throw BuildError("f_cap: " + x.str() + " outside M and every gap (inconsistent pair)");
}

Q01 f_cap_supinf(const RangeSet& m, const Q01& x) {
  RangeSet below = m.intersect(RangeSet::single(GenInterval::closed(Q01::zero(), x)));
  RangeSet above = m.intersect(RangeSet::single(GenInterval::closed(x, Q01::one())));
  Q01 s = below.empty() ? Q01::zero() : below.sup_value();
  Q01 i = above.empty() ? Q01::one() : above.inf_value();
  RangeSet hit = m.intersect(RangeSet::single(GenInterval::closed(s, i)));
  if (hit.parts().size() != 1 || !hit.parts().front().is_point()) {
    throw BuildError("f_cap_supinf: M ∩ [" + s.str() + "," + i.str() + "] = " + hit.str() +
                     " is not a single point");
  }
  return hit.parts().front().lo().value;
}

std::ostream& operator<<(std::ostream& os, const RangeSet& s) { return os << s.str(); }

}  // namespace tcgen
