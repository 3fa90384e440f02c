#include "tcgen/conditions.hpp"

#include <algorithm>
#include <sstream>

#include "tcgen/errors.hpp"

namespace tcgen {

std::string condition_name(ConditionId id) {
  switch (id) {
    case ConditionId::D0: return "D0";
    case ConditionId::D1: return "D1";
    case ConditionId::D2: return "D2";
    case ConditionId::D3: return "D3";
    case ConditionId::D4: return "D4";
    case ConditionId::D5: return "D5";
    case ConditionId::D6: return "D6";
    case ConditionId::D7: return "D7";
    case ConditionId::D8: return "D8";
    case ConditionId::D8PRIME: return "D8PRIME";
    case ConditionId::HYP_IDEMPOTENT: return "HYP_IDEMPOTENT";
    case ConditionId::HYP_SUMMAND: return "HYP_SUMMAND";
    case ConditionId::HYP_A0: return "HYP_A0";
    case ConditionId::EQ45: return "EQ45";
    case ConditionId::EQ46: return "EQ46";
    case ConditionId::COR_I: return "COR_I";
    case ConditionId::COR_II: return "COR_II";
    case ConditionId::COR_III: return "COR_III";
  }
  return "?";
}

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::border_continuous_tconorm: return "border_continuous_tconorm";
    case Conclusion::not_tconorm: return "not_tconorm";
    case Conclusion::hypotheses_not_met: return "hypotheses_not_met";
  }
  return "?";
}

std::string branch_name(Branch b) {
  return b == Branch::f0plus_positive ? "f0plus_positive" : "f0plus_zero";
}

std::string decompose_reason_name(DecomposeReason r) {
  switch (r) {
    case DecomposeReason::ok: return "ok";
    case DecomposeReason::f0_not_least: return "f0_not_least";
    case DecomposeReason::not_open_above_f0plus: return "not_open_above_f0plus";
    case DecomposeReason::a1_mismatch: return "a1_mismatch";
    case DecomposeReason::closed_left_part: return "closed_left_part";
    case DecomposeReason::isolated_point_misplaced: return "isolated_point_misplaced";
    case DecomposeReason::missing_final_c: return "missing_final_c";
    case DecomposeReason::bn_reaches_one: return "bn_reaches_one";
    case DecomposeReason::ordering_violation: return "ordering_violation";
    case DecomposeReason::infinite_index_unsupported: return "infinite_index_unsupported";
  }
  return "?";
}

namespace {

// The sets D1-D5 are phrased over: M, C = {c_k : k in K}, M\C, M\{1}, and
// BC = U_{k in K\{0}} [b_k, c_k].
struct ConditionSets {
  RangeSet m, m_minus_1, c, c_minus_f0, m_minus_c, bc, d_below_1;
};

ConditionSets make_sets(const GeneratedOp& g) {
  ConditionSets s;
  s.m = g.range();
  s.m_minus_1 = s.m.difference(RangeSet::point(Q01::one()));
  s.c = g.pair().c_set();
  s.c_minus_f0 = s.c.difference(RangeSet::point(g.f0()));
  s.m_minus_c = s.m.difference(s.c);
  std::vector<GenInterval> bc;
  std::vector<Q01> ds;
  for (const GapEntry& e : g.pair().nonzero_entries()) {
    if (!e.in_K) continue;
    bc.push_back(GenInterval::closed(e.b, e.c));
    if (e.d < Q01::one()) ds.push_back(e.d);
  }
  s.bc = RangeSet::normalize(std::move(bc));
  s.d_below_1 = RangeSet::points(ds);
  return s;
}

ConditionReport emptiness_report(ConditionId id, const RangeSet& intersection) {
  ConditionReport r{id, intersection.empty(), {}, ""};
  if (!r.holds) {
    r.witness = intersection;
    r.notes = "non-empty intersection " + intersection.str();
  }
  return r;
}

// Brute-force closure and associativity of otimes over a finite carrier.
ConditionReport semigroup_report(ConditionId id, const GeneratedOp& g,
                                 const std::vector<Q01>& carrier) {
  ConditionReport r{id, true, {}, ""};
  for (const Q01& x : carrier) {
    for (const Q01& y : carrier) {
      Q01 v = g.otimes(x, y);
      if (std::find(carrier.begin(), carrier.end(), v) == carrier.end()) {
        r.holds = false;
        r.witness = std::vector<Q01>{x, y, v};
        r.notes = x.str() + " (x) " + y.str() + " = " + v.str() + " escapes the carrier";
        return r;
      }
    }
  }
  for (const Q01& x : carrier) {
    for (const Q01& y : carrier) {
      for (const Q01& z : carrier) {
        Q01 lhs = g.otimes(g.otimes(x, y), z);
        Q01 rhs = g.otimes(x, g.otimes(y, z));
        if (lhs != rhs) {
          r.holds = false;
          r.witness = std::vector<Q01>{x, y, z};
          r.notes = "((x)(y))(z) = " + lhs.str() + " but (x)((y)(z)) = " + rhs.str();
          return r;
        }
      }
    }
  }
  return r;
}

std::vector<Q01> set_points(const RangeSet& s) {
  std::vector<Q01> pts;
  for (const GenInterval& p : s.parts()) {
    if (!p.is_point()) throw InternalError("expected a finite point set, got " + s.str());
    pts.push_back(p.lo().value);
  }
  return pts;
}

}  // namespace

std::vector<ConditionReport> check_hypotheses(const GeneratedOp& g) {
  std::vector<ConditionReport> out;

  Q01 f0p = g.f0plus();
  {
    ConditionReport r{ConditionId::HYP_IDEMPOTENT, g.conorm().is_idempotent(f0p), {}, ""};
    r.notes = "f(0+) = " + f0p.str() + (r.holds ? " is idempotent" : " is not idempotent");
    if (!r.holds) r.witness = std::vector<Q01>{f0p};
    out.push_back(r);
  }
  {
    RangeSet inner = g.f().range_over(GenInterval::open(Q01::zero(), Q01::one()));
    ConditionReport r{ConditionId::HYP_SUMMAND, false, {}, ""};
    for (const Summand& s : g.conorm().summands()) {
      if (inner.subset_of(RangeSet::single(GenInterval::open(s.lo, s.hi)))) {
        r.holds = true;
        r.notes = "f((0,1)) inside summand (" + s.lo.str() + "," + s.hi.str() + ")";
        break;
      }
    }
    if (!r.holds) {
      r.witness = inner;
      r.notes = "no summand carrier contains f((0,1)) = " + inner.str();
    }
    out.push_back(r);
  }
  {
    RangeSet acc = g.range().complement().acc_set(RangeSet::AccSide::right);
    bool bad = acc.member(f0p);
    ConditionReport r{ConditionId::HYP_A0, !bad, {}, ""};
    r.notes = bad ? "f(0+) is a right accumulation point of M^c"
                  : "some (f(0+), e] lies inside M";
    if (bad) r.witness = std::vector<Q01>{f0p};
    out.push_back(r);
  }
  return out;
}

ConditionReport check_D(const GeneratedOp& g, ConditionId which) {
  ConditionSets s = make_sets(g);
  const OrdinalSumConorm& t = g.conorm();
  switch (which) {
    case ConditionId::D0: {
      ConditionReport r{ConditionId::D0, true, {}, ""};
      std::size_t k = 0;
      for (const GapEntry& e : g.pair().nonzero_entries()) {
        ++k;
        if (e.d < Q01::one() && !(e.c < e.d)) {
          r.holds = false;
          r.witness = std::vector<Q01>{e.c, e.d};
          r.notes = "gap k=" + std::to_string(k) + " has c_k = d_k = " + e.d.str() + " < 1";
          return r;
        }
      }
      return r;
    }
    case ConditionId::D1:
      return emptiness_report(ConditionId::D1,
                              t.set_image(s.m_minus_1, s.c_minus_f0).intersect(s.m_minus_c));
    case ConditionId::D2:
      return emptiness_report(ConditionId::D2,
                              t.set_image(s.m_minus_1, s.bc).intersect(s.m_minus_c));
    case ConditionId::D3:
      return emptiness_report(ConditionId::D3,
                              t.set_image(s.m, s.m_minus_c).intersect(s.d_below_1));
    case ConditionId::D4:
      return semigroup_report(ConditionId::D4, g, set_points(s.c));
    case ConditionId::D5:
      return emptiness_report(
          ConditionId::D5, t.set_image(s.m_minus_1.unite(s.bc), s.bc).intersect(s.m_minus_c));
    default:
      throw DomainError("check_D handles D0..D5 only");
  }
}

DecomposeResult decompose_triples(const GeneratedOp& g) {
  return decompose_triples(g.range(), g.f0(), g.f0plus());
}

DecomposeResult decompose_triples(const RangeSet& m, const Q01& f0, const Q01& f0plus) {
  auto fail = [](DecomposeReason r, std::string detail) {
    return DecomposeResult{std::nullopt, r, std::move(detail)};
  };
  if (!m.member(f0) || m.inf_value() < f0) {
    return fail(DecomposeReason::f0_not_least, "f(0) = " + f0.str() + " is not min M");
  }
  RangeSet rest = m.difference(RangeSet::point(f0));

  // Parse rest as U_i ((a_i,b_i) u {c_i}): open-left parts begin triples,
  // each open-right part waits for its c as an isolated point or as the
  // closed left end of the next part.
  std::vector<Triple> triples;
  bool pending_c = false;
  for (const GenInterval& part : rest.parts()) {
    if (part.is_point()) {
      if (!pending_c) {
        return fail(DecomposeReason::isolated_point_misplaced,
                    "isolated point {" + part.lo().value.str() + "} has no open part before it");
      }
      triples.back().c = part.lo().value;
      pending_c = false;
      continue;
    }
    if (part.lo().closed()) {
      if (!pending_c) {
        return fail(DecomposeReason::closed_left_part,
                    "part " + part.str() + " is closed on the left");
      }
      triples.back().c = part.lo().value;
      pending_c = false;
    }
    triples.push_back({part.lo().value, part.hi().value, part.hi().value});
    if (!part.hi().closed()) pending_c = true;
  }
  if (pending_c) {
    return fail(DecomposeReason::missing_final_c,
                "open part (" + triples.back().a.str() + "," + triples.back().b.str() +
                    ") has no representative c");
  }
  if (triples.empty()) {
    return fail(DecomposeReason::not_open_above_f0plus, "no open part above f(0)");
  }
  if (triples.front().a != f0plus) {
    return fail(DecomposeReason::a1_mismatch, "first part starts at " + triples.front().a.str() +
                                                  ", expected f(0+) = " + f0plus.str());
  }
  if (triples.size() >= 2 && !(triples.back().b < Q01::one())) {
    return fail(DecomposeReason::bn_reaches_one,
                "b_n < 1 (n >= 2) violated at n=" + std::to_string(triples.size()));
  }
  DecomposeResult out;
  try {
    out.triples = TripleSequence(std::move(triples), f0, f0plus);
  } catch (const BuildError& e) {
    return fail(DecomposeReason::ordering_violation, e.what());
  }
  if (out.triples->reconstruct() != m) {
    throw InternalError("decompose: reconstruction mismatch for " + m.str());
  }
  return out;
}

namespace {

bool d7_disjunction_at(const TripleSequence& tr, const OrdinalSumConorm& s, std::size_t i,
                       std::size_t j, std::size_t k) {
  const Q01& ak = tr.at(k).a;
  const Q01& bk = tr.at(k).b;
  Q01 taa = s.eval(tr.at(i).a, tr.at(j).a);
  if (ak <= taa) {
    Q01 m = min(s.eval(tr.at(i).a, tr.at(j).b), s.eval(tr.at(j).a, tr.at(i).b));
    if (bk <= m) return true;
  }
  return s.eval(tr.at(i).c, tr.at(j).c) <= ak;
}

bool d7_eq45_46_at(const TripleSequence& tr, const OrdinalSumConorm& s, std::size_t i,
                   std::size_t j, std::size_t k) {
  Q01 m = min(s.eval(tr.at(i).a, tr.at(j).b), s.eval(tr.at(j).a, tr.at(i).b));
  Q01 tcc = s.eval(tr.at(i).c, tr.at(j).c);
  const Q01& ak = tr.at(k).a;
  const Q01& bk = tr.at(k).b;
  // Eq 4.5: (m_{i,j}, T*(c_i,c_j)) ∩ (a_k,b_k) = ∅
  if (m < tcc && ak < bk) {
    RangeSet left = RangeSet::single(GenInterval::open(m, tcc));
    if (!left.intersect(RangeSet::single(GenInterval::open(ak, bk))).empty()) return false;
  }
  // Eq 4.6: a_k not in (T*(a_i,a_j), T*(b_i,b_j))
  Q01 taa = s.eval(tr.at(i).a, tr.at(j).a);
  Q01 tbb = s.eval(tr.at(i).b, tr.at(j).b);
  return !(taa < ak && ak < tbb);
}

}  // namespace

ConditionReport check_D7(const TripleSequence& triples, const OrdinalSumConorm& s, D7Mode mode) {
  std::optional<IndexTriple> first_disjunction, first_eq;
  for (std::size_t i = 1; i <= triples.size(); ++i) {
    for (std::size_t j = 1; j <= triples.size(); ++j) {
      for (std::size_t k = 1; k <= triples.size(); ++k) {
        if (!first_disjunction && !d7_disjunction_at(triples, s, i, j, k)) {
          first_disjunction = IndexTriple{i, j, k};
        }
        if (!first_eq && !d7_eq45_46_at(triples, s, i, j, k)) {
          first_eq = IndexTriple{i, j, k};
        }
      }
    }
  }
  if (first_disjunction.has_value() != first_eq.has_value()) {
    throw InternalError("D7 readings disagree: disjunction says " +
                        std::string(first_disjunction ? "fail" : "hold") +
                        ", Eqs. 4.5/4.6 say " + std::string(first_eq ? "fail" : "hold"));
  }
  ConditionReport r{ConditionId::D7, true, {}, ""};
  auto violation = mode == D7Mode::disjunction ? first_disjunction : first_eq;
  if (violation) {
    r.holds = false;
    r.witness = *violation;
    std::ostringstream os;
    os << "violated at (i,j,k) = (" << violation->i << "," << violation->j << ","
       << violation->k << ")";
    r.notes = os.str();
  }
  return r;
}

ConditionReport check_D8(const GeneratedOp& g, const TripleSequence& triples, bool include_c0) {
  std::vector<Q01> carrier;
  if (include_c0) carrier.push_back(triples.f0());
  for (const Triple& t : triples.triples()) carrier.push_back(t.c);
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  ConditionReport r =
      semigroup_report(include_c0 ? ConditionId::D8 : ConditionId::D8PRIME, g, carrier);
  return r;
}

Verdict theorem_verdict(const GeneratedOp& g) {
  Verdict v;
  v.hypotheses = check_hypotheses(g);
  v.hypotheses_ok = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                                [](const ConditionReport& r) { return r.holds; });
  v.branch = g.f0plus() > Q01::zero() ? Branch::f0plus_positive : Branch::f0plus_zero;

  for (ConditionId id : {ConditionId::D0, ConditionId::D1, ConditionId::D2, ConditionId::D3,
                         ConditionId::D4, ConditionId::D5}) {
    v.conditions.push_back(check_D(g, id));
  }

  DecomposeResult dec = decompose_triples(g);
  {
    ConditionReport d6{ConditionId::D6, dec.ok(), {}, ""};
    d6.notes = dec.ok() ? "triples " + dec.triples->str()
                        : decompose_reason_name(dec.reason) + ": " + dec.detail;
    if (!dec.ok()) d6.witness = g.range();
    v.conditions.push_back(d6);
  }
  v.triples = dec.triples;

  if (!v.hypotheses_ok) {
    v.conclusion = Conclusion::hypotheses_not_met;
    return v;
  }
  bool all = dec.ok();
  if (dec.ok()) {
    ConditionReport d7 = check_D7(*dec.triples, g.conorm(), D7Mode::disjunction);
    ConditionReport d8 = check_D8(g, *dec.triples, v.branch == Branch::f0plus_positive);
    all = d7.holds && d8.holds;
    v.conditions.push_back(std::move(d7));
    v.conditions.push_back(std::move(d8));
  }
  v.conclusion = all ? Conclusion::border_continuous_tconorm : Conclusion::not_tconorm;
  return v;
}

std::vector<ConditionReport> corollary_check(const GeneratedOp& g, const TripleSequence& tr) {
  const OrdinalSumConorm& s = g.conorm();
  std::vector<GenInterval> mids, lows, gaps;
  std::vector<Q01> as;
  for (std::size_t i = 1; i <= tr.size(); ++i) {
    as.push_back(tr.at(i).a);
    gaps.push_back(GenInterval::open(tr.at(i).a, tr.at(i).b));
    for (std::size_t j = 1; j <= tr.size(); ++j) {
      Q01 m = min(s.eval(tr.at(i).a, tr.at(j).b), s.eval(tr.at(j).a, tr.at(i).b));
      Q01 tcc = s.eval(tr.at(i).c, tr.at(j).c);
      if (m < tcc) mids.push_back(GenInterval::open(m, tcc));
      Q01 taa = s.eval(tr.at(i).a, tr.at(j).a);
      Q01 tbb = s.eval(tr.at(i).b, tr.at(j).b);
      if (taa < tbb) lows.push_back(GenInterval::open(taa, tbb));
    }
  }
  RangeSet gap_union = RangeSet::normalize(std::move(gaps));

  std::vector<ConditionReport> out;
  out.push_back(emptiness_report(ConditionId::COR_I,
                                 RangeSet::normalize(std::move(mids)).intersect(gap_union)));
  out.push_back(emptiness_report(
      ConditionId::COR_II, RangeSet::normalize(std::move(lows)).intersect(RangeSet::points(as))));
  bool include_c0 = g.f0plus() > Q01::zero();
  ConditionReport third = check_D8(g, tr, include_c0);
  third.condition = ConditionId::COR_III;
  out.push_back(std::move(third));

  // Cross-checks against the D7/D8 deciders.
  ConditionReport d7 = check_D7(tr, s, D7Mode::eq45_46);
  if ((out[0].holds && out[1].holds) != d7.holds) {
    throw InternalError("corollary (i)&(ii) disagree with D7");
  }
  ConditionReport d8 = check_D8(g, tr, include_c0);
  if (out[2].holds != d8.holds) throw InternalError("corollary (iii) disagrees with D8");
  return out;
}

}  // namespace tcgen
