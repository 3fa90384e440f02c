#include "tcgen/oracle.hpp"

#include <algorithm>
#include <random>

namespace tcgen {

ProbeSet build_probes(const GeneratedOp& g, int denominator) {
  if (denominator < 2) throw DomainError("probe denominator must be >= 2");
  std::vector<Q01> pts;
  auto push = [&](const Q01& v) { pts.push_back(v); };

  std::vector<Q01> critical;
  for (const AffinePiece& p : g.f().pieces()) {
    critical.push_back(p.domain.lo().value);
    critical.push_back(p.domain.hi().value);
  }
  for (const auto& [x, v] : g.f().overrides()) critical.push_back(x);
  for (const GapEntry& e : g.pair().entries) {
    if (!e.in_K) continue;
    critical.push_back(e.b);
    critical.push_back(e.c);
    critical.push_back(e.d);
  }
  for (const Summand& s : g.conorm().summands()) {
    critical.push_back(g.f().pseudo_inverse(s.lo));
    critical.push_back(g.f().pseudo_inverse(s.hi));
  }
  for (const Q01& c : critical) push(c);
  for (int i = 0; i <= denominator; ++i) push(Q01::of(i, denominator));

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  return {std::move(pts), denominator, critical.size()};
}

AxiomReport axiom_check(const GeneratedOp& g, const ProbeSet& probes) {
  AxiomReport r;
  const std::vector<Q01>& p = probes.points;
  r.probe_count = p.size();

  for (std::size_t i = 0; i < p.size() && r.s4_boundary; ++i) {
    if (g.eval(p[i], Q01::zero()) != p[i] || g.eval(Q01::zero(), p[i]) != p[i]) {
      r.s4_boundary = false;
      r.s4_witness = p[i];
    }
  }

  for (std::size_t i = 0; i < p.size() && r.t1_commutative; ++i) {
    for (std::size_t j = i + 1; j < p.size() && r.t1_commutative; ++j) {
      if (g.eval(p[i], p[j]) != g.eval(p[j], p[i])) {
        r.t1_commutative = false;
        r.t1_witness = {p[i], p[j]};
      }
    }
  }

  // T3 along consecutive probes; transitivity covers the rest.
  for (std::size_t i = 0; i < p.size() && r.t3_monotone; ++i) {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (g.eval(p[i], p[j]) > g.eval(p[i], p[j + 1])) {
        r.t3_monotone = false;
        break;
      }
    }
  }

  // T2 over all ordered triples; memoize the inner pair values.
  std::vector<Q01> pair_val(p.size() * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) pair_val[i * p.size() + j] = g.eval(p[i], p[j]);
  }
  for (std::size_t i = 0; i < p.size() && r.t2_not_falsified; ++i) {
    for (std::size_t j = 0; j < p.size() && r.t2_not_falsified; ++j) {
      const Q01& xy = pair_val[i * p.size() + j];
      for (std::size_t k = 0; k < p.size(); ++k) {
        ++r.triples_checked;
        Q01 lhs = g.eval(xy, p[k]);
        Q01 rhs = g.eval(p[i], pair_val[j * p.size() + k]);
        if (lhs != rhs) {
          r.t2_not_falsified = false;
          r.t2_counterexample = Counterexample{p[i], p[j], p[k], lhs, rhs};
          break;
        }
      }
    }
  }
  return r;
}

namespace {

struct Dir {
  Approach ax, ay;
  const char* name;
};

}  // namespace

BorderReport border_continuity_check(const GeneratedOp& g, const ProbeSet& probes) {
  BorderReport r;
  const Q01 zero = Q01::zero(), one = Q01::one();

  auto check_point = [&](const Q01& x, const Q01& y) {
    Q01 value = g.eval(x, y);
    for (Approach ax : {Approach::below, Approach::at, Approach::above}) {
      for (Approach ay : {Approach::below, Approach::at, Approach::above}) {
        if (ax == Approach::at && ay == Approach::at) continue;
        if (x == zero && ax == Approach::below) continue;  // outside the square
        if (x == one && ax == Approach::above) continue;
        if (y == zero && ay == Approach::below) continue;
        if (y == one && ay == Approach::above) continue;
        Q01 lim = g.limit(x, ax, y, ay);
        if (lim != value) {
          if (r.continuous) {
            auto dir_name = [](Approach a) {
              return a == Approach::below ? "-" : (a == Approach::above ? "+" : "=");
            };
            r.witness = BorderWitness{x, y, std::string(dir_name(ax)) + dir_name(ay), lim, value};
          }
          r.continuous = false;
          return;
        }
      }
    }
  };

  for (const Q01& t : probes.points) {
    if (!r.continuous) break;
    check_point(t, zero);
    check_point(t, one);
    check_point(zero, t);
    check_point(one, t);
  }
  for (const Q01& t : probes.points) {
    if (g.eval(t, zero) != t || g.eval(zero, t) != t) {
      r.s4_boundary = false;
      if (!r.witness) {
        r.witness = BorderWitness{t, zero, "S4", g.eval(t, zero), t};
      }
      break;
    }
  }

  bool analytic = r.continuous && r.s4_boundary;
  bool idempotent = g.conorm().is_idempotent(g.f0plus());
  r.prop31_consistent = analytic == idempotent;
  return r;
}

CancellationReport cancellation_check(const OrdinalSumConorm& s, const ProbeSet& probes) {
  CancellationReport r;
  const std::vector<Q01>& p = probes.points;

  for (const Summand& sm : s.summands()) {
    std::vector<Q01> inside;
    for (const Q01& v : p) {
      if (sm.lo < v && v < sm.hi) inside.push_back(v);
    }
    for (const Q01& x : inside) {
      for (std::size_t j = 0; j < inside.size(); ++j) {
        for (std::size_t k = j + 1; k < inside.size(); ++k) {
          Q01 vy = s.eval(x, inside[j]);
          if (vy == s.eval(x, inside[k]) && vy < sm.hi) {
            r.within_summands = false;
            r.witness = CancellationWitness{x, inside[j], inside[k], vy};
            return r;
          }
        }
      }
    }
  }

  for (const Q01& x : p) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        Q01 vy = s.eval(x, p[j]);
        if (vy == s.eval(x, p[k]) && vy < Q01::one()) {
          r.global_conditional = false;
          if (!r.witness) r.witness = CancellationWitness{x, p[j], p[k], vy};
          return r;
        }
      }
    }
  }
  return r;
}

WitnessSearchResult witness_search(const GeneratedOp& g, const ConditionReport& failed,
                                   std::size_t budget) {
  WitnessSearchResult out;
  if (failed.holds || budget == 0) return out;

  const RangeSet& m = g.range();

  // Candidate coordinates: every c_k, every gap endpoint that lies in M, and
  // dyadic nudges into the M-parts adjacent to the failed condition's
  // witness set (the proof constructions place violations near b_k, d_k and
  // just above f(0+)).
  std::vector<Q01> candidates;
  auto add = [&](const Q01& v) {
    if (m.member(v)) candidates.push_back(v);
  };
  auto add_near = [&](const Q01& v) {
    for (const GenInterval& part : m.parts()) {
      if (part.is_point()) continue;
      BigRational lo = part.lo().value.value(), hi = part.hi().value.value();
      if (v.value() < lo || v.value() > hi) continue;
      BigRational len = hi - lo;
      for (int k = 2; k <= 6; ++k) {
        BigRational d = len / (1 << k);
        add(clamp01(v.value() - d));
        add(clamp01(v.value() + d));
      }
    }
  };

  for (const GapEntry& e : g.pair().entries) {
    if (!e.in_K) continue;
    add(e.c);
    add(e.b);
    add(e.d);
    add_near(e.b);
    add_near(e.d);
  }
  add(g.f0plus());
  add_near(g.f0plus());
  for (const GenInterval& part : m.parts()) {
    add(part.lo().value);
    add(part.hi().value);
    if (!part.is_point()) {
      BigRational lo = part.lo().value.value(), hi = part.hi().value.value();
      for (int k = 1; k <= 5; ++k) {
        BigRational d = (hi - lo) / (1 << k);
        add(clamp01(lo + d));
        add(clamp01(hi - d));
      }
    }
  }
  if (const RangeSet* ws = std::get_if<RangeSet>(&failed.witness)) {
    for (const GenInterval& part : ws->parts()) {
      add_near(part.lo().value);
      add_near(part.hi().value);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto try_triple = [&](const Q01& x, const Q01& y, const Q01& z) -> bool {
    ++out.evaluated;
    Q01 lhs = g.otimes(g.otimes(x, y), z);
    Q01 rhs = g.otimes(x, g.otimes(y, z));
    if (lhs != rhs) {
      out.found = OtimesCounterexample{x, y, z, lhs, rhs};
      return true;
    }
    return false;
  };

  for (const Q01& x : candidates) {
    for (const Q01& y : candidates) {
      for (const Q01& z : candidates) {
        if (out.evaluated >= budget) return out;
        if (try_triple(x, y, z)) return out;
      }
    }
  }

  // Fixed-seed random phase over the positive-length parts of M.
  std::mt19937_64 rng(0x7c93a11dULL);
  std::vector<GenInterval> fat;
  for (const GenInterval& part : m.parts()) {
    if (!part.is_point()) fat.push_back(part);
  }
  if (fat.empty()) return out;
  auto random_member = [&]() {
    const GenInterval& part = fat[rng() % fat.size()];
    BigRational lo = part.lo().value.value(), hi = part.hi().value.value();
    long long den = 1 + static_cast<long long>(rng() % 4096);
    BigRational num(static_cast<long long>(rng() % (den + 1)), den);
    BigRational v = lo + (hi - lo) * num;
    Q01 q = clamp01(v);
    if (!m.member(q)) q = part.lo().closed() ? part.lo().value : part.hi().value;
    return m.member(q) ? q : g.f0();
  };
  while (out.evaluated < budget) {
    Q01 x = random_member(), y = random_member(), z = random_member();
    if (try_triple(x, y, z)) return out;
  }
  return out;
}

}  // namespace tcgen
