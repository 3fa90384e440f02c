#include <doctest.h>

#include <vector>

#include "support/fixtures.hpp"
#include "tcgen/conorm.hpp"

using namespace tcgen;
using tcgen::testing::iv;
using tcgen::testing::q;

namespace {

OrdinalSumConorm t_3_1() {
  return OrdinalSumConorm::build({{q(0), q(1, 2), ArchKind::probabilistic_sum},
                                  {q(1, 2), q(1), ArchKind::probabilistic_sum}});
}

OrdinalSumConorm t_4_2_1() {
  return OrdinalSumConorm::build({{q(1, 2), q(1), ArchKind::probabilistic_sum}});
}

OrdinalSumConorm pure_max() { return OrdinalSumConorm::build({}); }

OrdinalSumConorm sl_global() {
  return OrdinalSumConorm::build({{q(0), q(1), ArchKind::lukasiewicz}});
}

OrdinalSumConorm sp_global() {
  return OrdinalSumConorm::build({{q(0), q(1), ArchKind::probabilistic_sum}});
}

// Dense rational samples of a set, pushing toward both ends of every part.
std::vector<Q01> sample_set(const RangeSet& s, int depth = 12) {
  std::vector<Q01> pts;
  for (const GenInterval& p : s.parts()) {
    if (p.lo().closed()) pts.push_back(p.lo().value);
    if (p.is_point()) continue;
    if (p.hi().closed()) pts.push_back(p.hi().value);
    BigRational lo = p.lo().value.value(), hi = p.hi().value.value();
    BigRational len = hi - lo;
    pts.push_back(Q01::from_rational(lo + len / 2));
    for (int k = 2; k <= depth; ++k) {
      BigRational off = len / (1 << k);
      pts.push_back(Q01::from_rational(lo + off));
      pts.push_back(Q01::from_rational(hi - off));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("build validates carriers") {
  CHECK_NOTHROW(t_3_1());
  CHECK_NOTHROW(t_4_2_1());
  CHECK_THROWS_AS(OrdinalSumConorm::build({{q(0), q(2, 3), ArchKind::lukasiewicz},
                                           {q(1, 2), q(1), ArchKind::probabilistic_sum}}),
                  BuildError);
  CHECK_THROWS_AS(OrdinalSumConorm::build({{q(1, 2), q(1, 2), ArchKind::lukasiewicz}}), BuildError);
}

TEST_CASE("eval on the paper instances") {
  CHECK(t_3_1().eval(q(2, 5), q(2, 5)) == q(12, 25));
  CHECK(t_4_2_1().eval(q(1, 2), q(2, 3)) == q(2, 3));
  CHECK(sl_global().eval(q(1, 2), q(2, 3)) == q(1));
  for (long long n = 0; n <= 8; ++n) {
    CHECK(t_3_1().eval(q(n, 8), q(0)) == q(n, 8));  // 0 is neutral
    CHECK(t_3_1().eval(q(1), q(n, 8)) == q(1));     // 1 annihilates
  }
}

TEST_CASE("idempotents") {
  CHECK(t_3_1().idempotents() == RangeSet::points({q(0), q(1, 2), q(1)}));
  CHECK(t_4_2_1().idempotents() ==
        RangeSet::normalize({iv(q(0), true, q(1, 2), true), GenInterval::point(q(1))}));
  CHECK(pure_max().idempotents() == RangeSet::full());
  CHECK(sl_global().idempotents() == RangeSet::points({q(0), q(1)}));

  for (long long n = 0; n <= 12; ++n) {
    Q01 a = q(n, 12);
    CHECK(t_4_2_1().is_idempotent(a) == (t_4_2_1().eval(a, a) == a));
  }
}

TEST_CASE("powers and nilpotency") {
  CHECK(sl_global().power(q(1, 2), 2) == q(1));
  CHECK(sp_global().power(q(1, 2), 2) == q(3, 4));
  CHECK(sl_global().power(q(0), 5) == q(0));
  CHECK(sl_global().nilpotency_index(q(1, 2), 10) == 2);
  CHECK(sl_global().nilpotency_index(q(1, 10), 20) == 10);
  CHECK_FALSE(sp_global().nilpotency_index(q(1, 2), 64).has_value());
  CHECK_FALSE(pure_max().nilpotency_index(q(1, 2), 8).has_value());
}

TEST_CASE("section images from Example 3.1") {
  OrdinalSumConorm t = t_3_1();
  CHECK(t.section_image(GenInterval::closed(q(0), q(2, 5)), q(2, 5)) ==
        RangeSet::single(GenInterval::closed(q(2, 5), q(12, 25))));
  CHECK(t.section_image(GenInterval::open(q(2, 3), q(1)), q(2, 5)) ==
        RangeSet::single(GenInterval::open(q(2, 3), q(1))));
  CHECK(pure_max().section_image(GenInterval::open(q(0), q(1, 10)), q(1, 2)) ==
        RangeSet::point(q(1, 2)));
}

TEST_CASE("set images from Example 3.1") {
  OrdinalSumConorm t = t_3_1();
  RangeSet m_minus_1 =
      RangeSet::normalize({iv(q(0), true, q(2, 5), true), iv(q(2, 3), false, q(1), false)});
  RangeSet expected =
      RangeSet::normalize({iv(q(2, 5), true, q(12, 25), true), iv(q(2, 3), false, q(1), false)});
  CHECK(t.set_image(m_minus_1, RangeSet::point(q(2, 5))) == expected);
  // the [b_k,c_k] form of (D2) gives the same image
  CHECK(t.set_image(m_minus_1, RangeSet::single(GenInterval::closed(q(2, 5), q(2, 5)))) ==
        expected);
  CHECK(t.set_image(RangeSet{}, RangeSet::full()).empty());
  CHECK(t.set_image(RangeSet::full(), RangeSet{}).empty());
}

TEST_CASE("set_image matches brute-force sampling") {
  std::vector<OrdinalSumConorm> conorms = {
      t_3_1(), t_4_2_1(), pure_max(), sl_global(), sp_global(),
      OrdinalSumConorm::build({{q(1, 4), q(1, 2), ArchKind::lukasiewicz},
                               {q(1, 2), q(3, 4), ArchKind::probabilistic_sum}}),
  };
  std::vector<RangeSet> sets = {
      RangeSet::normalize({iv(q(0), true, q(2, 5), true), iv(q(2, 3), false, q(1), false)}),
      RangeSet::points({q(2, 5)}),
      RangeSet::normalize({iv(q(1, 3), false, q(3, 5), false)}),
      RangeSet::normalize({GenInterval::point(q(1, 5)), iv(q(1, 2), true, q(7, 8), false)}),
      RangeSet::full(),
  };
  for (const auto& t : conorms) {
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        RangeSet img = t.set_image(a, b);
        auto xs = sample_set(a);
        auto ys = sample_set(b);
        // every sampled value lands inside the computed image
        for (const Q01& x : xs) {
          for (const Q01& y : ys) {
            Q01 v = t.eval(x, y);
            if (!img.member(v)) {
              CAPTURE(x.str());
              CAPTURE(y.str());
              REQUIRE(img.member(v));
            }
          }
        }
        // and every image part is approached near both of its endpoints
        for (const GenInterval& part : img.parts()) {
          BigRational len = part.hi().value.value() - part.lo().value.value();
          BigRational tol = part.is_point() ? BigRational(0) : len / 16;
          bool lo_hit = false, hi_hit = false;
          for (const Q01& x : xs) {
            for (const Q01& y : ys) {
              Q01 v = t.eval(x, y);
              if (!part.contains(v)) continue;
              if (v.value() - part.lo().value.value() <= tol) lo_hit = true;
              if (part.hi().value.value() - v.value() <= tol) hi_hit = true;
            }
          }
          CAPTURE(part.str());
          CHECK(lo_hit);
          CHECK(hi_hit);
        }
      }
    }
  }
}

TEST_CASE("section_image agrees with set_image on single parts") {
  std::vector<OrdinalSumConorm> conorms = {t_3_1(), pure_max(), sl_global(),
                                           OrdinalSumConorm::build({{q(1, 4), q(1, 2), ArchKind::lukasiewicz}})};
  std::vector<GenInterval> intervals = {
      GenInterval::closed(q(0), q(2, 5)), GenInterval::open(q(1, 3), q(2, 3)),
      iv(q(1, 2), true, q(9, 10), false), GenInterval::point(q(1, 4))};
  std::vector<Q01> cs = {q(0), q(1, 4), q(2, 5), q(1, 2), q(3, 4), q(1)};
  for (const auto& t : conorms) {
    for (const auto& i : intervals) {
      for (const Q01& c : cs) {
        CHECK(t.section_image(i, c) == t.set_image(RangeSet::single(i), RangeSet::point(c)));
      }
    }
  }
}

TEST_CASE("t-conorm axioms on an exhaustive grid") {
  std::vector<OrdinalSumConorm> conorms = {t_3_1(), t_4_2_1(), pure_max(), sl_global(), sp_global()};
  std::vector<Q01> grid;
  for (long long n = 0; n <= 12; ++n) grid.push_back(q(n, 12));
  grid.push_back(q(1, 2));  // summand endpoints are on the grid already; keep dedup honest
  for (const auto& t : conorms) {
    for (const Q01& x : grid) {
      CHECK(t.eval(x, q(0)) == x);
      for (const Q01& y : grid) {
        CHECK(t.eval(x, y) == t.eval(y, x));
        for (const Q01& z : grid) {
          if (y <= z) CHECK(t.eval(x, y) <= t.eval(x, z));
          CHECK(t.eval(t.eval(x, y), z) == t.eval(x, t.eval(y, z)));
        }
      }
    }
  }
}

TEST_CASE("conditional cancellation inside a strict summand") {
  OrdinalSumConorm t = t_3_1();
  std::vector<Q01> probes;
  for (long long n = 1; n < 10; ++n) probes.push_back(q(n, 20));  // inside (0,1/2)
  for (const Q01& x : probes) {
    for (const Q01& y : probes) {
      for (const Q01& z : probes) {
        Q01 vy = t.eval(x, y), vz = t.eval(x, z);
        if (vy == vz && vy < q(1, 2)) CHECK(y == z);
      }
    }
  }
  // plateaus of pure max violate cancellation
  OrdinalSumConorm m = pure_max();
  CHECK(m.eval(q(1, 2), q(1, 4)) == m.eval(q(1, 2), q(1, 2)));
}
