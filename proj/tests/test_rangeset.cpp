#include <doctest.h>

#include "support/fixtures.hpp"
#include "tcgen/rangeset.hpp"

using namespace tcgen;
using tcgen::testing::iv;
using tcgen::testing::q;

namespace {

RangeSet m_3_1() {
  return RangeSet::normalize({iv(q(0), true, q(2, 5), true), iv(q(2, 3), false, q(1), true)});
}

}  // namespace

TEST_CASE("normalize merges, sorts and dedups") {
  RangeSet a = RangeSet::normalize({iv(q(0), true, q(2, 5), true), iv(q(2, 5), false, q(1, 2), false)});
  CHECK(a == RangeSet::single(iv(q(0), true, q(1, 2), false)));

  RangeSet b = RangeSet::normalize({iv(q(2, 3), false, q(1), true), iv(q(0), true, q(2, 5), true)});
  CHECK(b.parts().size() == 2);
  CHECK(b.parts()[0] == iv(q(0), true, q(2, 5), true));
  CHECK(b.parts()[1] == iv(q(2, 3), false, q(1), true));

  CHECK(RangeSet::points({q(1, 2), q(1, 2)}) == RangeSet::point(q(1, 2)));

  // open-open pairs sharing an endpoint do not merge
  RangeSet c = RangeSet::normalize({iv(q(0), false, q(1, 2), false), iv(q(1, 2), false, q(1), false)});
  CHECK(c.parts().size() == 2);
  // ...but a closing point in between fuses everything
  RangeSet d = c.unite(RangeSet::point(q(1, 2)));
  CHECK(d == RangeSet::single(GenInterval::open(q(0), q(1))));
}

TEST_CASE("member honors endpoint kinds") {
  RangeSet m = m_3_1();
  CHECK(m.member(q(2, 5)));
  CHECK_FALSE(m.member(q(2, 3)));
  CHECK_FALSE(m.member(q(1, 2)));
  CHECK(m.member(q(0)));
  CHECK(m.member(q(1)));
}

TEST_CASE("complement") {
  CHECK(m_3_1().complement() == RangeSet::single(iv(q(2, 5), false, q(2, 3), true)));
  CHECK(RangeSet::full().complement() == RangeSet{});
  CHECK(RangeSet{}.complement() == RangeSet::full());
  CHECK(RangeSet::point(q(1, 2)).complement() ==
        RangeSet::normalize({iv(q(0), true, q(1, 2), false), iv(q(1, 2), false, q(1), true)}));
}

TEST_CASE("complement is an involution") {
  std::vector<RangeSet> sets = {
      m_3_1(),
      RangeSet{},
      RangeSet::full(),
      RangeSet::points({q(0), q(1, 3), q(1)}),
      RangeSet::normalize({iv(q(1, 10), false, q(1, 5), false), iv(q(1, 5), false, q(1, 2), true)}),
  };
  for (const RangeSet& s : sets) CHECK(s.complement().complement() == s);
}

TEST_CASE("set algebra") {
  RangeSet m = m_3_1();
  CHECK(m.intersect(m.complement()).empty());
  CHECK(m.unite(m.complement()) == RangeSet::full());
  CHECK(m.difference(RangeSet::point(q(2, 5))) ==
        RangeSet::normalize({iv(q(0), true, q(2, 5), false), iv(q(2, 3), false, q(1), true)}));
  CHECK(RangeSet::point(q(2, 5)).subset_of(m));
  CHECK_FALSE(RangeSet::point(q(1, 2)).subset_of(m));
}

TEST_CASE("accumulation sets") {
  RangeSet m = m_3_1();
  CHECK(m.acc_set(RangeSet::AccSide::left) ==
        RangeSet::normalize({iv(q(0), false, q(2, 5), true), iv(q(2, 3), false, q(1), true)}));
  CHECK(m.acc_set(RangeSet::AccSide::right) ==
        RangeSet::normalize({iv(q(0), true, q(2, 5), false), iv(q(2, 3), true, q(1), false)}));
  CHECK(m.acc_set(RangeSet::AccSide::both) ==
        RangeSet::normalize({iv(q(0), false, q(2, 5), false), iv(q(2, 3), false, q(1), false)}));
  CHECK(RangeSet::point(q(1, 2)).acc_set(RangeSet::AccSide::both).empty());
}

TEST_CASE("acc_set points are limits of in-set sequences") {
  RangeSet m = m_3_1();
  for (auto side : {RangeSet::AccSide::left, RangeSet::AccSide::right}) {
    RangeSet acc = m.acc_set(side);
    // probe a few members of acc and build an approaching sequence inside M
    for (const GenInterval& part : acc.parts()) {
      Q01 x = part.hi().closed() ? part.hi().value
                                 : Q01::from_rational(
                                       (part.lo().value.value() + part.hi().value.value()) / 2);
      REQUIRE(acc.member(x));
      BigRational dist(1, 4);
      Q01 prev = x;
      for (int n = 0; n < 6; ++n) {
        BigRational step = dist / 2;
        BigRational cand = side == RangeSet::AccSide::left ? x.value() - step : x.value() + step;
        // halve until the candidate lands in M strictly on the requested side
        int guard = 0;
        while (guard++ < 200 &&
               (cand < 0 || cand > 1 || !m.member(Q01::from_rational(cand)))) {
          step /= 2;
          cand = side == RangeSet::AccSide::left ? x.value() - step : x.value() + step;
        }
        REQUIRE(guard < 200);
        Q01 xn = Q01::from_rational(cand);
        CHECK(m.member(xn));
        if (side == RangeSet::AccSide::left) {
          CHECK(xn < x);
          if (n) CHECK(xn > prev);
        } else {
          CHECK(xn > x);
          if (n) CHECK(xn < prev);
        }
        prev = xn;
        dist = step;
      }
    }
  }
}

TEST_CASE("f_cap on the Example 3.1 range") {
  RangeSet m = m_3_1();
  AssociatedPair pair;
  pair.has_zero_gap = false;
  pair.entries.push_back({q(0), q(0), q(0), false});
  pair.entries.push_back({q(2, 5), q(2, 3), q(2, 5), true});
  pair.validate_against(m);

  CHECK(f_cap(m, pair, q(1, 2)) == q(2, 5));
  CHECK(f_cap(m, pair, q(3, 10)) == q(3, 10));
  CHECK(f_cap(m, pair, q(2, 3)) == q(2, 5));
  CHECK(f_cap(m, pair, q(7, 10)) == q(7, 10));
}

TEST_CASE("f_cap gap lookup on a positive f(0) range") {
  // M = [1/2,2/3) u {1}, gaps [0,1/2] -> 1/2 and [2/3,1] -> 1
  RangeSet m = RangeSet::normalize({iv(q(1, 2), true, q(2, 3), false), GenInterval::point(q(1))});
  AssociatedPair pair;
  pair.has_zero_gap = true;
  pair.entries.push_back({q(0), q(1, 2), q(1, 2), true});
  pair.entries.push_back({q(2, 3), q(1), q(1), true});
  pair.validate_against(m);

  CHECK(f_cap(m, pair, q(3, 4)) == q(1));
  CHECK(f_cap(m, pair, q(1, 4)) == q(1, 2));
  CHECK(f_cap(m, pair, q(7, 12)) == q(7, 12));

  SUBCASE("both formulations agree on a dense probe set") {
    for (long long den = 1; den <= 24; ++den) {
      for (long long num = 0; num <= den; ++num) {
        Q01 x = q(num, den);
        CHECK(f_cap(m, pair, x) == f_cap_supinf(m, x));
      }
    }
  }
}

TEST_CASE("f_cap is idempotent, monotone, and fixes exactly M") {
  RangeSet m = m_3_1();
  AssociatedPair pair;
  pair.has_zero_gap = false;
  pair.entries.push_back({q(0), q(0), q(0), false});
  pair.entries.push_back({q(2, 5), q(2, 3), q(2, 5), true});

  Q01 prev_val = q(0);
  bool first = true;
  for (long long den = 24, num = 0; num <= den; ++num) {
    Q01 x = q(num, den);
    Q01 v = f_cap(m, pair, x);
    CHECK(f_cap(m, pair, v) == v);
    CHECK((v == x) == m.member(x));
    CHECK(f_cap_supinf(m, x) == v);
    if (!first) CHECK(v >= prev_val);
    prev_val = v;
    first = false;
  }
}

TEST_CASE("inconsistent pair is rejected") {
  RangeSet m = m_3_1();
  AssociatedPair bad;
  bad.has_zero_gap = false;
  bad.entries.push_back({q(0), q(0), q(0), false});
  bad.entries.push_back({q(1, 5), q(2, 3), q(1, 5), true});  // [1/5,2/3] meets M in more than {1/5}
  CHECK_THROWS_AS(bad.validate_against(m), BuildError);
}

TEST_CASE("interval construction rejects empty shapes") {
  CHECK_THROWS_AS(GenInterval::open(q(1, 2), q(1, 2)), BuildError);
  CHECK_THROWS_AS(iv(q(1, 2), true, q(1, 2), false), BuildError);
  CHECK_THROWS_AS(GenInterval::closed(q(2, 3), q(1, 3)), BuildError);
  CHECK(GenInterval::point(q(1, 2)).is_point());
}
