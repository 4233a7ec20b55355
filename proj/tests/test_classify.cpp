// Allowable tuples, the tuple -> braid parameter map, and the per-braid
// filling enumeration, pinned by hand-worked examples and closed under
// round-trips with the tuple domain.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "onebridge/classify.hpp"

using namespace onebridge;

TEST_CASE("AllowableTuple::of validates its domain") {
  CHECK_NOTHROW(AllowableTuple::of(3, 2, 2, 2, -1));
  CHECK_NOTHROW(AllowableTuple::of(8, 5, 0, 3, +1));
  CHECK_THROWS_AS(AllowableTuple::of(5, 3, 0, 1, -1),
                  std::invalid_argument);  // eps must be +1 when k = 0
  CHECK_THROWS_AS(AllowableTuple::of(5, 3, 1, 5, +1),
                  std::invalid_argument);  // x out of range
  CHECK_THROWS_AS(AllowableTuple::of(5, 3, 1, -1, +1),
                  std::invalid_argument);  // x out of range
  CHECK_NOTHROW(AllowableTuple::of(5, 3, 1, 0, +1));  // x = 0 is in-domain
  CHECK_THROWS_AS(AllowableTuple::of(6, 3, 1, 1, +1),
                  std::invalid_argument);  // gcd(p, q) != 1
  CHECK_THROWS_AS(AllowableTuple::of(5, 5, 1, 1, +1),
                  std::invalid_argument);  // q >= p
  CHECK_THROWS_AS(AllowableTuple::of(5, 3, -1, 1, +1),
                  std::invalid_argument);  // k < 0
  CHECK_THROWS_AS(AllowableTuple::of(5, 3, 1, 1, 0),
                  std::invalid_argument);  // eps must be +-1
}

TEST_CASE("tuple_to_braid sends three distinct tuples to (7, 2, 4)") {
  const Braid expect = Braid::of(7, 2, 4);
  const TupleImage a = tuple_to_braid(AllowableTuple::of(3, 2, 2, 2, -1));
  REQUIRE(a.valid());
  CHECK(*a.braid == expect);

  const TupleImage b = tuple_to_braid(AllowableTuple::of(5, 3, 1, 1, +1));
  REQUIRE(b.valid());
  CHECK(*b.braid == expect);

  const TupleImage c = tuple_to_braid(AllowableTuple::of(8, 5, 0, 3, +1));
  REQUIRE(c.valid());
  CHECK(*c.braid == expect);
}

TEST_CASE("tuple_to_braid reports degeneracies instead of throwing") {
  // k = 0, x = q: collapses to w = 1
  const TupleImage a = tuple_to_braid(AllowableTuple::of(5, 3, 0, 3, +1));
  CHECK_FALSE(a.valid());
  CHECK(a.w == 1);
  CHECK(a.violation == "w >= 3");

  // width 2 leaves no room for a bridge strand
  const TupleImage b = tuple_to_braid(AllowableTuple::of(2, 1, 1, 1, +1));
  CHECK_FALSE(b.valid());
  CHECK(b.w == 3);
  CHECK(b.b == 2);
  CHECK(b.violation == "1 <= b <= w-2");

  // k = 0, x = 1: b degenerates to 0
  const TupleImage c = tuple_to_braid(AllowableTuple::of(5, 2, 0, 1, +1));
  CHECK_FALSE(c.valid());
  CHECK(c.violation == "1 <= b <= w-2");
}

TEST_CASE("filling sets for the pinned braids") {
  CHECK(filling_slopes(Braid::of(7, 2, 4)) ==
        std::vector<Slope>{Slope::of(3, 2), Slope::of(5, 3), Slope::of(8, 5)});
  CHECK(filling_slopes(Braid::of(8, 3, 6)).empty());
  CHECK(filling_slopes(Braid::of(6, 2, 3)) ==
        std::vector<Slope>{Slope::of(5, 3), Slope::of(7, 4)});
  CHECK(filling_slopes(Braid::of(9, 4, 2)) ==
        std::vector<Slope>{Slope::of(4, 1)});
  CHECK(filling_slopes(Braid::of(5, 2, 1)) ==
        std::vector<Slope>{Slope::of(3, 1), Slope::of(4, 1)});
}

TEST_CASE("witnesses carry case ids and reproduce their braid") {
  const auto fillings = fillings_of(Braid::of(7, 2, 4));
  REQUIRE(fillings.size() == 3);

  const auto cases_of = [](const SlopeFillings& f) {
    std::vector<int> ids;
    for (const auto& witness : f.witnesses) ids.push_back(witness.case_id);
    return ids;
  };
  CHECK(fillings[0].slope == Slope::of(3, 2));
  CHECK(cases_of(fillings[0]) == std::vector<int>{2, 4});
  CHECK(fillings[1].slope == Slope::of(5, 3));
  CHECK(cases_of(fillings[1]) == std::vector<int>{1});
  CHECK(fillings[2].slope == Slope::of(8, 5));
  CHECK(cases_of(fillings[2]) == std::vector<int>{3});

  for (const auto& filling : fillings)
    for (const auto& witness : filling.witnesses) {
      const TupleImage image = tuple_to_braid(witness.tuple);
      REQUIRE(image.valid());
      CHECK(*image.braid == Braid::of(7, 2, 4));
      CHECK(Slope::of(witness.tuple.p, witness.tuple.q) == filling.slope);
    }
}

TEST_CASE("(4, 2, 1) receives 3/1 from two cases at once") {
  const auto fillings = fillings_of(Braid::of(4, 2, 1));
  REQUIRE(fillings.size() == 2);
  CHECK(fillings[0].slope == Slope::of(3, 1));
  REQUIRE(fillings[0].witnesses.size() == 2);
  CHECK(fillings[0].witnesses[0].case_id == 1);
  CHECK(fillings[0].witnesses[1].case_id == 2);
  CHECK(fillings[1].slope == Slope::of(5, 2));
  REQUIRE(fillings[1].witnesses.size() == 1);
  CHECK(fillings[1].witnesses[0].case_id == 3);
}

TEST_CASE("tuple round-trip: each tuple's slope is found on its braid, "
          "p <= 30, k <= 4") {
  Int checked = 0;
  for (Int p = 2; p <= 30; ++p)
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (const Int x : {Int{1}, q, p - q, p - 1})
        for (Int k = 0; k <= 4; ++k)
          for (const int eps : {+1, -1}) {
            if (k == 0 && eps == -1) continue;
            const auto tuple = AllowableTuple::of(p, q, k, x, eps);
            const TupleImage image = tuple_to_braid(tuple);
            if (!image.valid()) continue;
            const auto slopes = filling_slopes(*image.braid);
            CHECK(std::binary_search(slopes.begin(), slopes.end(),
                                     Slope::of(p, q)));
            ++checked;
          }
    }
  CHECK(checked > 2000);
}

TEST_CASE("each case contributes at most one slope per braid, w <= 40") {
  for (Int w = 3; w <= 40; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const auto fillings = fillings_of(Braid::of(w, b, t));
        std::set<int> seen;
        for (const auto& filling : fillings)
          for (const auto& witness : filling.witnesses) {
            CHECK(seen.insert(witness.case_id).second);
          }
        CHECK(fillings.size() <= 3);
      }
}

TEST_CASE("every emitted slope obeys the width bound, w <= 25") {
  for (Int w = 3; w <= 25; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t)
        for (const Slope& s : filling_slopes(Braid::of(w, b, t))) {
          CHECK(s.p >= 3);
          CHECK(s.p <= w + 1);
          CHECK(s.q > 0);
          CHECK(s.q < s.p);
        }
}

namespace {

std::vector<Braid> braids_of(
    const std::vector<std::pair<Braid, AllowableTuple>>& hits) {
  std::vector<Braid> braids;
  for (const auto& [braid, tuple] : hits) {
    braids.push_back(braid);
    (void)tuple;
  }
  return braids;
}

}  // namespace

TEST_CASE("knots_for_slope finds every knot admitting a given slope") {
  const auto for_31 = knots_for_slope(Slope::of(3, 1), 8);
  CHECK(braids_of(for_31) ==
        std::vector<Braid>{Braid::of(4, 2, 1), Braid::of(5, 2, 1),
                           Braid::of(7, 4, 2), Braid::of(8, 3, 2)});

  const auto for_32 = knots_for_slope(Slope::of(3, 2), 7);
  CHECK(braids_of(for_32) ==
        std::vector<Braid>{Braid::of(4, 1, 2), Braid::of(5, 2, 3),
                           Braid::of(7, 2, 4)});

  for (const auto& [braid, tuple] : for_32) {
    CHECK(Slope::of(tuple.p, tuple.q) == Slope::of(3, 2));
    const TupleImage image = tuple_to_braid(tuple);
    REQUIRE(image.valid());
    CHECK(*image.braid == braid);
  }

  CHECK(knots_for_slope(Slope::of(2, 1), 40).empty());
}

TEST_CASE("knots_for_slope grows monotonically with the width window") {
  const auto small = braids_of(knots_for_slope(Slope::of(3, 2), 50));
  const auto large = braids_of(knots_for_slope(Slope::of(3, 2), 100));
  REQUIRE(small.size() < large.size());
  CHECK(std::equal(small.begin(), small.end(), large.begin()));
  for (const Braid& braid : small) {
    const auto slopes = filling_slopes(braid);
    CHECK(std::binary_search(slopes.begin(), slopes.end(), Slope::of(3, 2)));
    CHECK(is_knot(braid));
  }
}
