// Braid parameter domain: words, closure connectivity, the two mirror
// maps, and the canonical filter, pinned by the calibration knots.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "onebridge/braids.hpp"

using namespace onebridge;

TEST_CASE("Braid::of validates and normalizes the twist") {
  CHECK(Braid::of(7, 2, 4) == Braid{7, 2, 4});
  CHECK(Braid::of(7, 2, 11) == Braid{7, 2, 4});   // t mod w
  CHECK(Braid::of(7, 2, -3) == Braid{7, 2, 4});   // negative t
  CHECK_THROWS_AS(Braid::of(7, 2, 7), std::invalid_argument);   // t = 0 mod w
  CHECK_THROWS_AS(Braid::of(7, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Braid::of(2, 1, 1), std::invalid_argument);   // w < 3
  CHECK_THROWS_AS(Braid::of(7, 0, 1), std::invalid_argument);   // b = 0
  CHECK_THROWS_AS(Braid::of(7, 6, 1), std::invalid_argument);   // b = w-1
  CHECK_THROWS_AS(Braid::of(kMaxW + 1, 1, 1), std::invalid_argument);
}

TEST_CASE("braid_word expands the defining word") {
  CHECK(braid_word(Braid::of(4, 1, 2)) ==
        std::vector<Int>{1, 3, 2, 1, 3, 2, 1});
  CHECK(braid_word(Braid::of(7, 4, 2)) ==
        std::vector<Int>{4, 3, 2, 1, 6, 5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 1});
  CHECK(braid_word(Braid::of(3, 1, 1)) == std::vector<Int>{1, 2, 1});
}

TEST_CASE("braid_word length and index range, w <= 50") {
  for (Int w = 3; w <= 50; w += 7)
    for (Int b = 1; b <= w - 2; b += 3)
      for (Int t = 1; t <= w - 1; t += 5) {
        const auto word = braid_word(Braid::of(w, b, t));
        CHECK(static_cast<Int>(word.size()) == b + t * (w - 1));
        CHECK(std::all_of(word.begin(), word.end(),
                          [&](Int g) { return 1 <= g && g <= w - 1; }));
      }
}

TEST_CASE("closure cycles match the hand-composed permutations") {
  CHECK(closure_cycles(Braid::of(4, 1, 2)) ==
        std::vector<std::vector<Int>>{{1, 3, 2, 4}});
  CHECK(closure_cycles(Braid::of(5, 2, 1)) ==
        std::vector<std::vector<Int>>{{1, 3, 4, 5, 2}});
  CHECK(closure_cycles(Braid::of(6, 1, 3)) ==
        std::vector<std::vector<Int>>{{1, 4, 2, 5}, {3, 6}});
}

TEST_CASE("component_count and is_knot agree with the cycles") {
  CHECK(component_count(Braid::of(6, 1, 3)) == 2);
  CHECK(component_count(Braid::of(7, 2, 4)) == 1);
  for (Int w = 3; w <= 12; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        const auto cycles = closure_cycles(braid);
        CHECK(component_count(braid) == static_cast<int>(cycles.size()));
        CHECK(is_knot(braid) == (cycles.size() == 1));
      }
}

TEST_CASE("knot-convention calibration") {
  CHECK(is_knot(Braid::of(4, 1, 2)));
  CHECK(is_knot(Braid::of(4, 2, 1)));
  CHECK(is_knot(Braid::of(5, 2, 1)));
  CHECK(is_knot(Braid::of(7, 2, 4)));
  CHECK(is_knot(Braid::of(8, 3, 6)));
  CHECK_FALSE(is_knot(Braid::of(4, 1, 1)));
  CHECK_FALSE(is_knot(Braid::of(4, 1, 3)));
  CHECK_FALSE(is_knot(Braid::of(4, 2, 2)));
  CHECK_FALSE(is_knot(Braid::of(6, 1, 3)));
  CHECK_FALSE(is_knot(Braid::of(10, 1, 1)));
}

TEST_CASE("closure permutation and its inverse share a cycle type, "
          "w <= 12") {
  for (Int w = 3; w <= 12; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        const auto perm = closure_permutation(braid);
        std::vector<Int> inverse(perm.size());
        for (size_t i = 0; i < perm.size(); ++i)
          inverse[static_cast<size_t>(perm[i])] = static_cast<Int>(i);

        const auto cycle_type = [&](const std::vector<Int>& pi) {
          std::vector<int> lengths;
          std::vector<bool> seen(pi.size(), false);
          for (size_t i = 0; i < pi.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (size_t j = i; !seen[j]; j = static_cast<size_t>(pi[j])) {
              seen[j] = true;
              ++len;
            }
            lengths.push_back(len);
          }
          std::sort(lengths.begin(), lengths.end());
          return lengths;
        };
        CHECK(cycle_type(perm) == cycle_type(inverse));
      }
}

TEST_CASE("mirror_slope examples and involution") {
  CHECK(mirror_slope(Slope::of(3, 1)) == Slope::of(3, 2));
  CHECK(mirror_slope(Slope::of(2, 1)) == Slope::of(2, 1));
  CHECK(mirror_slope(Slope::of(8, 5)) == Slope::of(8, 3));
  for (Int p = 2; p <= 30; ++p)
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(mirror_slope(mirror_slope(Slope::of(p, q))) == Slope::of(p, q));
    }
}

TEST_CASE("parameter mirror map examples") {
  const MirrorImage a = mirror(Braid::of(5, 2, 1));
  REQUIRE(a.in_range());
  CHECK(*a.braid == Braid::of(5, 2, 3));

  const MirrorImage b = mirror(Braid::of(4, 2, 1));
  REQUIRE(b.in_range());
  CHECK(*b.braid == Braid::of(4, 1, 2));

  const MirrorImage c = mirror(Braid::of(4, 1, 2));
  CHECK_FALSE(c.in_range());
  CHECK(c.w == 4);
  CHECK(c.b == 2);
  CHECK(c.t == 0);  // twist reduces to 0: out of range
}

TEST_CASE("exactly one of braid / parameter-mirror is canonical when the "
          "image is in range, w <= 10") {
  for (Int w = 3; w <= 10; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        const MirrorImage image = mirror(braid);
        if (!image.in_range()) continue;
        CHECK(is_canonical(braid) != is_canonical(*image.braid));
      }
}

TEST_CASE("mirror_partner is an involution pairing each braid with its "
          "filling-mirror") {
  CHECK(mirror_partner(Braid::of(5, 2, 1)) == Braid::of(5, 2, 3));
  CHECK(mirror_partner(Braid::of(4, 2, 1)) == Braid::of(4, 1, 2));
  CHECK(mirror_partner(Braid::of(7, 2, 4)) == Braid::of(7, 4, 2));
  CHECK_FALSE(mirror_partner(Braid::of(5, 1, 4)).has_value());  // t = w-1

  for (Int w = 3; w <= 15; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        const auto partner = mirror_partner(braid);
        if (t == w - 1) {
          CHECK_FALSE(partner.has_value());
          continue;
        }
        REQUIRE(partner.has_value());
        CHECK(mirror_partner(*partner) == braid);
        if (*partner == braid) {
          // self-paired parameters: only at b = t = (w-1)/2, and the
          // closure there is never a knot
          CHECK(b == t);
          CHECK(2 * b == w - 1);
          CHECK_FALSE(is_knot(braid));
        } else {
          CHECK(is_canonical(braid) != is_canonical(*partner));
        }
      }
}

TEST_CASE("is_canonical examples") {
  CHECK(is_canonical(Braid::of(7, 2, 4)));
  CHECK_FALSE(is_canonical(Braid::of(7, 4, 2)));
  CHECK_FALSE(is_canonical(Braid::of(5, 2, 3)));
  CHECK(is_canonical(Braid::of(5, 2, 1)));
  CHECK(is_canonical(Braid::of(5, 2, 2)));
}
