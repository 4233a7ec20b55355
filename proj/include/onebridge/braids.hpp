#pragma once
// Parameter triples K(w, b, t), their braid words and closure
// connectivity, slopes on the outer torus, the allowable 5-tuple
// parametrization, and the two mirror maps.

#include <compare>
#include <optional>
#include <vector>

#include "onebridge/residues.hpp"

namespace onebridge {

// Closure of sigma_b ... sigma_1 (sigma_{w-1} ... sigma_1)^t on w
// strands inside a solid torus.  Invariants: 3 <= w <= kMaxW,
// 1 <= b <= w-2, 1 <= t <= w-1.
struct Braid {
  Int w = 3, b = 1, t = 1;

  // Validating factory.  Accepts any integer t and first reduces it
  // mod w into 0..w-1; a reduced twist of 0 is rejected.
  static Braid of(Int w, Int b, Int t);

  auto operator<=>(const Braid&) const = default;
};

// A (p, q) curve on the outer torus of the exterior.
// Invariants: p > q > 0, gcd(p, q) = 1, p <= kMaxP.
struct Slope {
  Int p = 2, q = 1;
  static Slope of(Int p, Int q);
  auto operator<=>(const Slope&) const = default;
};

// (p, q, k, x, eps): p > q > 0 coprime, k >= 0, 0 <= x < p, eps = +-1
// with eps = +1 forced when k = 0.
struct AllowableTuple {
  Int p = 2, q = 1, k = 0, x = 0;
  int eps = 1;
  static AllowableTuple of(Int p, Int q, Int k, Int x, int eps);
  auto operator<=>(const AllowableTuple&) const = default;
};

// Generator indices, all positive: [b, b-1, ..., 1, (w-1, ..., 1) x t].
std::vector<Int> braid_word(const Braid&);

// Underlying permutation of the closure, 0-based on strands 0..w-1:
// i -> gamma_b((i + t) mod w), where gamma_b is the cycle
// 0 -> 1 -> ... -> b -> 0 (the full-twist rotation acts first).
std::vector<Int> closure_permutation(const Braid&);

// Cycles of the closure permutation on 1-based strand labels, each
// cycle starting from its smallest label, cycles ordered by that label.
std::vector<std::vector<Int>> closure_cycles(const Braid&);

int component_count(const Braid&);

// True iff the closure permutation is a single w-cycle.
bool is_knot(const Braid&);

// (p, q) -> (p, p - q); an involution on slopes.
Slope mirror_slope(Slope);

// The parameter map (w, b, t) -> (w, w-b-1, (t-b-1) mod w).  Not an
// involution, and the reduced twist can land on 0; that outcome is an
// out-of-range report, not an error.
struct MirrorImage {
  Int w, b, t;                 // mapped parameters, t reduced into 0..w-1
  std::optional<Braid> braid;  // engaged iff the parameters form a Braid
  bool in_range() const { return braid.has_value(); }
};
MirrorImage mirror(const Braid&);

// The involution (w, b, t) -> (w, w-b-1, w-t-1).  It pairs every braid
// with the one whose filling set is the slope-mirror of its own (see
// verify_mirror_pairs).  Empty only when t = w-1, which never occurs
// for a knot.
std::optional<Braid> mirror_partner(const Braid&);

// True iff b < w/2, and additionally t < w/2 whenever b = (w-1)/2.
// Selects one representative from each mirror pair.
bool is_canonical(const Braid&);

}  // namespace onebridge
