#pragma once
// The solid-torus filling classification: converting an allowable tuple
// to its braid parameters, deciding which slopes on the outer torus
// fill to a solid torus, and enumerating the braids admitting a given
// slope.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onebridge/braids.hpp"

namespace onebridge {

// w = k p + q_bar_x, t = k q + phi(x, q), b = k (x + eps) + phi(x, x),
// with phi evaluated by direct enumeration.  Parameters that fall
// outside the Braid ranges are a degeneracy report, not an error.
struct TupleImage {
  AllowableTuple tuple;
  Int w = 0, b = 0, t = 0;     // raw computed parameters
  std::optional<Braid> braid;  // engaged iff (w, b, t) is a valid Braid
  std::string violation;       // first violated bound when degenerate
  bool valid() const { return braid.has_value(); }
};
TupleImage tuple_to_braid(const AllowableTuple&);

// One classification case that produced a slope.  The witness tuple
// reproduces the classified braid under tuple_to_braid; its x is 1, q,
// p-q, or p-1 according to case_id 1..4.
struct CaseWitness {
  int case_id;
  AllowableTuple tuple;
};

struct SlopeFillings {
  Slope slope;
  std::vector<CaseWitness> witnesses;  // ascending case_id, never empty
};

// All slopes whose Dehn filling on the outer torus of the braid's
// exterior yields a solid torus.  The four arithmetic cases are
//   (1) x = 1:    q w - p t = 1 with p, q in Z_w, and b = 2 floor(w/p)
//   (2) x = q:    k = gcd(w-1, t), p = (w-1)/k, q = t/k, b = k (q + eps)
//   (3) x = p-q:  k = gcd(w+1, t+1) - 1, p = (w+1)/(k+1),
//                 q = (t+1)/(k+1), b = k (p-q+eps) + (p-q-1)
//   (4) x = p-1:  p (t+1) - q w = 1 with p, q in Z_w, and
//                 b = floor(w/p) (p-2) + (p - q_bar - 1)
// Result is sorted by slope; a slope reached by several cases appears
// once, carrying every case witness.
std::vector<SlopeFillings> fillings_of(const Braid&);

// Just the slopes, sorted.
std::vector<Slope> filling_slopes(const Braid&);

// Every braid with w <= max_w that admits the given slope, each paired
// with one generating tuple, sorted by (w, b, t).
std::vector<std::pair<Braid, AllowableTuple>> knots_for_slope(Slope, Int max_w);

}  // namespace onebridge
