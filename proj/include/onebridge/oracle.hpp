#pragma once
// Independent verification engines.  The enumeration oracle rebuilds
// the braid -> fillings map from the tuple side alone; the transit
// oracle lays the strand out as exact rational positions on a p-fold
// annulus and re-measures (w, t) from rank arithmetic, with no use of
// the phi closed forms.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "onebridge/classify.hpp"

namespace onebridge {

// Every (braid, slope, tuple) incidence reachable from coprime pairs
// with p <= max_w + 1 (the bound is exhaustive: k = 0 forces p = w + 1,
// k >= 1 forces p <= w - 1).
struct FillingMap {
  Int max_w = 0;
  std::map<Braid, std::vector<std::pair<Slope, AllowableTuple>>> entries;
};
FillingMap build_filling_map(Int max_w);  // 3 <= max_w <= 200

struct EquivalenceMismatch {
  Braid braid;
  std::vector<Slope> closed_form;  // fillings_of
  std::vector<Slope> enumerated;   // FillingMap
};

struct EquivalenceReport {
  Int max_w = 0;
  Int triples_checked = 0;
  std::vector<EquivalenceMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Compares fillings_of against the enumeration oracle on every valid
// triple with w <= max_w.  jobs > 1 splits the sweep by w.
EquivalenceReport check_equivalence(Int max_w, int jobs = 1);

// Exact rational, normalized, den > 0.
struct Rat {
  Int num = 0;
  Int den = 1;
  Rat() = default;
  Rat(Int n, Int d);
  friend Rat operator+(Rat a, Rat b);
  friend Rat operator-(Rat a, Rat b);
  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);
};
Int rat_floor(const Rat&);
Rat rat_mod(const Rat& a, Int m);  // representative in [0, m)

// The strand of the tuple laid out on the annulus coordinates 0..p.
// positions[j] is where transit j crosses, distinct, consecutive
// entries differing by q + delta (mod p) with delta = 1/(2 (n + 1)).
struct TransitPath {
  AllowableTuple tuple;
  std::vector<Rat> positions;
  Rat start_pos;  // interior of the rectangle (0, 1)
  Rat end_pos;    // interior of the rectangle (x, x+1)
};
TransitPath simulate_transits(const AllowableTuple&);

struct WtMeasurement {
  Int w = 0, t = 0;
};

// w is the transit count.  t is recovered as the constant gap between
// each transit's rank among the entry coordinates and its rank among
// the exit coordinates (the same points rotated by the gluing shift q).
// A non-constant gap means the path was not built consistently and is
// reported as std::logic_error.
WtMeasurement measure_w_t(const TransitPath&);

struct SweepReport {
  Int checked = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// phi_closed vs phi_direct on every tabulated shape for every coprime
// pair with 2 <= p <= max_p.
SweepReport phi_closed_vs_direct_sweep(Int max_p);

// measure_w_t(simulate_transits(tuple)) vs tuple_to_braid(tuple) for
// every allowable tuple with p <= max_p, k <= max_k, x in
// {1, q, p-q, p-1} whose braid parameters are valid.
SweepReport transit_vs_formula_sweep(Int max_p, Int max_k);

}  // namespace onebridge
