#pragma once
// Full sweep over parameter triples: knot filter, filling sets,
// canonical dedup, the 36-row reference table, mirror-pair
// verification, and the JSONL cache / CSV export.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "onebridge/classify.hpp"

namespace onebridge {

struct CensusRecord {
  Braid braid;
  bool knot = false;
  bool canonical = false;
  std::vector<Slope> fillings;  // computed only when knot

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusSummary {
  Int max_w = 0;
  Int triple_count = 0;
  Int knot_count = 0;
  Int admitting_count = 0;  // knots with a nonempty filling set
  Int filling_count = 0;    // (braid, slope) incidences over knots
  Int canonical_knot_count = 0;
  Int canonical_admitting_count = 0;
  Int canonical_filling_count = 0;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct Census {
  std::vector<CensusRecord> records;  // lexicographic by (w, b, t)
  CensusSummary summary;
};

// Every triple with 3 <= w <= max_w, 1 <= b <= w-2, 1 <= t <= w-1.
// jobs > 1 splits the sweep by w; the record order is deterministic
// either way.
Census run_census(Int max_w, int jobs = 1);  // 3 <= max_w <= 1000

// One line of the reference table: a canonical knot and its fillings.
struct Table1Row {
  Braid braid;
  std::vector<Slope> slopes;
};

// All canonical knot triples with w <= max_w in lexicographic order.
std::vector<Table1Row> table1(Int max_w = 10);  // 4 <= max_w <= 1000

// "(w, b, t; p1/q1, p2/q2)"; an empty slope set renders as "-".
std::string render_table1_row(const Table1Row&);

// The expected table1(10) rendering: 36 rows, fixed for all time.
const std::vector<std::string>& table1_golden();

struct MirrorMismatch {
  Braid braid;
  Braid partner;
  std::vector<Slope> expected;  // slope-mirror of braid's fillings
  std::vector<Slope> actual;    // partner's fillings
};

// A knot where the parameter map (w-b-1, t-b-1) lands on a different
// knot than the filling-set involution (w-b-1, w-t-1).
struct MapDivergence {
  Braid braid;
  Braid map_image;
  Braid partner;
};

struct MirrorReport {
  Int max_w = 0;
  Int pairs_checked = 0;  // unordered mirror-partner pairs of knots
  std::vector<MirrorMismatch> mismatches;
  std::vector<Braid> partner_not_knot;  // knots paired with a link

  // Audit of the literal parameter map (w, b, t) -> (w, w-b-1, t-b-1),
  // listed but never asserted against:
  std::vector<Braid> map_out_of_range;  // image twist reduces to 0
  std::vector<Braid> map_image_link;    // image in range but a link
  std::vector<MapDivergence> map_divergent;
  Int map_matches_partner = 0;

  bool passed() const {
    return mismatches.empty() && partner_not_knot.empty();
  }
};

// For every knot with w <= max_w: its mirror partner must be a knot
// whose filling set is the (p, q) -> (p, p-q) image of its own.
MirrorReport verify_mirror_pairs(Int max_w);  // 4 <= max_w <= 1000

// Cache header: {"format_version":1,"max_w":N,"convention":"gamma_after_rho"},
// then one record per line.  Written to a temporary file in the target
// directory and renamed into place.
void write_census_jsonl(const Census&, const std::string& path);

// Empty when the file is missing, malformed, or its header does not
// match (format_version, convention, expect_max_w).  The summary is
// recomputed from the records, never read from disk.
std::optional<Census> read_census_jsonl(const std::string& path,
                                        Int expect_max_w);

// Columns: w,b,t,is_knot,is_canonical,fillings ("p/q" joined by ';').
void write_census_csv(const Census&, std::ostream&);

}  // namespace onebridge
