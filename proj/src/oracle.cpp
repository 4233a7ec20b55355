// Implementation of the enumeration and transit oracles.

#include "onebridge/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace onebridge {

namespace {

std::vector<Int> end_rectangles(Int p, Int q) {
  std::vector<Int> xs;
  for (Int x : {Int{1}, q, p - q, p - 1})
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  return xs;
}

}  // namespace

FillingMap build_filling_map(Int max_w) {
  if (max_w < 3 || max_w > 200)
    throw std::invalid_argument("build_filling_map: need 3 <= max_w <= 200");
  FillingMap map;
  map.max_w = max_w;
  for (Int p = 2; p <= max_w + 1; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int x : end_rectangles(p, q)) {
        const Int qbx = q_bar_x(p, q, x);
        for (Int k = 0; k * p + qbx <= max_w; ++k) {
          for (int eps : {+1, -1}) {
            if (k == 0 && eps == -1) continue;
            const TupleImage image =
                tuple_to_braid(AllowableTuple::of(p, q, k, x, eps));
            if (!image.valid()) continue;
            map.entries[*image.braid].emplace_back(Slope::of(p, q),
                                                   image.tuple);
          }
        }
      }
    }
  }
  for (auto& [braid, incidences] : map.entries) {
    std::sort(incidences.begin(), incidences.end());
    incidences.erase(std::unique(incidences.begin(), incidences.end()),
                     incidences.end());
  }
  return map;
}

namespace {

std::vector<Slope> map_slopes(const FillingMap& map, const Braid& braid) {
  std::vector<Slope> slopes;
  const auto it = map.entries.find(braid);
  if (it == map.entries.end()) return slopes;
  for (const auto& [slope, tuple] : it->second)
    if (slopes.empty() || slopes.back() != slope) slopes.push_back(slope);
  return slopes;
}

}  // namespace

EquivalenceReport check_equivalence(Int max_w, int jobs) {
  const FillingMap map = build_filling_map(max_w);
  if (jobs < 1)
    throw std::invalid_argument("check_equivalence: need jobs >= 1");
  EquivalenceReport report;
  report.max_w = max_w;

  std::vector<std::vector<EquivalenceMismatch>> per_w(
      static_cast<size_t>(max_w - 2));
  const auto sweep_stripe = [&](Int first_w) {
    for (Int w = first_w; w <= max_w; w += jobs) {
      auto& found = per_w[static_cast<size_t>(w - 3)];
      for (Int b = 1; b <= w - 2; ++b) {
        for (Int t = 1; t <= w - 1; ++t) {
          const Braid braid = Braid::of(w, b, t);
          std::vector<Slope> closed = filling_slopes(braid);
          std::vector<Slope> enumerated = map_slopes(map, braid);
          if (closed != enumerated)
            found.push_back(
                {braid, std::move(closed), std::move(enumerated)});
        }
      }
    }
  };

  std::vector<std::thread> workers;
  for (int stripe = 1; stripe < jobs; ++stripe)
    workers.emplace_back(sweep_stripe, Int{3} + stripe);
  sweep_stripe(3);
  for (auto& worker : workers) worker.join();

  for (Int w = 3; w <= max_w; ++w) {
    report.triples_checked += (w - 2) * (w - 1);
    auto& found = per_w[static_cast<size_t>(w - 3)];
    report.mismatches.insert(report.mismatches.end(),
                             std::make_move_iterator(found.begin()),
                             std::make_move_iterator(found.end()));
  }
  return report;
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rat rat_from_128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<Int>::max();
  if (num > kMax || num < -kMax || den > kMax)
    throw std::overflow_error("Rat: value out of 64-bit range");
  return Rat(static_cast<Int>(num), static_cast<Int>(den));
}

}  // namespace

Rat::Rat(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Int g = std::gcd(n < 0 ? -n : n, d);
  num = n / g;
  den = d / g;
}

Rat operator+(Rat a, Rat b) {
  return rat_from_128(
      static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
      static_cast<__int128>(a.den) * b.den);
}

Rat operator-(Rat a, Rat b) {
  return rat_from_128(
      static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
      static_cast<__int128>(a.den) * b.den);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Int rat_floor(const Rat& r) {
  Int quot = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --quot;
  return quot;
}

Rat rat_mod(const Rat& a, Int m) {
  if (m <= 0) throw std::invalid_argument("rat_mod: need positive modulus");
  const Rat scaled(a.num, a.den * m);
  return a - Rat(rat_floor(scaled) * m, 1);
}

TransitPath simulate_transits(const AllowableTuple& tuple) {
  const AllowableTuple valid =
      AllowableTuple::of(tuple.p, tuple.q, tuple.k, tuple.x, tuple.eps);
  const Int n = valid.k * valid.p + q_bar_x(valid.p, valid.q, valid.x);
  if (n < 1)
    throw std::invalid_argument("simulate_transits: tuple has no transits");
  if (n > kMaxW)
    throw std::invalid_argument(
        "simulate_transits: transit count exceeds 1000000");

  TransitPath path;
  path.tuple = valid;
  path.start_pos = Rat(1, 2);
  const Rat delta(1, 2 * (n + 1));
  const Rat step = Rat(valid.q, 1) + delta;
  // Transit j sits at (1/2 + (j+1) q + j delta) mod p: the spiral
  // advances by q + delta per transit, with the first transit offset
  // by a plain q from the start point.
  Rat pos = path.start_pos - delta;
  path.positions.reserve(static_cast<size_t>(n));
  for (Int j = 0; j < n; ++j) {
    pos = rat_mod(pos + step, valid.p);
    path.positions.push_back(pos);
  }
  path.end_pos = pos + delta;

  const std::set<Rat> distinct(path.positions.begin(), path.positions.end());
  if (static_cast<Int>(distinct.size()) != n)
    throw std::logic_error("simulate_transits: transit positions collide");
  if (rat_floor(path.positions.back()) != valid.x ||
      rat_floor(path.end_pos) != valid.x)
    throw std::logic_error(
        "simulate_transits: path does not end in its terminal rectangle");
  return path;
}

namespace {

// rank[j] = position of coords[j] in the sorted order of coords.
std::vector<Int> ranks_of(const std::vector<Rat>& coords) {
  std::vector<size_t> order(coords.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return coords[a] < coords[b]; });
  std::vector<Int> rank(coords.size());
  for (size_t r = 0; r < order.size(); ++r)
    rank[order[r]] = static_cast<Int>(r);
  return rank;
}

}  // namespace

WtMeasurement measure_w_t(const TransitPath& path) {
  const Int n = static_cast<Int>(path.positions.size());
  if (n < 1) throw std::invalid_argument("measure_w_t: empty path");
  const Int p = path.tuple.p;
  const Rat shift(path.tuple.q, 1);

  std::vector<Rat> exits;
  exits.reserve(path.positions.size());
  for (const Rat& entry : path.positions)
    exits.push_back(rat_mod(entry - shift, p));

  const std::vector<Int> entry_rank = ranks_of(path.positions);
  const std::vector<Int> exit_rank = ranks_of(exits);

  WtMeasurement measured;
  measured.w = n;
  for (Int j = 0; j < n; ++j) {
    const Int gap = mod_floor(entry_rank[static_cast<size_t>(j)] -
                                  exit_rank[static_cast<size_t>(j)],
                              n);
    if (j == 0)
      measured.t = gap;
    else if (gap != measured.t)
      throw std::logic_error(
          "measure_w_t: rank shift is not constant across transits");
  }
  return measured;
}

SweepReport phi_closed_vs_direct_sweep(Int max_p) {
  if (max_p < 2 || max_p > 5000)
    throw std::invalid_argument(
        "phi_closed_vs_direct_sweep: need 2 <= max_p <= 5000");
  SweepReport report;
  for (Int p = 2; p <= max_p; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::set<std::pair<Int, Int>> shapes;
      shapes.emplace(1, 1);
      shapes.emplace(1, q);
      shapes.emplace(q, q);
      shapes.emplace(p - q, p - q);
      shapes.emplace(p - q, q);
      shapes.emplace(p - 1, p - 1);
      shapes.emplace(p - 1, q);
      for (const auto& [x, y] : shapes) {
        ++report.checked;
        const Int closed = phi_closed(p, q, x, y);
        const Int direct = phi_direct(p, q, x, y);
        if (closed != direct) {
          std::ostringstream msg;
          msg << "p=" << p << " q=" << q << " x=" << x << " y=" << y
              << ": closed=" << closed << " direct=" << direct;
          report.mismatches.push_back(msg.str());
        }
      }
    }
  }
  return report;
}

SweepReport transit_vs_formula_sweep(Int max_p, Int max_k) {
  if (max_p < 2 || max_p > 2000)
    throw std::invalid_argument(
        "transit_vs_formula_sweep: need 2 <= max_p <= 2000");
  if (max_k < 0 || max_k > 100)
    throw std::invalid_argument(
        "transit_vs_formula_sweep: need 0 <= max_k <= 100");
  SweepReport report;
  for (Int p = 2; p <= max_p; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (Int x : end_rectangles(p, q)) {
        for (Int k = 0; k <= max_k; ++k) {
          for (int eps : {+1, -1}) {
            if (k == 0 && eps == -1) continue;
            const AllowableTuple tuple = AllowableTuple::of(p, q, k, x, eps);
            const TupleImage image = tuple_to_braid(tuple);
            const WtMeasurement measured = measure_w_t(simulate_transits(tuple));
            ++report.checked;
            if (measured.w != image.w || measured.t != image.t) {
              std::ostringstream msg;
              msg << "p=" << p << " q=" << q << " k=" << k << " x=" << x
                  << " eps=" << eps << ": measured (w,t)=(" << measured.w
                  << "," << measured.t << "), formula (" << image.w << ","
                  << image.t << ")";
              report.mismatches.push_back(msg.str());
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace onebridge
