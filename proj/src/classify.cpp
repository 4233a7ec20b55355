#include "onebridge/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace onebridge {

TupleImage tuple_to_braid(const AllowableTuple& tup) {
  // Re-validate so aggregate-constructed tuples cannot sneak through.
  AllowableTuple t = AllowableTuple::of(tup.p, tup.q, tup.k, tup.x, tup.eps);
  TupleImage img;
  img.tuple = t;
  Int qbx = q_bar_x(t.p, t.q, t.x);
  img.w = t.k * t.p + qbx;
  img.t = t.k * t.q + phi_direct(t.p, t.q, t.x, t.q);
  img.b = t.k * (t.x + t.eps) + phi_direct(t.p, t.q, t.x, t.x);
  if (img.w < 3)
    img.violation = "w >= 3";
  else if (img.w > kMaxW)
    img.violation = "w <= 1000000";
  else if (img.b < 1 || img.b > img.w - 2)
    img.violation = "1 <= b <= w-2";
  else if (img.t < 1 || img.t > img.w - 1)
    img.violation = "1 <= t <= w-1";
  else
    img.braid = Braid{img.w, img.b, img.t};
  return img;
}

namespace {

// Append one witness after re-deriving the braid from the tuple; a
// witness that fails to reproduce its braid means the case arithmetic
// and the tuple arithmetic disagree, which is a hard internal fault.
void add_witness(std::map<Slope, std::vector<CaseWitness>>& found, const Braid& braid,
                 int case_id, const AllowableTuple& tup) {
  TupleImage img = tuple_to_braid(tup);
  if (!img.valid() || *img.braid != braid)
    throw std::logic_error("fillings_of: witness tuple fails to reproduce its braid");
  found[Slope{tup.p, tup.q}].push_back(CaseWitness{case_id, tup});
}

}  // namespace

std::vector<SlopeFillings> fillings_of(const Braid& braid) {
  const Int w = braid.w, b = braid.b, t = braid.t;
  std::map<Slope, std::vector<CaseWitness>> found;

  // Case 1: q w - p t = 1 forces p = -(t^-1) mod w, q = (1 + p t)/w.
  if (auto inv = inverse_mod(t, w)) {
    Int p = w - *inv;  // *inv is in 1..w-1, so p is too
    Int q = (1 + p * t) / w;
    if ((1 + p * t) % w != 0)
      throw std::logic_error("fillings_of: case 1 quotient not exact");
    if (q >= 1 && q < p && b == 2 * (w / p))
      add_witness(found, braid, 1, AllowableTuple::of(p, q, w / p, 1, +1));
  }

  // Case 2: the slope is ((w-1)/k, t/k) with k = gcd(w-1, t).
  {
    Int k = std::gcd(w - 1, t);
    Int p = (w - 1) / k, q = t / k;
    if (q >= 1 && q < p) {
      for (int eps : {+1, -1})
        if (b == k * (q + eps))
          add_witness(found, braid, 2, AllowableTuple::of(p, q, k, q, eps));
    }
  }

  // Case 3: the slope is ((w+1)/(k+1), (t+1)/(k+1)) with
  // k = gcd(w+1, t+1) - 1; eps = +1 is forced when k = 0.
  {
    Int g = std::gcd(w + 1, t + 1);
    Int k = g - 1;
    Int p = (w + 1) / g, q = (t + 1) / g;
    if (q >= 1 && q < p) {
      for (int eps : {+1, -1}) {
        if (k == 0 && eps == -1) continue;
        if (b == k * (p - q + eps) + (p - q - 1))
          add_witness(found, braid, 3, AllowableTuple::of(p, q, k, p - q, eps));
      }
    }
  }

  // Case 4: p (t+1) - q w = 1 forces p = (t+1)^-1 mod w.
  if (auto inv = inverse_mod(t + 1, w)) {
    Int p = *inv;
    Int num = p * (t + 1) - 1;
    if (num % w != 0)
      throw std::logic_error("fillings_of: case 4 quotient not exact");
    Int q = num / w;
    if (q >= 1 && q < p) {
      BarPair bp = bar_pair(p, q);
      if (b == (w / p) * (p - 2) + (p - bp.q_bar - 1))
        add_witness(found, braid, 4, AllowableTuple::of(p, q, w / p, p - 1, -1));
    }
  }

  std::vector<SlopeFillings> out;
  out.reserve(found.size());
  for (auto& [slope, witnesses] : found) out.push_back(SlopeFillings{slope, witnesses});
  return out;  // map iteration is already sorted by slope
}

std::vector<Slope> filling_slopes(const Braid& braid) {
  std::vector<Slope> out;
  for (const auto& f : fillings_of(braid)) out.push_back(f.slope);
  return out;
}

std::vector<std::pair<Braid, AllowableTuple>> knots_for_slope(Slope s, Int max_w) {
  if (max_w < 3 || max_w > kMaxW)
    throw std::invalid_argument("knots_for_slope: need 3 <= max_w <= 1000000");
  const Int p = s.p, q = s.q;

  // The four x values, set-deduplicated but kept in this order so the
  // generating tuple attached to each braid is deterministic.
  std::vector<Int> xs;
  for (Int x : {Int{1}, q, p - q, p - 1})
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);

  std::map<Braid, AllowableTuple> found;
  for (Int x : xs) {
    Int qbx = q_bar_x(p, q, x);
    if (qbx == 0) continue;
    for (Int k = 0; k * p + qbx <= max_w; ++k) {
      for (int eps : {+1, -1}) {
        if (k == 0 && eps == -1) continue;
        TupleImage img = tuple_to_braid(AllowableTuple::of(p, q, k, x, eps));
        if (img.valid()) found.emplace(*img.braid, img.tuple);  // first tuple wins
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace onebridge
