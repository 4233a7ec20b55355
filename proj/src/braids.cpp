#include "onebridge/braids.hpp"

#include <numeric>
#include <stdexcept>

namespace onebridge {

Braid Braid::of(Int w, Int b, Int t) {
  if (w < 3 || w > kMaxW)
    throw std::invalid_argument("braid: w must satisfy 3 <= w <= 1000000");
  if (b < 1 || b > w - 2)
    throw std::invalid_argument("braid: b must satisfy 1 <= b <= w-2");
  Int tr = mod_floor(t, w);
  if (tr == 0)
    throw std::invalid_argument("braid: t must satisfy 1 <= t <= w-1 (t reduces to 0 mod w)");
  return Braid{w, b, tr};
}

Slope Slope::of(Int p, Int q) {
  if (p < 2 || p > kMaxP)
    throw std::invalid_argument("slope: p must satisfy 2 <= p <= 1000001");
  if (q <= 0 || q >= p) throw std::invalid_argument("slope: need p > q > 0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("slope: need gcd(p, q) = 1");
  return Slope{p, q};
}

AllowableTuple AllowableTuple::of(Int p, Int q, Int k, Int x, int eps) {
  Slope::of(p, q);  // p > q > 0, coprime, bounded
  if (k < 0) throw std::invalid_argument("tuple: need k >= 0");
  if (k > kMaxW) throw std::invalid_argument("tuple: k exceeds the w <= 1000000 guard");
  if (x < 0 || x >= p) throw std::invalid_argument("tuple: need 0 <= x < p");
  if (eps != 1 && eps != -1) throw std::invalid_argument("tuple: eps must be +1 or -1");
  if (k == 0 && eps != 1) throw std::invalid_argument("tuple: eps must be +1 when k = 0");
  return AllowableTuple{p, q, k, x, eps};
}

std::vector<Int> braid_word(const Braid& k) {
  std::vector<Int> word;
  word.reserve(static_cast<size_t>(k.b + k.t * (k.w - 1)));
  for (Int i = k.b; i >= 1; --i) word.push_back(i);
  for (Int rep = 0; rep < k.t; ++rep)
    for (Int i = k.w - 1; i >= 1; --i) word.push_back(i);
  return word;
}

std::vector<Int> closure_permutation(const Braid& k) {
  std::vector<Int> perm(static_cast<size_t>(k.w));
  for (Int i = 0; i < k.w; ++i) {
    Int j = mod_floor(i + k.t, k.w);            // rho^t
    perm[static_cast<size_t>(i)] = j <= k.b ? (j + 1) % (k.b + 1) : j;  // gamma_b
  }
  return perm;
}

std::vector<std::vector<Int>> closure_cycles(const Braid& k) {
  std::vector<Int> perm = closure_permutation(k);
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<Int>> cycles;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Int> cyc;
    for (size_t i = start; !seen[i]; i = static_cast<size_t>(perm[i])) {
      seen[i] = true;
      cyc.push_back(static_cast<Int>(i) + 1);  // report 1-based labels
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int component_count(const Braid& k) {
  return static_cast<int>(closure_cycles(k).size());
}

bool is_knot(const Braid& k) {
  // Walk the single cycle through strand 0; a knot closes after w steps.
  std::vector<Int> perm = closure_permutation(k);
  Int steps = 0;
  Int i = 0;
  do {
    i = perm[static_cast<size_t>(i)];
    ++steps;
  } while (i != 0);
  return steps == k.w;
}

Slope mirror_slope(Slope s) { return Slope{s.p, s.p - s.q}; }

MirrorImage mirror(const Braid& k) {
  Int nb = k.w - k.b - 1;  // always within 1..w-2
  Int nt = mod_floor(k.t - k.b - 1, k.w);
  MirrorImage m{k.w, nb, nt, std::nullopt};
  if (nt >= 1 && nb >= 1 && nb <= k.w - 2) m.braid = Braid{k.w, nb, nt};
  return m;
}

std::optional<Braid> mirror_partner(const Braid& k) {
  if (k.t == k.w - 1) return std::nullopt;
  return Braid{k.w, k.w - k.b - 1, k.w - k.t - 1};
}

bool is_canonical(const Braid& k) {
  if (2 * k.b >= k.w) return false;
  if (2 * k.b == k.w - 1 && 2 * k.t >= k.w) return false;
  return true;
}

}  // namespace onebridge
