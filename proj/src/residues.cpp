#include "onebridge/residues.hpp"

#include <numeric>
#include <stdexcept>

namespace onebridge {

Int mod_floor(Int a, Int m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Bezout ext_gcd(Int a, Int b) {
  if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd: gcd(0, 0) undefined");
  // Invariants: r0 == u0*a + v0*b and r1 == u1*a + v1*b.
  Int r0 = a, r1 = b;
  Int u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division keeps the identities exact
    r0 -= q * r1;
    u0 -= q * u1;
    v0 -= q * v1;
    std::swap(r0, r1);
    std::swap(u0, u1);
    std::swap(v0, v1);
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  return {r0, u0, v0};
}

std::optional<Int> inverse_mod(Int a, Int m) {
  if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be >= 2");
  Bezout bz = ext_gcd(mod_floor(a, m), m);
  if (bz.g != 1) return std::nullopt;
  return mod_floor(bz.u, m);
}

namespace {

void check_coprime_pair(Int p, Int q, const char* who) {
  if (p < 2 || p > kMaxP)
    throw std::invalid_argument(std::string(who) + ": need 2 <= p <= 1000001");
  if (q <= 0 || q >= p)
    throw std::invalid_argument(std::string(who) + ": need 0 < q < p");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument(std::string(who) + ": need gcd(p, q) = 1");
}

}  // namespace

BarPair bar_pair(Int p, Int q) {
  check_coprime_pair(p, q, "bar_pair");
  Int qb = *inverse_mod(q, p);  // exists: gcd(p, q) = 1
  // q_bar*q = p_bar*p + 1 exactly; the division below is exact.
  Int pb = (qb * q - 1) / p;
  return {p, q, qb, pb};
}

Int q_bar_x(Int p, Int q, Int x) {
  check_coprime_pair(p, q, "q_bar_x");
  if (x < 0 || x >= p) throw std::invalid_argument("q_bar_x: need 0 <= x < p");
  BarPair bp = bar_pair(p, q);
  return mod_floor(bp.q_bar * x, p);
}

ResidueSet residue_set(Int p, Int q, Int x) {
  Int count = q_bar_x(p, q, x);  // validates inputs
  ResidueSet s{p, q, x, count, {}};
  s.elements.reserve(static_cast<size_t>(count));
  for (Int i = 1; i <= count; ++i) s.elements.push_back(mod_floor(i * q, p));
  return s;
}

Int phi_direct(Int p, Int q, Int x, Int y) {
  Int count = q_bar_x(p, q, x);  // validates p, q, x
  if (y < 0 || y > p) throw std::invalid_argument("phi_direct: need 0 <= y <= p");
  Int n = 0;
  for (Int i = 1; i <= count; ++i) {
    Int r = mod_floor(i * q, p);
    if (r > 0 && r < y) ++n;
  }
  return n;
}

Int phi_closed(Int p, Int q, Int x, Int y) {
  BarPair bp = bar_pair(p, q);  // validates p, q
  if (x == 1 && y == 1) return 0;
  if (x == 1 && y == q) return bp.p_bar;
  if (x == q && y == q) return 0;
  if (x == p - q && y == p - q) return p - q - 1;
  if (x == p - q && y == q) return q - 1;
  if (x == p - 1 && y == p - 1) return p - bp.q_bar - 1;
  if (x == p - 1 && y == q) return q - bp.p_bar - 1;
  throw std::invalid_argument("phi_closed: (x, y) is not a tabulated shape");
}

Int jump(Int p, Int x) {
  if (p < 2 || x <= 0 || x >= p) throw std::invalid_argument("jump: need 0 < x < p");
  return x < p - x ? x : p - x;
}

}  // namespace onebridge
