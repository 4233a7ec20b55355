#pragma once
// Exact arithmetic over Z_p for a coprime pair (p, q): the inverse pair
// (q_bar, p_bar), the partial-inverse q_bar_x, the residue sequence S_x,
// and the interval-counting function phi, both as a literal enumeration
// (the authority) and as tabulated closed forms.

#include <optional>
#include <vector>

namespace onebridge {

using Int = long long;

// Input guards; they keep every intermediate product within 64-bit range.
inline constexpr Int kMaxW = 1'000'000;
inline constexpr Int kMaxP = kMaxW + 1;

// Representative of a modulo m in [0, m).  Requires m > 0.
Int mod_floor(Int a, Int m);

struct Bezout {
  Int g;  // gcd(a, b), non-negative
  Int u;  // u*a + v*b == g
  Int v;
};

// Extended Euclid.  Requires a, b not both zero.
Bezout ext_gcd(Int a, Int b);

// Inverse of a modulo m (m >= 2), empty when gcd(a, m) != 1.
std::optional<Int> inverse_mod(Int a, Int m);

// The unique pair (q_bar, p_bar) in Z_p x Z_p with q_bar*q == p_bar*p + 1
// as an exact integer identity.  Requires 0 < q < p, gcd(p, q) = 1,
// p <= kMaxP.
struct BarPair {
  Int p, q;
  Int q_bar, p_bar;
};
BarPair bar_pair(Int p, Int q);

// The element of Z_p with q * q_bar_x == x (mod p); equals (q_bar * x)
// mod p, and is zero iff x is zero.  Requires 0 <= x < p.
Int q_bar_x(Int p, Int q, Int x);

// S_x = { [q], [2q], ..., [q_bar_x * q] } in Z_p, in that order.
struct ResidueSet {
  Int p, q, x;
  Int count;                  // == q_bar_x(p, q, x)
  std::vector<Int> elements;  // last element is x whenever x != 0
};
ResidueSet residue_set(Int p, Int q, Int x);

// Number of i in 1..q_bar_x with 0 < (i*q mod p) < y, counted by literal
// enumeration.  Requires 0 <= y <= p.  This is the oracle the closed
// forms are checked against.
Int phi_direct(Int p, Int q, Int x, Int y);

// Closed forms, defined only for the tabulated (x, y) shapes:
//   (1,1) -> 0          (1,q) -> p_bar        (q,q) -> 0
//   (p-q,p-q) -> p-q-1  (p-q,q) -> q-1
//   (p-1,p-1) -> p-q_bar-1                    (p-1,q) -> q-p_bar-1
// Any other shape is rejected.
Int phi_closed(Int p, Int q, Int x, Int y);

// min(x, p-x).  Requires 0 < x < p.
Int jump(Int p, Int x);

}  // namespace onebridge
