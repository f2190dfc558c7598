#pragma once

#include "sopq/halfint.hpp"
#include "sopq/rootdata.hpp"

namespace sopq {

/// Exponent bound on |H^+|. strict encodes "for some eps > 0, first
/// coordinate minus eps", which is equivalent to strict dominance.
struct ExponentBound {
  HalfIntVec vector;
  bool strict = true;

  friend bool operator==(const ExponentBound&, const ExponentBound&) = default;
};

/// (m+2-p-q, m+3-p-q, ..., m+1-q), strict. Throws InputError for p > q.
ExponentBound theoremA_bound(int p, int q, int m);

/// The same bound written through s = 2m+1-p-q:
/// (-(p+q)/2 + (s+3)/2, ..., (p-q)/2 + (s+1)/2), strict.
ExponentBound growth_bound_from_s(int p, int q, int s);

/// (rearrange_desc(|v|) padded to the rank) - rho(sig).
HalfIntVec decay_exponent(const HalfIntVec& v, const Signature& sig);

bool satisfies_bound(const HalfIntVec& e, const ExponentBound& bound);

/// eta + (mu, 0_{q+d}) - (d+1, ..., d+p, 0_{q+d}) < 0.
bool theorem5_condition(const HalfIntVec& eta_vec, const HalfIntVec& mu, int p, int q, int d);

/// Every prefix sum of v + rho(sig) is <= 0.
bool tempered_leading_ok(const HalfIntVec& v, const Signature& sig);

}  // namespace sopq
