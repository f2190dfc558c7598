#pragma once

#include <cstdint>

#include "sopq/halfint.hpp"
#include "sopq/ktypes.hpp"

namespace sopq {

/// Highest weight of a K-type of the metaplectic double cover of U(m).
struct SpKType {
  int m = 0;
  HalfIntVec weight;  // nonincreasing, single coset of Z or Z + 1/2

  friend bool operator==(const SpKType&, const SpKType&) = default;
};

/// 2m + 1 >= p + q: the composed lift is nonzero on pi or pi (x) det.
bool nonvanishing_stable(int p, int q, int m);

/// Sum of the entries of both magnitude-form weights.
/// Throws InputError on a negative entry.
std::int64_t degree(const HalfIntVec& xi1, const HalfIntVec& xi2);

/// theta_0(q, p; 2m)((xi2, +) (x) (xi1, +)) = (xi2, 0, -xi1) + (q-p)/2.
/// xi2 is an SO(q) weight, xi1 an SO(p) weight, both in (., +) form.
SpKType theta0_forward(int q, int p, int m, const SOWeight& xi2, const SOWeight& xi1);

/// Inverse of theta0_forward onto the O(q) x O(p) side: strips the
/// constant (q-p)/2 and splits the positive and negative parts.
/// Throws InputError when the weight is not in the image.
SOpqKType theta0_inverse(const SpKType& w, int q, int p);

/// theta_0(2m; q+d, p+d) composed with theta_0(q, p; 2m) on K-types:
/// ((xi2 (+) 0, +), (xi1 (+) 0, +)) of S(O(q+d) O(p+d)).
SOpqKType theta0_back(int m, int q, int p, int d, const SOWeight& xi2, const SOWeight& xi1);

/// Degree of an Sp K-type relative to the dual pair (O(q, p), Sp(2m)):
/// sum of |w_i - (q-p)/2|.
std::int64_t sp_degree(const SpKType& w, int q, int p);

}  // namespace sopq
