#pragma once

#include <span>
#include <vector>

#include "sopq/halfint.hpp"
#include "sopq/ktypes.hpp"

namespace sopq {

/// A point I_n(s) of the degenerate principal series of SO(n, n).
struct DPSPoint {
  int n = 2;
  HalfInt s;

  /// s in (n-1)/2 + Z, where I_n(s) is reducible.
  bool on_reducible_grid() const;
};

/// Throws InputError for n < 2.
DPSPoint make_dps_point(int n, HalfInt s);

/// Composition factor V_i(s), or V_{n/2}(s)^{+-} for even n.
struct ConstituentId {
  enum class Kind { Small, Large };
  Kind kind = Kind::Small;
  int index = 0;            // Small only
  Sign large = Sign::Plus;  // Large only

  static ConstituentId small(int i) { return {Kind::Small, i, Sign::Plus}; }
  static ConstituentId large_plus() { return {Kind::Large, 0, Sign::Plus}; }
  static ConstituentId large_minus() { return {Kind::Large, 0, Sign::Minus}; }

  friend bool operator==(const ConstituentId&, const ConstituentId&) = default;
};

/// ((n-1)/2 + s, (n-3)/2 + s, ..., -(n-1)/2 + s).
HalfIntVec infinitesimal_char_In(const DPSPoint& pt);

/// Throws InputError when s is off the reducible grid.
bool constituent_exists(const DPSPoint& pt, const ConstituentId& c);

/// Existing constituents in index order, Large(+) and Large(-) last.
std::vector<ConstituentId> existing_constituents(const DPSPoint& pt);

/// Whether the diagonal K-type (lambda, lambda) occurs in constituent c.
/// Throws InputError for a nonexistent constituent or a weight of the
/// wrong group.
bool ktype_in_constituent(const DPSPoint& pt, const ConstituentId& c, const SOWeight& lambda);

bool constituent_is_unitary(const DPSPoint& pt, const ConstituentId& c);

/// eta(n-m-1, m) = (n-m-1, ..., m, m, m-1, m-1, ..., 1, 1, 0).
HalfIntVec eta(int n, int m);

/// Decay exponent of the small constituent V_m:
/// (-m) repeated n-2m times, then (-m+1, -m+1), ..., (0, 0).
HalfIntVec vm_decay_exponent(int n, int m);

/// prod_i (e^{H_i} + e^{-H_i})^{-1/2}; diagnostic only.
double fN_eval(std::span<const double> h);

}  // namespace sopq
