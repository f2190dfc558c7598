#pragma once

#include <vector>

#include "sopq/halfint.hpp"

namespace sopq {

/// Signature (p, q) of SO(p, q), normalized so that p <= q.
class Signature {
 public:
  Signature() = default;
  /// Throws InputError on negative entries.
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int rank() const { return p_; }
  /// True when the caller supplied (q, p) with q < p.
  bool swapped() const { return swapped_; }

  friend bool operator==(const Signature& a, const Signature& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  int p_ = 0;
  int q_ = 0;
  bool swapped_ = false;
};

struct RestrictedRoot {
  HalfIntVec vector;  // +-e_i +- e_j or +-e_i
  int multiplicity = 1;

  friend bool operator==(const RestrictedRoot&, const RestrictedRoot&) = default;
};

/// All roots of the restricted root system (both signs), in a fixed order:
/// long roots +-e_i +- e_j for i < j, then short roots +-e_i when q > p.
std::vector<RestrictedRoot> restricted_roots(const Signature& sig);

/// ((q+p)/2 - 1, (q+p)/2 - 2, ..., (q-p)/2), length p.
HalfIntVec rho(const Signature& sig);

/// Open positive Weyl chamber of a_m.
bool in_open_chamber(const HalfIntVec& h, const Signature& sig);

/// GL(1)^d exponents (m - (p+q)/2, ..., m - (p+q)/2 - d + 1) of the character
/// |det|^{m - (p+q+d-1)/2} of GL(d) shifted by rho(SL(d)).
HalfIntVec gl_rho_shift(HalfInt m, int p, int q, int d);

}  // namespace sopq
