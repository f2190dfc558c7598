#pragma once

#include <vector>

#include "sopq/halfint.hpp"

namespace sopq {

enum class Sign { Plus, Minus };

/// Highest weight of an irreducible representation of SO(p):
/// xi_1 >= ... >= xi_[p/2] >= 0 for p odd, and
/// xi_1 >= ... >= xi_{p/2-1} >= |xi_{p/2}| for p even.
/// SO(1) carries the empty weight "(0)". SO(0) (the trivial group) is
/// admitted with the empty weight for degenerate base cases.
class SOWeight {
 public:
  SOWeight() = default;

  int p() const { return p_; }
  const HalfIntVec& xi() const { return xi_; }
  std::size_t rank() const { return xi_.size(); }

  /// Self-associate weights extend to two O(p)-types.
  bool extends() const;
  bool last_nonnegative() const { return xi_.empty() || !xi_.back().is_negative(); }
  bool is_zero() const;
  SOWeight abs() const;
  /// xi^- = (xi_1, ..., -xi_{p/2}) for even p; identity otherwise.
  SOWeight associate() const;

  static SOWeight zero(int p);

  friend bool operator==(const SOWeight&, const SOWeight&) = default;

 private:
  friend SOWeight validate_so_weight(int p, HalfIntVec xi);
  SOWeight(int p, HalfIntVec xi) : p_(p), xi_(std::move(xi)) {}

  int p_ = 0;
  HalfIntVec xi_;
};

/// Throws InputError naming the violated condition.
SOWeight validate_so_weight(int p, HalfIntVec xi);

/// Irreducible of O(p): (xi, +-) when xi extends, or the induced (|xi|, +).
struct OType {
  enum class Shape { Signed, Induced };
  Shape shape = Shape::Signed;
  SOWeight weight;  // nonnegative last entry
  Sign sign = Sign::Plus;

  /// SO(p)-content of the restriction: {xi} or {xi, xi^-}.
  std::vector<SOWeight> restriction() const;

  friend bool operator==(const OType&, const OType&) = default;
};

std::vector<OType> o_extensions(const SOWeight& w);

/// Irreducible of S(O(p)O(q)): (xi, eta, +-) when xi (x) eta extends to
/// O(p)O(q), otherwise the fused (|xi|, |eta|, +).
struct SOpqKType {
  enum class Shape { Extended, Fused };
  Shape shape = Shape::Extended;
  SOWeight xi;
  SOWeight eta;
  Sign sign = Sign::Plus;

  int p() const { return xi.p(); }
  int q() const { return eta.p(); }
  bool is_plus_extended() const { return shape == Shape::Extended && sign == Sign::Plus; }

  friend bool operator==(const SOpqKType&, const SOpqKType&) = default;
};

/// Throws InputError when the shape is illegal for the weights.
SOpqKType make_sopq_ktype(SOpqKType::Shape shape, SOWeight xi, SOWeight eta, Sign sign);

std::vector<SOpqKType> sopq_type(const SOWeight& xi, const SOWeight& eta);

/// Zero-pads both weights to the ranks of S(O(p+d)O(q+d)). A fused type
/// becomes Extended with sign + once d > 0.
SOpqKType pad_ktype(const SOpqKType& t, int d);

/// Zero-pads an SO(p) weight to SO(p + d).
SOWeight pad_weight(const SOWeight& w, int d);

const char* to_string(Sign s);

}  // namespace sopq
