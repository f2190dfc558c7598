#include "sopq/ktypes.hpp"

#include <algorithm>

#include "sopq/error.hpp"

namespace sopq {

bool SOWeight::extends() const {
  if (p_ % 2 == 1 || xi_.empty()) return true;
  return xi_.back().is_zero();
}

bool SOWeight::is_zero() const {
  return std::all_of(xi_.begin(), xi_.end(), [](HalfInt h) { return h.is_zero(); });
}

SOWeight SOWeight::abs() const {
  SOWeight out = *this;
  if (!out.xi_.empty()) out.xi_.back() = out.xi_.back().abs();
  return out;
}

SOWeight SOWeight::associate() const {
  SOWeight out = *this;
  if (p_ % 2 == 0 && !out.xi_.empty()) out.xi_.back() = -out.xi_.back();
  return out;
}

SOWeight SOWeight::zero(int p) { return validate_so_weight(p, HalfIntVec(p < 0 ? 0 : p / 2)); }

SOWeight validate_so_weight(int p, HalfIntVec xi) {
  if (p < 0) throw InputError("SO(p) weight: p must be nonnegative");
  const auto rank = static_cast<std::size_t>(p / 2);
  if (xi.size() != rank)
    throw InputError("SO(" + std::to_string(p) + ") weight must have length " + std::to_string(rank) + ", got " +
                     std::to_string(xi.size()));
  for (auto h : xi)
    if (!h.is_integer()) throw InputError("SO(p) weight entries must be integers");
  for (std::size_t i = 0; i + 1 < rank; ++i) {
    // For even p the final inequality is against |xi_{p/2}|.
    HalfInt next = (i + 2 == rank && p % 2 == 0) ? xi[i + 1].abs() : xi[i + 1];
    if (xi[i] < next) throw InputError("SO(" + std::to_string(p) + ") weight is not dominant: " + to_string(xi));
  }
  if (p % 2 == 1 && rank > 0 && xi.back().is_negative())
    throw InputError("SO(" + std::to_string(p) + ") weight: last entry must be >= 0 for odd p");
  return SOWeight(p, std::move(xi));
}

std::vector<SOWeight> OType::restriction() const {
  if (shape == Shape::Induced) return {weight, weight.associate()};
  return {weight};
}

std::vector<OType> o_extensions(const SOWeight& w) {
  if (w.extends()) {
    return {OType{OType::Shape::Signed, w, Sign::Plus}, OType{OType::Shape::Signed, w, Sign::Minus}};
  }
  return {OType{OType::Shape::Induced, w.abs(), Sign::Plus}};
}

SOpqKType make_sopq_ktype(SOpqKType::Shape shape, SOWeight xi, SOWeight eta, Sign sign) {
  const bool both_extend = xi.extends() && eta.extends();
  if (shape == SOpqKType::Shape::Extended) {
    if (!both_extend) throw InputError("extended K-type (xi, eta, +-) needs both weights to extend");
    return SOpqKType{shape, std::move(xi), std::move(eta), sign};
  }
  if (both_extend) throw InputError("fused K-type (|xi|, |eta|, +) needs a non-extending weight");
  if (sign != Sign::Plus) throw InputError("fused K-type carries sign +");
  if (!xi.last_nonnegative() || !eta.last_nonnegative())
    throw InputError("fused K-type is parametrized by |xi|, |eta|");
  return SOpqKType{shape, std::move(xi), std::move(eta), Sign::Plus};
}

std::vector<SOpqKType> sopq_type(const SOWeight& xi, const SOWeight& eta) {
  if (xi.extends() && eta.extends()) {
    return {SOpqKType{SOpqKType::Shape::Extended, xi, eta, Sign::Plus},
            SOpqKType{SOpqKType::Shape::Extended, xi, eta, Sign::Minus}};
  }
  return {SOpqKType{SOpqKType::Shape::Fused, xi.abs(), eta.abs(), Sign::Plus}};
}

SOWeight pad_weight(const SOWeight& w, int d) {
  if (d < 0) throw InputError("padding length must be nonnegative");
  return validate_so_weight(w.p() + d, pad_zeros(w.xi(), static_cast<std::size_t>((w.p() + d) / 2)));
}

SOpqKType pad_ktype(const SOpqKType& t, int d) {
  if (d < 0) throw InputError("padding length must be nonnegative");
  if (d == 0) return t;
  SOpqKType out{SOpqKType::Shape::Extended, pad_weight(t.xi, d), pad_weight(t.eta, d), t.sign};
  if (t.shape == SOpqKType::Shape::Fused) out.sign = Sign::Plus;
  return out;
}

const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

}  // namespace sopq
