#include "sopq/growth.hpp"

#include "sopq/error.hpp"
#include "sopq/weights.hpp"

namespace sopq {

ExponentBound theoremA_bound(int p, int q, int m) {
  if (p < 0 || p > q) throw InputError("growth bound needs 0 <= p <= q; normalize the signature first");
  ExponentBound out{HalfIntVec(p), true};
  for (int i = 0; i < p; ++i) out.vector[i] = HalfInt(m + 2 + i - p - q);
  return out;
}

ExponentBound growth_bound_from_s(int p, int q, int s) {
  if (p < 0 || p > q) throw InputError("growth bound needs 0 <= p <= q; normalize the signature first");
  ExponentBound out{HalfIntVec(p), true};
  const HalfInt first = HalfInt::half(s + 3) - HalfInt::half(p + q);
  for (int i = 0; i < p; ++i) out.vector[i] = first + HalfInt(i);
  return out;
}

HalfIntVec decay_exponent(const HalfIntVec& v, const Signature& sig) {
  const auto rank = static_cast<std::size_t>(sig.rank());
  if (v.size() > rank)
    throw InputError("continuous parameter of length " + std::to_string(v.size()) + " exceeds the real rank " +
                     std::to_string(rank));
  return pad_zeros(rearrange_desc(abs_vec(v)), rank) - rho(sig);
}

bool satisfies_bound(const HalfIntVec& e, const ExponentBound& bound) {
  return bound.strict ? strictly_dominated(e, bound.vector) : weakly_dominated(e, bound.vector);
}

bool theorem5_condition(const HalfIntVec& eta_vec, const HalfIntVec& mu, int p, int q, int d) {
  const auto n = static_cast<std::size_t>(p + q + d);
  if (eta_vec.size() != n) throw InputError("eta must have length p + q + d");
  if (mu.size() != static_cast<std::size_t>(p)) throw InputError("leading exponent must have length p");
  HalfIntVec shift(n);
  for (int i = 0; i < p; ++i) shift[i] = HalfInt(d + 1 + i);
  const HalfIntVec total = eta_vec + pad_zeros(mu, n) - shift;
  return strictly_dominated(total, HalfIntVec(n));
}

bool tempered_leading_ok(const HalfIntVec& v, const Signature& sig) {
  if (v.size() != static_cast<std::size_t>(sig.rank())) throw InputError("exponent length must equal the rank");
  const HalfIntVec shifted = v + rho(sig);
  return weakly_dominated(shifted, HalfIntVec(shifted.size()));
}

}  // namespace sopq
