#include "sopq/rootdata.hpp"

#include <cstdlib>

#include "sopq/error.hpp"

namespace sopq {

Signature::Signature(int p, int q) {
  if (p < 0 || q < 0) throw InputError("signature entries must be nonnegative");
  swapped_ = p > q;
  p_ = swapped_ ? q : p;
  q_ = swapped_ ? p : q;
}

std::vector<RestrictedRoot> restricted_roots(const Signature& sig) {
  const int p = sig.p();
  std::vector<RestrictedRoot> roots;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          HalfIntVec v(p);
          v[i] = HalfInt(si);
          v[j] = HalfInt(sj);
          roots.push_back({std::move(v), 1});
        }
      }
    }
  }
  if (sig.q() > p) {
    for (int i = 0; i < p; ++i) {
      for (int si : {1, -1}) {
        HalfIntVec v(p);
        v[i] = HalfInt(si);
        roots.push_back({std::move(v), sig.q() - p});
      }
    }
  }
  return roots;
}

HalfIntVec rho(const Signature& sig) {
  HalfIntVec out(sig.p());
  const HalfInt top = HalfInt::half(sig.p() + sig.q());
  for (int i = 0; i < sig.p(); ++i) out[i] = top - HalfInt(i + 1);
  return out;
}

bool in_open_chamber(const HalfIntVec& h, const Signature& sig) {
  const auto p = static_cast<std::size_t>(sig.p());
  if (h.size() != p) throw InputError("chamber test: vector length must equal the real rank");
  if (p == 0) return true;
  if (sig.q() > sig.p()) {
    for (std::size_t i = 0; i + 1 < p; ++i)
      if (!(h[i] > h[i + 1])) return false;
    return h[p - 1] > HalfInt{};
  }
  // p == q: the last coordinate is only constrained in absolute value.
  if (p == 1) return true;
  for (std::size_t i = 0; i + 2 < p; ++i)
    if (!(h[i] > h[i + 1])) return false;
  return h[p - 2] > h[p - 1].abs();
}

HalfIntVec gl_rho_shift(HalfInt m, int p, int q, int d) {
  if (d < 1) throw InputError("gl_rho_shift needs d >= 1");
  HalfIntVec out(d);
  const HalfInt first = m - HalfInt::half(p + q);
  for (int i = 0; i < d; ++i) out[i] = first - HalfInt(i);
  return out;
}

}  // namespace sopq
