#include "sopq/theta.hpp"

#include <algorithm>

#include "sopq/error.hpp"

namespace sopq {

bool nonvanishing_stable(int p, int q, int m) { return 2 * m + 1 >= p + q; }

std::int64_t degree(const HalfIntVec& xi1, const HalfIntVec& xi2) {
  HalfInt total;
  for (const auto* v : {&xi1, &xi2}) {
    for (auto h : *v) {
      if (h.is_negative()) throw InputError("degree needs magnitude-form weights");
      total += h;
    }
  }
  if (!total.is_integer()) throw InputError("degree of SO weights must be an integer");
  return total.to_integer();
}

SpKType theta0_forward(int q, int p, int m, const SOWeight& xi2, const SOWeight& xi1) {
  if (!nonvanishing_stable(p, q, m))
    throw InputError("theta_0 needs 2m + 1 >= p + q (m = " + std::to_string(m) + ", p + q = " +
                     std::to_string(p + q) + ")");
  if (xi2.p() != q || xi1.p() != p) throw InputError("theta_0 weights must live on SO(q) and SO(p)");
  if (!xi2.last_nonnegative() || !xi1.last_nonnegative())
    throw InputError("theta_0 is defined on (xi, +) types with nonnegative last entries");
  const auto zeros = static_cast<long>(m) - static_cast<long>(xi2.rank()) - static_cast<long>(xi1.rank());
  if (zeros < 0) throw InputError("theta_0: zero block would have negative length");

  SpKType out{m, {}};
  out.weight.reserve(m);
  const HalfInt shift = HalfInt::half(q - p);
  for (auto h : xi2.xi()) out.weight.push_back(h + shift);
  for (long i = 0; i < zeros; ++i) out.weight.push_back(shift);
  for (auto it = xi1.xi().rbegin(); it != xi1.xi().rend(); ++it) out.weight.push_back(shift - *it);
  return out;
}

SOpqKType theta0_inverse(const SpKType& w, int q, int p) {
  const HalfInt shift = HalfInt::half(q - p);
  HalfIntVec positive, negative;
  HalfInt previous;
  bool first = true;
  for (auto h : w.weight) {
    if (!first && h > previous) throw InputError("Sp K-type weight must be nonincreasing");
    previous = h;
    first = false;
    HalfInt x = h - shift;
    if (!x.is_integer()) throw InputError("Sp K-type weight is not in the coset (q-p)/2 + Z");
    if (x > HalfInt{}) positive.push_back(x);
    if (x < HalfInt{}) negative.push_back(-x);
  }
  std::reverse(negative.begin(), negative.end());
  const auto rank_q = static_cast<std::size_t>(q / 2);
  const auto rank_p = static_cast<std::size_t>(p / 2);
  if (positive.size() > rank_q || negative.size() > rank_p)
    throw InputError("Sp K-type is not in the image of theta_0 for this dual pair");
  auto xi2 = validate_so_weight(q, pad_zeros(std::move(positive), rank_q));
  auto xi1 = validate_so_weight(p, pad_zeros(std::move(negative), rank_p));
  const auto shape = xi2.extends() && xi1.extends() ? SOpqKType::Shape::Extended : SOpqKType::Shape::Fused;
  return make_sopq_ktype(shape, std::move(xi2), std::move(xi1), Sign::Plus);
}

SOpqKType theta0_back(int m, int q, int p, int d, const SOWeight& xi2, const SOWeight& xi1) {
  if (d < 0) throw InputError("theta0_back needs d >= 0");
  const SpKType middle = theta0_forward(q, p, m, xi2, xi1);
  // theta_0(2m; q+d, p+d) uses the same constant (q+d - (p+d))/2.
  return theta0_inverse(middle, q + d, p + d);
}

std::int64_t sp_degree(const SpKType& w, int q, int p) {
  const HalfInt shift = HalfInt::half(q - p);
  HalfInt total;
  for (auto h : w.weight) total += (h - shift).abs();
  return total.to_integer();
}

}  // namespace sopq
