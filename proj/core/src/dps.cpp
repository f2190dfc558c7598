#include "sopq/dps.hpp"

#include <cmath>

#include "sopq/error.hpp"

namespace sopq {

namespace {

void require_grid(const DPSPoint& pt) {
  if (!pt.on_reducible_grid())
    throw InputError("s = " + pt.s.to_string() + " is off the reducible grid (n-1)/2 + Z for n = " +
                     std::to_string(pt.n));
}

void require_m(int n, int m) {
  if (m < 0 || m > (n - 1) / 2)
    throw InputError("m = " + std::to_string(m) + " outside [0, " + std::to_string((n - 1) / 2) + "]");
}

// c_i = |s| - (n-1)/2 + i.
HalfInt threshold(const DPSPoint& pt, int i) { return pt.s.abs() - HalfInt::half(pt.n - 1) + HalfInt(i); }

int max_small_index(int n) { return n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1; }

}  // namespace

bool DPSPoint::on_reducible_grid() const { return ((s.doubled() - (n - 1)) % 2) == 0; }

DPSPoint make_dps_point(int n, HalfInt s) {
  if (n < 2) throw InputError("degenerate principal series needs n >= 2");
  return DPSPoint{n, s};
}

HalfIntVec infinitesimal_char_In(const DPSPoint& pt) {
  HalfIntVec out(pt.n);
  for (int i = 0; i < pt.n; ++i) out[i] = HalfInt::half(pt.n - 1 - 2 * i) + pt.s;
  return out;
}

bool constituent_exists(const DPSPoint& pt, const ConstituentId& c) {
  require_grid(pt);
  if (c.kind == ConstituentId::Kind::Large) return pt.n % 2 == 0;
  if (c.index < 0 || c.index > max_small_index(pt.n)) return false;
  return HalfInt(c.index) >= HalfInt::half(pt.n - 1) - pt.s.abs();
}

std::vector<ConstituentId> existing_constituents(const DPSPoint& pt) {
  std::vector<ConstituentId> out;
  for (int i = 0; i <= max_small_index(pt.n); ++i)
    if (constituent_exists(pt, ConstituentId::small(i))) out.push_back(ConstituentId::small(i));
  if (pt.n % 2 == 0) {
    out.push_back(ConstituentId::large_plus());
    out.push_back(ConstituentId::large_minus());
  }
  return out;
}

bool ktype_in_constituent(const DPSPoint& pt, const ConstituentId& c, const SOWeight& lambda) {
  if (!constituent_exists(pt, c)) throw InputError("constituent does not exist at this point");
  if (lambda.p() != pt.n) throw InputError("K-type must be an SO(n) weight with n = " + std::to_string(pt.n));
  const auto& xi = lambda.xi();
  const auto rank = static_cast<int>(xi.size());

  if (c.kind == ConstituentId::Kind::Large) {
    const HalfInt last = c.large == Sign::Plus ? xi.back() : -xi.back();
    return last >= pt.s.abs() + HalfInt::half(1);
  }

  const int i = c.index;
  const HalfInt ci = threshold(pt, i);
  // lambda_0 = +infinity; entries beyond the rank are zero.
  if (i >= 1 && xi[i - 1] < ci) return false;
  HalfInt next;
  if (i < rank) {
    next = xi[i];
    if (pt.n % 2 == 0 && i + 1 == rank) next = next.abs();
  }
  return ci >= next;
}

bool constituent_is_unitary(const DPSPoint& pt, const ConstituentId& c) {
  if (!constituent_exists(pt, c)) throw InputError("constituent does not exist at this point");
  if (c.kind == ConstituentId::Kind::Large) return true;
  return HalfInt(c.index) == HalfInt::half(pt.n - 1) - pt.s.abs();
}

HalfIntVec eta(int n, int m) {
  require_m(n, m);
  HalfIntVec out;
  out.reserve(n);
  for (int v = n - m - 1; v >= m; --v) out.emplace_back(v);
  if (m > 0) {
    out.emplace_back(m);
    for (int v = m - 1; v >= 1; --v) {
      out.emplace_back(v);
      out.emplace_back(v);
    }
    out.emplace_back(0);
  }
  return out;
}

HalfIntVec vm_decay_exponent(int n, int m) {
  require_m(n, m);
  HalfIntVec out(n - 2 * m, HalfInt(-m));
  for (int v = -m + 1; v <= 0; ++v) {
    out.emplace_back(v);
    out.emplace_back(v);
  }
  return out;
}

double fN_eval(std::span<const double> h) {
  // One square root of the whole product keeps F_N(0, ..., 0) = 2^(-N/2) exact.
  double product = 1.0;
  for (double x : h) product *= std::exp(x) + std::exp(-x);
  return 1.0 / std::sqrt(product);
}

}  // namespace sopq
