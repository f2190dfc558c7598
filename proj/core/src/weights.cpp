#include "sopq/weights.hpp"

#include <algorithm>
#include <functional>

#include "sopq/error.hpp"

namespace sopq {

HalfIntVec rearrange_desc(HalfIntVec mu) {
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

HalfIntVec abs_vec(const HalfIntVec& mu) {
  HalfIntVec out(mu.size());
  std::transform(mu.begin(), mu.end(), out.begin(), [](HalfInt h) { return h.abs(); });
  return out;
}

HalfIntVec prefix_sums(std::span<const HalfInt> mu) {
  HalfIntVec out(mu.size());
  HalfInt running;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    running += mu[i];
    out[i] = running;
  }
  return out;
}

namespace {

template <typename Cmp>
bool prefix_compare(std::span<const HalfInt> mu, std::span<const HalfInt> lambda, Cmp cmp) {
  if (mu.size() != lambda.size())
    throw InputError("dominance comparison needs equal lengths (" + std::to_string(mu.size()) + " vs " +
                     std::to_string(lambda.size()) + ")");
  HalfInt a, b;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    a += mu[i];
    b += lambda[i];
    if (!cmp(a, b)) return false;
  }
  return true;
}

}  // namespace

bool strictly_dominated(std::span<const HalfInt> mu, std::span<const HalfInt> lambda) {
  return prefix_compare(mu, lambda, std::less<>());
}

bool weakly_dominated(std::span<const HalfInt> mu, std::span<const HalfInt> lambda) {
  return prefix_compare(mu, lambda, std::less_equal<>());
}

CanonicalWeight weyl_canonical(const HalfIntVec& v, WeylType type) {
  CanonicalWeight c{rearrange_desc(abs_vec(v)), SignClass::Merged};
  if (type == WeylType::D && !v.empty()) {
    bool has_zero = std::any_of(v.begin(), v.end(), [](HalfInt h) { return h.is_zero(); });
    if (!has_zero) {
      auto negatives = std::count_if(v.begin(), v.end(), [](HalfInt h) { return h.is_negative(); });
      c.sign_class = negatives % 2 == 0 ? SignClass::Plus : SignClass::Minus;
    }
  }
  return c;
}

HalfIntVec representative(const CanonicalWeight& c) {
  HalfIntVec v = c.magnitudes;
  if (c.sign_class == SignClass::Minus && !v.empty()) v.back() = -v.back();
  return v;
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::Plus: return "plus";
    case SignClass::Minus: return "minus";
    case SignClass::Merged: return "merged";
  }
  return "merged";
}

const char* to_string(WeylType t) { return t == WeylType::B ? "B" : "D"; }

}  // namespace sopq
