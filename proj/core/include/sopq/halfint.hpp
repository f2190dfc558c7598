#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sopq {

/// An exact element of (1/2)Z, stored as twice its value.
///
/// Every weight, exponent and rho-vector in the library lives in
/// Z or Z + 1/2, so no rational or floating type is needed.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t integer) : doubled_(2 * integer) {}

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  /// n/2
  static constexpr HalfInt half(std::int64_t n) { return from_doubled(n); }

  /// Parses "a" or "a/2" in lowest terms ("3/2", "-1/2", "2").
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr bool is_zero() const { return doubled_ == 0; }
  constexpr bool is_negative() const { return doubled_ < 0; }

  /// Integer value; only meaningful when is_integer().
  constexpr std::int64_t to_integer() const { return doubled_ / 2; }

  constexpr HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_doubled(k * a.doubled_); }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return from_doubled(k * a.doubled_); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.doubled_ <=> b.doubled_; }

 private:
  std::int64_t doubled_ = 0;
};

using HalfIntVec = std::vector<HalfInt>;

/// Builds a vector from integers.
HalfIntVec integer_vec(std::initializer_list<std::int64_t> values);
HalfIntVec integer_vec(const std::vector<std::int64_t>& values);

/// Parses a comma-separated list such as "1/2,-3/2,0"; "" is the empty vector.
HalfIntVec parse_vec(std::string_view text);

/// "(a, b, c)" rendering for diagnostics and explain().
std::string to_string(const HalfIntVec& v);

HalfIntVec operator+(const HalfIntVec& a, const HalfIntVec& b);
HalfIntVec operator-(const HalfIntVec& a, const HalfIntVec& b);
HalfIntVec operator-(const HalfIntVec& a);

/// Constant vector of the given length.
HalfIntVec constant_vec(std::size_t length, HalfInt value);

/// Appends zeros up to `length` (no-op when already that long).
HalfIntVec pad_zeros(HalfIntVec v, std::size_t length);

HalfInt sum(const HalfIntVec& v);

}  // namespace sopq
