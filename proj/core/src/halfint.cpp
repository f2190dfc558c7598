#include "sopq/halfint.hpp"

#include <charconv>
#include <numeric>

#include "sopq/error.hpp"

namespace sopq {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InputError("empty integer in half-integer \"" + std::string(whole) + "\"");
  std::string_view digits = text;
  if (digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0'))
    throw InputError("malformed half-integer \"" + std::string(whole) + "\"");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("malformed half-integer \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text, text);
    if (text == "-0") throw InputError("malformed half-integer \"-0\"");
    return HalfInt(v);
  }
  if (text.substr(slash + 1) != "2")
    throw InputError("half-integer denominator must be 2: \"" + std::string(text) + "\"");
  auto num = parse_int(text.substr(0, slash), text);
  if (num % 2 == 0)
    throw InputError("half-integer not in lowest terms: \"" + std::string(text) + "\"");
  return from_doubled(num);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

HalfIntVec integer_vec(std::initializer_list<std::int64_t> values) {
  HalfIntVec out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

HalfIntVec integer_vec(const std::vector<std::int64_t>& values) {
  HalfIntVec out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

HalfIntVec parse_vec(std::string_view text) {
  HalfIntVec out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(HalfInt::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const HalfIntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

HalfIntVec operator+(const HalfIntVec& a, const HalfIntVec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch in addition");
  HalfIntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

HalfIntVec operator-(const HalfIntVec& a, const HalfIntVec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch in subtraction");
  HalfIntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

HalfIntVec operator-(const HalfIntVec& a) {
  HalfIntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

HalfIntVec constant_vec(std::size_t length, HalfInt value) { return HalfIntVec(length, value); }

HalfIntVec pad_zeros(HalfIntVec v, std::size_t length) {
  if (v.size() < length) v.resize(length, HalfInt{});
  return v;
}

HalfInt sum(const HalfIntVec& v) { return std::accumulate(v.begin(), v.end(), HalfInt{}); }

}  // namespace sopq
