#pragma once

#include <span>

#include "sopq/halfint.hpp"

namespace sopq {

// B: permutations and all sign changes. D: permutations and an even
// number of sign changes.
enum class WeylType { B, D };

enum class SignClass { Plus, Minus, Merged };

/// Orbit representative under a type B or D Weyl group.
struct CanonicalWeight {
  HalfIntVec magnitudes;  // nonincreasing, nonnegative
  SignClass sign_class = SignClass::Merged;

  friend bool operator==(const CanonicalWeight&, const CanonicalWeight&) = default;
};

HalfIntVec rearrange_desc(HalfIntVec mu);
HalfIntVec abs_vec(const HalfIntVec& mu);
HalfIntVec prefix_sums(std::span<const HalfInt> mu);

/// mu < lambda: every prefix sum of mu is strictly below that of lambda.
/// Throws InputError on length mismatch.
bool strictly_dominated(std::span<const HalfInt> mu, std::span<const HalfInt> lambda);

/// mu <= lambda in the prefix-sum order.
bool weakly_dominated(std::span<const HalfInt> mu, std::span<const HalfInt> lambda);

/// Canonical form on the Weyl orbit of v. For type D without zero entries
/// the class records the parity of the number of negative entries.
CanonicalWeight weyl_canonical(const HalfIntVec& v, WeylType type);

/// A vector in the orbit described by `c` (last entry negated for Minus).
HalfIntVec representative(const CanonicalWeight& c);

const char* to_string(SignClass c);
const char* to_string(WeylType t);

}  // namespace sopq
