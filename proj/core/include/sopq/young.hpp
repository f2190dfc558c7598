#pragma once

#include <span>
#include <vector>

#include "sopq/halfint.hpp"
#include "sopq/weights.hpp"

namespace sopq {

enum class Flavor { Orthogonal, Symplectic };

/// Partition d_1 <= ... <= d_r of an even size 2k.
/// Orthogonal: every even part has even multiplicity.
/// Symplectic: every odd part has even multiplicity.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  const std::vector<int>& parts() const { return parts_; }
  Flavor flavor() const { return flavor_; }
  int size() const;
  int k() const { return size() / 2; }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  friend YoungDiagram validate_diagram(std::vector<int> parts, Flavor flavor);
  YoungDiagram(std::vector<int> parts, Flavor flavor) : parts_(std::move(parts)), flavor_(flavor) {}

  std::vector<int> parts_;
  Flavor flavor_ = Flavor::Orthogonal;
};

/// Sorts ascending and validates; throws InputError naming the rule.
YoungDiagram validate_diagram(std::vector<int> parts, Flavor flavor);

/// Orthogonal diagrams only; throws InputError otherwise.
bool is_very_even(const YoungDiagram& d);

struct VDResult {
  HalfIntVec raw;             // concatenated block strings, before canonicalization
  CanonicalWeight canonical;  // type D for orthogonal, type B for symplectic
  bool very_even = false;
  std::vector<CanonicalWeight> classes;  // {canonical}, or {v_+, v_-} when very even

  friend bool operator==(const VDResult&, const VDResult&) = default;
};

/// Greedy construction: identical pairs (smallest first), then the leftover
/// parts paired in descending order (orthogonal) or taken singly
/// (symplectic). Blocks are concatenated by descending leading part.
VDResult v_D(const YoungDiagram& d);

/// Same construction with the identical pairs chosen by the caller: one
/// entry d per pair (d, d) removed. Throws InputError when the leftover
/// parts do not admit the odd-pair / even-single step.
VDResult v_D_with_pairs(const YoungDiagram& d, std::span<const int> identical_pairs);

/// Block strings.
HalfIntVec identical_pair_string(int d);         // ((d-1)/2, ..., (1-d)/2)
HalfIntVec odd_pair_string(int high, int low);   // ((high-1)/2, ..., 0, ..., (1-low)/2)
HalfIntVec even_single_string(int d);            // ((d-1)/2, ..., 1/2)

/// Halved H-eigenvalues on the defining representation: the union over parts
/// of the sl2 weight strings {(d-1)/2, ..., (1-d)/2}, sorted descending.
HalfIntVec h_spectrum_oracle(const YoungDiagram& d);

/// All valid diagrams of the given size and flavor, in lexicographic order
/// of their ascending part lists.
std::vector<YoungDiagram> enumerate_diagrams(int size, Flavor flavor);

const char* to_string(Flavor f);

}  // namespace sopq
