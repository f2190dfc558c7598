#include "sopq/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sopq/error.hpp"

namespace sopq {

int YoungDiagram::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

YoungDiagram validate_diagram(std::vector<int> parts, Flavor flavor) {
  for (int d : parts)
    if (d <= 0) throw InputError("Young diagram parts must be positive");
  if (!std::is_sorted(parts.begin(), parts.end())) throw InputError("Young diagram parts must be listed in ascending order");
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total % 2 != 0) throw InputError("Young diagram size must be even, got " + std::to_string(total));
  std::map<int, int> multiplicity;
  for (int d : parts) ++multiplicity[d];
  for (auto [d, mult] : multiplicity) {
    const bool constrained = flavor == Flavor::Orthogonal ? d % 2 == 0 : d % 2 == 1;
    if (constrained && mult % 2 != 0) {
      throw InputError(std::string(flavor == Flavor::Orthogonal ? "orthogonal" : "symplectic") +
                       " diagram: part " + std::to_string(d) + " must occur with even multiplicity");
    }
  }
  return YoungDiagram(std::move(parts), flavor);
}

bool is_very_even(const YoungDiagram& d) {
  if (d.flavor() != Flavor::Orthogonal) throw InputError("very-even is defined for orthogonal diagrams only");
  // The empty diagram has a single orbit, so it does not split.
  return !d.parts().empty() && std::all_of(d.parts().begin(), d.parts().end(), [](int x) { return x % 2 == 0; });
}

HalfIntVec identical_pair_string(int d) {
  HalfIntVec out;
  for (int twice = d - 1; twice >= 1 - d; twice -= 2) out.push_back(HalfInt::half(twice));
  return out;
}

HalfIntVec odd_pair_string(int high, int low) {
  HalfIntVec out;
  for (int v = (high - 1) / 2; v >= (1 - low) / 2; --v) out.emplace_back(v);
  return out;
}

HalfIntVec even_single_string(int d) {
  HalfIntVec out;
  for (int twice = d - 1; twice >= 1; twice -= 2) out.push_back(HalfInt::half(twice));
  return out;
}

namespace {

struct Block {
  int lead;
  bool identical;
  HalfIntVec entries;
};

VDResult assemble(const YoungDiagram& d, std::vector<Block> blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.lead != b.lead) return a.lead > b.lead;
    return a.identical && !b.identical;
  });
  VDResult out;
  for (auto& b : blocks) out.raw.insert(out.raw.end(), b.entries.begin(), b.entries.end());
  const bool orthogonal = d.flavor() == Flavor::Orthogonal;
  out.canonical = weyl_canonical(out.raw, orthogonal ? WeylType::D : WeylType::B);
  out.very_even = orthogonal && is_very_even(d);
  if (out.very_even) {
    out.classes = {CanonicalWeight{out.canonical.magnitudes, SignClass::Plus},
                   CanonicalWeight{out.canonical.magnitudes, SignClass::Minus}};
  } else {
    out.classes = {out.canonical};
  }
  return out;
}

}  // namespace

VDResult v_D_with_pairs(const YoungDiagram& d, std::span<const int> identical_pairs) {
  std::multiset<int> remaining(d.parts().begin(), d.parts().end());
  std::vector<Block> blocks;
  for (int x : identical_pairs) {
    for (int copy = 0; copy < 2; ++copy) {
      auto it = remaining.find(x);
      if (it == remaining.end()) throw InputError("identical pair (" + std::to_string(x) + ", " +
                                                  std::to_string(x) + ") not available in the diagram");
      remaining.erase(it);
    }
    blocks.push_back({x, true, identical_pair_string(x)});
  }
  std::vector<int> rest(remaining.rbegin(), remaining.rend());  // descending
  if (d.flavor() == Flavor::Orthogonal) {
    if (rest.size() % 2 != 0) throw InputError("leftover parts must come in odd pairs");
    for (std::size_t i = 0; i < rest.size(); i += 2) {
      if (rest[i] % 2 == 0 || rest[i + 1] % 2 == 0) throw InputError("leftover orthogonal parts must be odd");
      blocks.push_back({rest[i], false, odd_pair_string(rest[i], rest[i + 1])});
    }
  } else {
    for (int x : rest) {
      if (x % 2 != 0) throw InputError("leftover symplectic parts must be even");
      blocks.push_back({x, false, even_single_string(x)});
    }
  }
  return assemble(d, std::move(blocks));
}

VDResult v_D(const YoungDiagram& d) {
  std::vector<int> pairs;
  const auto& parts = d.parts();
  for (std::size_t i = 0; i + 1 < parts.size();) {
    if (parts[i] == parts[i + 1]) {
      pairs.push_back(parts[i]);
      i += 2;
    } else {
      ++i;
    }
  }
  return v_D_with_pairs(d, pairs);
}

HalfIntVec h_spectrum_oracle(const YoungDiagram& d) {
  HalfIntVec out;
  for (int part : d.parts())
    for (int twice = part - 1; twice >= 1 - part; twice -= 2) out.push_back(HalfInt::half(twice));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void partitions(int remaining, int min_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int size, Flavor flavor) {
  if (size < 0 || size % 2 != 0) throw InputError("diagram size must be even and nonnegative");
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  partitions(size, 1, current, all);
  std::vector<YoungDiagram> out;
  for (auto& parts : all) {
    try {
      out.push_back(validate_diagram(parts, flavor));
    } catch (const InputError&) {
    }
  }
  return out;
}

const char* to_string(Flavor f) { return f == Flavor::Orthogonal ? "orthogonal" : "symplectic"; }

}  // namespace sopq
