#pragma once

#include <stdexcept>
#include <string>

namespace sopq {

// Raised for precondition violations on caller-supplied data: length
// mismatches, invalid weights, malformed diagrams, unparsable encodings.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sopq
