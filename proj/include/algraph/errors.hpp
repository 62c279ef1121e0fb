#pragma once

#include <stdexcept>

namespace algraph {

// Bad caller input: out-of-range element, malformed document, wrong signature.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search or size cap was exceeded; the message names the cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace algraph
