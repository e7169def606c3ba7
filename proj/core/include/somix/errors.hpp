#pragma once

#include <stdexcept>
#include <string>

namespace somix {

// Input outside an operation's mathematical domain (bad label, angle too
// close to the identity, empty truncation, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap (path count, step budget) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction did not (e.g. the Weyl
// dimension quotient left a remainder). Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace somix
