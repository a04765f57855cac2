#pragma once

#include <stdexcept>
#include <string>

namespace busemann {

/// Invalid argument or mismatched space instance.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size cap or work budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is not implemented for this space.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace busemann
