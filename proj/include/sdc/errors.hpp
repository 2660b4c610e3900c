#pragma once

#include <stdexcept>
#include <string>

namespace sdc {

/// An exhaustive computation would exceed its configured size cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result contradicts an invariant the construction guarantees. Raised
/// instead of silently dropping the offending object.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sdc
