#pragma once

#include <stdexcept>
#include <string>

namespace lensd {

// Caller supplied something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCoprime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A computed object failed one of its own postconditions. Should never be
// observed; if it is, one of the underlying formulas has been broken.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lensd
