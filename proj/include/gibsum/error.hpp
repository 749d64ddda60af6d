#pragma once

#include <stdexcept>
#include <string>

namespace gibsum {

// A violated precondition on user-supplied input (bad seed, k = 0, even j, ...).
// Internal invariant breaks are reported as std::logic_error instead.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gibsum
