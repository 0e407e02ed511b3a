#pragma once

#include <stdexcept>
#include <string>

namespace rscore {

// Raised for problems in user-supplied data: malformed input, violated
// corpus invariants, unusable reputation models. The CLI maps it to exit 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rscore
