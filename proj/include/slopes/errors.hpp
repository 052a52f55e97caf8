#pragma once

#include <stdexcept>
#include <string>

namespace slopes {

// Thrown when textual input (slopes, descriptors, intervals, records)
// does not parse. The CLI maps this to exit status 2; semantic
// violations raise std::domain_error and map to exit status 3.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace slopes
