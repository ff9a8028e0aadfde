#pragma once

#include <stdexcept>
#include <string>

namespace maxmatch {

// Malformed graph input: bad header, out-of-range endpoint, loop edge.
class graph_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size bound was exceeded. Raised instead of truncating or
// running an exponential computation unbounded.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_factor_critical : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hall-type surplus condition failed on the auxiliary bipartite graph. For a
// decomposition produced by decompose() this cannot happen.
class surplus_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxmatch
