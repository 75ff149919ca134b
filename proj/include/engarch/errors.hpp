#ifndef ENGARCH_ERRORS_HPP
#define ENGARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace engarch {

// Bad user input: missing roots, malformed config or mapping files.
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure while writing an artifact.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs that should have been derived together disagree (programming error).
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace engarch

#endif
