#ifndef OSCREP_ERROR_HPP
#define OSCREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace oscrep {

// Every precondition violation in the library is reported through this type.
// The message starts with a short stable tag ("roster mismatch", "index miss",
// "not in algebra", ...) that callers and tests may match on.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscrep

#endif
