#ifndef NETSTAB_ERRORS_HPP
#define NETSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netstab {

// Input that does not satisfy a documented precondition (overlapping link
// sets, h not a subset of g, zero costs where positive ones are required).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed model, game or device files.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured desk-scale bounds.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace netstab

#endif
