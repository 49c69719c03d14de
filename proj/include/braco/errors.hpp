#pragma once

#include <stdexcept>
#include <string>

namespace braco {

/// Problem with the input data: malformed document, inconsistent diagram,
/// or an operation that does not apply to the given kind of object.
/// The CLI reports these on stderr and exits with code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A library invariant failed to hold (for example, a pairing matrix came out
/// asymmetric).  This always indicates a bug in the library rather than in
/// the input.  The CLI exits with code 2.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace braco
