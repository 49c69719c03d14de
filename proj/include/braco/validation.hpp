#pragma once
// Validation reports shared by the diagram models.  Errors make a document
// unusable; warnings flag suspicious but legal input.

#include <string>
#include <vector>

#include "errors.hpp"

namespace braco {

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }

  // Collapse the errors into a single validation_error (used by builders that
  // refuse to run on invalid input).
  [[noreturn]] void throw_errors() const {
    std::string msg;
    for (const std::string& e : errors) {
      if (!msg.empty()) msg += "; ";
      msg += e;
    }
    throw validation_error(msg.empty() ? "invalid diagram" : msg);
  }
};

}  // namespace braco
