#pragma once

#include <stdexcept>
#include <string>

namespace caydis {

/** Desk-scale cap violation. The CLI maps this to exit code 3. */
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised when a certificate construction finds no independent zero-sum triple. */
class NoTripleFound : public std::runtime_error {
 public:
  NoTripleFound() : std::runtime_error("no independent zero-sum triple exists") {}
};

/** Raised by group-family-specific predicates on groups outside their domain. */
class UnsupportedFamilyError : public std::runtime_error {
 public:
  explicit UnsupportedFamilyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace caydis
