#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lperiod {

// Invalid input data or a violated operation precondition.  `code` is a stable
// machine-readable identifier (used verbatim by the CLI error channel), `field`
// a JSON-path-like location inside the offending document when one is known.
//
// Stable codes:
//   schema        malformed document / wrong types / missing keys
//   parts         bad composition data
//   labels        bad label list
//   dual          dual map not an involution or otherwise inconsistent
//   split         (n, m) does not match the composition total
//   caps          a size cap or enumeration budget was exceeded
//   rep_spec      bad finite-group representation specification
//   inadmissible_q  requested q cannot carry the specified representation
//   precondition  operation called with incompatible arguments
//   io            a file could not be read
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message, std::string field = "")
      : std::runtime_error(message), code_(std::move(code)), field_(std::move(field)) {}

  const std::string& code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  std::string code_;
  std::string field_;
};

}  // namespace lperiod
