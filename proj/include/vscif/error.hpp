#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vscif {

// Every failure raised by the library carries one of these categories; the C
// API maps them one-to-one onto status codes.
enum class ErrorKind {
  Structural,      // malformed data, overflow, bad indices
  Infeasible,      // instance violates the fragment-fits-largest-bin condition
  Precondition,    // operation called outside its domain
  Config,          // generator / bench configuration out of range
  Parse,           // malformed JSON, CSV or decimal input
  Io,              // file system failures
  BudgetExceeded,  // exact search ran past its node budget
  LimitsExceeded,  // exact search refused an instance larger than its limits
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace vscif
