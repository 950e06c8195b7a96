#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vexmult {

// Error taxonomy shared by the library and the CLI.  The CLI maps kinds to
// exit codes: Domain/Precondition/Invariant/Capability -> 2, Resource -> 3.
enum class ErrorKind { Domain, Precondition, Invariant, Resource, Capability };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // short machine-readable tag, e.g. "not-vexillary", "state-cap"
  const std::string& code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_domain(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Domain, code, msg);
}
[[noreturn]] inline void throw_precondition(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Precondition, code, msg);
}
[[noreturn]] inline void throw_invariant(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Invariant, code, msg);
}
[[noreturn]] inline void throw_resource(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Resource, code, msg);
}
[[noreturn]] inline void throw_capability(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Capability, code, msg);
}

}  // namespace vexmult
