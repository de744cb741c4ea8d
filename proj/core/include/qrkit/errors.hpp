#pragma once

#include <stdexcept>
#include <string>

namespace qrkit {

// Domain errors carry a stable name ("ZeroInverse", "NonResidue", ...) that
// callers such as the CLI surface verbatim next to the message.
class DomainError : public std::runtime_error {
 public:
  DomainError(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

[[noreturn]] inline void raise(const char* name, const std::string& what) {
  throw DomainError(name, what);
}

}  // namespace qrkit
