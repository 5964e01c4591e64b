#pragma once

#include <stdexcept>
#include <string>

namespace polybound {

enum class ErrorKind { Input, Budget, Invariant };

// Single exception type for the library; the kind selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return {ErrorKind::Input, what}; }
inline Error budget_error(const std::string& what) { return {ErrorKind::Budget, what}; }
inline Error invariant_error(const std::string& what) { return {ErrorKind::Invariant, what}; }

}  // namespace polybound
