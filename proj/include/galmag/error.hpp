#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galmag {

enum class ErrorKind {
  ZeroCurvature,
  InvalidStep,
  WrongCase,
  IncompatibleIC,
  NonFiniteState,
  DomainMismatch,
  InvalidConfig,
};

/// Stable, machine-readable token for an error kind ("zero-curvature", ...).
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace galmag
