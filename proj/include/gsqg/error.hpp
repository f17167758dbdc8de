#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsqg {

enum class ErrorKind {
  domain,
  pole,
  invalid_input,
  near_self_intersection,
  non_convergence,
  singular_jacobian,
  univalence,
  no_bracket,
  cfl_violation,
  not_symmetric,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Non-fatal diagnostics (aliasing, ill-conditioned differences). Default sink
// writes to stderr.
using WarningHandler = std::function<void(std::string_view)>;
WarningHandler set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace gsqg
