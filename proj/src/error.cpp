#include "gsqg/error.hpp"

#include <iostream>
#include <mutex>

namespace gsqg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::near_self_intersection: return "near_self_intersection";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::singular_jacobian: return "singular_jacobian";
    case ErrorKind::univalence: return "univalence";
    case ErrorKind::no_bracket: return "no_bracket";
    case ErrorKind::cfl_violation: return "cfl_violation";
    case ErrorKind::not_symmetric: return "not_symmetric";
  }
  return "unknown";
}

namespace {
std::mutex handler_mutex;
WarningHandler& handler() {
  static WarningHandler h = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
  return h;
}
}  // namespace

WarningHandler set_warning_handler(WarningHandler h) {
  std::lock_guard lock(handler_mutex);
  WarningHandler old = std::move(handler());
  handler() = std::move(h);
  return old;
}

void warn(std::string_view message) {
  std::lock_guard lock(handler_mutex);
  if (handler()) handler()(message);
}

}  // namespace gsqg
