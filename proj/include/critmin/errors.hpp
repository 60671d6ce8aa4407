#pragma once

#include <stdexcept>
#include <string>

namespace critmin {

enum class errc {
  invalid_argument,
  odd_euler,
  not_a_surface,
  degree_too_small,
  target_not_hyperbolic,
  out_of_domain,
  sphere_target_not_covered,
  zero_target_volume,
  out_of_range,
  malformed_permutation,
  malformed_certificate,
};

const char* to_string(errc code) noexcept;

// Domain failures carry a code so callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace critmin
