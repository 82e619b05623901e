#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kbill {

enum class ErrorKind {
  invalid_configuration,
  degenerate_family,
  origin_singularity,
  off_boundary,
  grazing_intersection,
  numerical_stall,
  no_reentry,
  total_internal_reflection,
  unsupported_configuration,
  fixed_point_drift,
  no_sign_change,
  no_brake_orbit,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kbill
