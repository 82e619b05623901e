#include "kbill/error.hpp"

namespace kbill {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_configuration: return "invalid_configuration";
    case ErrorKind::degenerate_family: return "degenerate_family";
    case ErrorKind::origin_singularity: return "origin_singularity";
    case ErrorKind::off_boundary: return "off_boundary";
    case ErrorKind::grazing_intersection: return "grazing";
    case ErrorKind::numerical_stall: return "numerical_stall";
    case ErrorKind::no_reentry: return "no_reentry";
    case ErrorKind::total_internal_reflection: return "total_internal_reflection";
    case ErrorKind::unsupported_configuration: return "unsupported_configuration";
    case ErrorKind::fixed_point_drift: return "fixed_point_drift";
    case ErrorKind::no_sign_change: return "no_sign_change";
    case ErrorKind::no_brake_orbit: return "no_brake_orbit";
  }
  return "unknown";
}

}  // namespace kbill
