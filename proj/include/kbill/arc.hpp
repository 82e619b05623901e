#pragma once

#include <vector>

#include "kbill/geometry.hpp"

namespace kbill {

enum class ArcKind { generic, radial_collision };

/// One propagated inner or outer arc, from a boundary point to the next
/// boundary crossing.
struct ArcResult {
  PhaseState start_state;
  PhaseState end_state;  // arrival on the boundary, velocity before any transition
  double xi_end = 0.0;
  double flight_time = 0.0;
  double flight_parameter = 0.0;  // regularised anomaly (inner) or time (outer)
  ArcKind kind = ArcKind::generic;
  std::vector<Vec2> polyline;  // filled only on request
};

}  // namespace kbill
