#pragma once

#include "kbill/arc.hpp"

namespace kbill {

/// Harmonic flow z(t) = p cos(wt) + (v/w) sin(wt) outside the domain.
struct HookeFlow {
  PhaseState start;
  double omega;

  Vec2 position(double t) const;
  Vec2 velocity(double t) const;
  double period() const;
};

/// Follows the outer Hooke arc from an outward-pointing boundary state to the
/// first re-entry. Throws Error(no_reentry) when the orbit closes without
/// crossing back and Error(grazing_intersection) for tangential re-entry.
ArcResult propagate_outer(const PhaseState& start, const BilliardConfig& cfg, bool capture_polyline = false);

}  // namespace kbill
