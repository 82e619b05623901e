#pragma once

#include <string_view>
#include <vector>

#include "kbill/geometry.hpp"

namespace kbill {

enum class MapKind { F, G };

enum class Termination { completed, grazing, total_internal_reflection, no_reentry, numerical_stall };

std::string_view to_string(Termination t);
Termination termination_from_string(std::string_view name);

struct OrbitRecord {
  std::vector<SectionState> states;  // states[0] is the seed
  Termination termination = Termination::completed;
  // One polyline per applied step (outer + inner legs), if requested.
  std::vector<std::vector<Vec2>> trajectory;
};

/// Reflective first-return map; alpha is measured from the inward normal.
SectionState map_F(const SectionState& s, const BilliardConfig& cfg);

/// Refractive first-return map; alpha is measured from the outward normal.
/// Throws Error(total_internal_reflection) when the inner arc arrives beyond
/// the critical angle (unless cfg.internal_reflection is set).
SectionState map_G(const SectionState& s, const BilliardConfig& cfg);

SectionState apply_map(MapKind map, const SectionState& s, const BilliardConfig& cfg);

/// The map matching cfg.mode.
MapKind map_for(const BilliardConfig& cfg);

/// Applies the map up to n times. Failures end the orbit and are recorded
/// as its termination; the prefix is kept.
OrbitRecord iterate(MapKind map, const SectionState& s0, int n, const BilliardConfig& cfg,
                    bool capture_trajectory = false);

}  // namespace kbill
