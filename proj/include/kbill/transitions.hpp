#pragma once

#include <optional>

#include "kbill/geometry.hpp"

namespace kbill {

/// Elastic reflection: keeps the tangential component, flips the normal one.
Vec2 reflect(const Vec2& v, const Vec2& unit_normal);

/// Largest inner incidence that can still refract outward at p:
/// asin(sqrt(V_E(p) / V_I(p))).
double critical_angle(const Vec2& p, const BilliardConfig& cfg);

/// Outer incidence alpha_E -> inner angle alpha_I; always solvable when
/// V_E < V_I. Angles share their sign.
double refract_inward(double alpha_E, const Vec2& p, const BilliardConfig& cfg);

/// Inner incidence alpha_I -> outer angle alpha_E, or nullopt on total
/// internal reflection (|alpha_I| > critical angle).
std::optional<double> refract_outward(double alpha_I, const Vec2& p, const BilliardConfig& cfg);

}  // namespace kbill
