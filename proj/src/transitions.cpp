#include "kbill/transitions.hpp"

#include <algorithm>
#include <cmath>

namespace kbill {

Vec2 reflect(const Vec2& v, const Vec2& unit_normal) { return v - 2.0 * v.dot(unit_normal) * unit_normal; }

double critical_angle(const Vec2& p, const BilliardConfig& cfg) {
  const double ratio = potential_outer(p, cfg) / potential_inner(p, cfg);
  return std::asin(std::sqrt(std::clamp(ratio, 0.0, 1.0)));
}

double refract_inward(double alpha_E, const Vec2& p, const BilliardConfig& cfg) {
  const double k = std::sqrt(potential_outer(p, cfg) / potential_inner(p, cfg));
  return std::asin(std::clamp(k * std::sin(alpha_E), -1.0, 1.0));
}

std::optional<double> refract_outward(double alpha_I, const Vec2& p, const BilliardConfig& cfg) {
  if (std::abs(alpha_I) > critical_angle(p, cfg)) return std::nullopt;
  const double k = std::sqrt(potential_inner(p, cfg) / potential_outer(p, cfg));
  return std::asin(std::clamp(k * std::sin(alpha_I), -1.0, 1.0));
}

}  // namespace kbill
