#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbill/config.hpp"

namespace kbill {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduces an angle to [0, 2pi).
double wrap_angle(double xi);
/// Reduces an angle difference to (-pi, pi].
double wrap_difference(double dxi);

Vec2 gamma(double xi, const BilliardConfig& cfg);
Vec2 gamma_dot(double xi, const BilliardConfig& cfg);
Vec2 unit_tangent(double xi, const BilliardConfig& cfg);
Vec2 inward_normal(double xi, const BilliardConfig& cfg);
Vec2 outward_normal(double xi, const BilliardConfig& cfg);

/// (x-x0)^2 + (y-y0)^2/b^2 - 1: negative inside, zero on the boundary.
double implicit_B(const Vec2& p, const BilliardConfig& cfg);
Vec2 grad_B(const Vec2& p, const BilliardConfig& cfg);

/// Boundary parameter of the point of the ellipse seen from its centre in
/// the direction of p. Exact for points on the boundary.
double boundary_parameter(const Vec2& p, const BilliardConfig& cfg);

/// f(xi) = -1/2 d/dxi |gamma(xi)|^2. Zeros are the critical radii.
double radial_derivative_f(double xi, const BilliardConfig& cfg);
double radial_derivative_f_prime(double xi, const BilliardConfig& cfg);

struct CentralConfiguration {
  double xi = 0.0;
  bool degenerate = false;
  std::optional<std::size_t> antipodal_partner;
};

/// All zeros of f on [0, 2pi), sorted by xi, with degeneracy flags and
/// antipodal pairing. Throws Error(degenerate_family) for the centred circle.
std::vector<CentralConfiguration> central_configurations(const BilliardConfig& cfg);

struct Admissibility {
  bool admissible = false;
  std::string reason;
};

/// Closed-form admissibility test for elliptic domains.
Admissibility is_admissible(const BilliardConfig& cfg);

/// Constructive admissibility: two non-degenerate, non-antipodal central
/// configurations exist. The centred circle is non-admissible.
bool is_admissible_constructive(const BilliardConfig& cfg);

// ---------------------------------------------------------------------------
// Section <-> phase space.

/// Position and velocity in the plane.
struct PhaseState {
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
};

/// A point (xi, alpha) of the return-map cylinder.
struct SectionState {
  double xi = 0.0;
  double alpha = 0.0;
};

enum class Direction { inward, outward };

double potential_inner(const Vec2& p, const BilliardConfig& cfg);
double potential_outer(const Vec2& p, const BilliardConfig& cfg);

/// Lifts (xi, alpha) to a boundary phase state. Inward states move at speed
/// sqrt(2 V_I) with alpha measured from the inward normal; outward states at
/// speed sqrt(2 V_E) with alpha measured from the outward normal. Positive
/// alpha leans toward the positive tangent.
PhaseState section_to_phase(const SectionState& s, Direction dir, const BilliardConfig& cfg);

/// Inverse of section_to_phase; the convention is taken from the sign of the
/// normal velocity component. Throws Error(off_boundary) if |B| > root_tol.
SectionState phase_to_section(const PhaseState& p, const BilliardConfig& cfg);

/// Angle of v from the given unit normal, positive toward the tangent t.
double angle_from_normal(const Vec2& v, const Vec2& normal, const Vec2& tangent);

}  // namespace kbill
