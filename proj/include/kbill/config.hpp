#pragma once

#include <Eigen/Core>

namespace kbill {

using Vec2 = Eigen::Vector2d;

enum class Mode { reflective, refractive };

struct ToleranceSet {
  double root_tol = 1e-12;    // boundary-crossing root finding (absolute)
  double fd_step = 1e-6;      // finite-difference step for Jacobians
  double angmom_tol = 1e-10;  // |L| below which an inner arc is radial
  double graze_tol = 1e-8;    // |dB/dt| at a crossing below which it is grazing
  int max_iter = 20000;       // bracketing / secant / bisection caps
};

/// Physical and geometric parameters of one billiard.
///
/// The boundary is the ellipse (cos xi + x0, b sin xi + y0) with semi-major
/// axis 1; the Kepler centre sits at the origin. b == 1 is the circle.
struct BilliardConfig {
  double b = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  double mu = 1.0;
  double h_inner = 1.0;
  double h_outer = 0.0;
  double omega = 1.0;
  Mode mode = Mode::reflective;
  ToleranceSet tol{};
  // Supercritical inner incidences reflect elastically instead of
  // terminating the refractive map. Off by default.
  bool internal_reflection = false;
};

/// Throws Error(invalid_configuration) naming the first violated invariant.
void validate(const BilliardConfig& cfg);

/// Largest |gamma(xi)| over the boundary (dense sample plus refinement).
double max_boundary_radius(const BilliardConfig& cfg);

}  // namespace kbill
