#pragma once

#include <complex>

#include "kbill/arc.hpp"

namespace kbill {

/// Conic invariants of an inner arc (focus at the origin).
struct KeplerElements {
  double energy = 0.0;
  double angular_momentum = 0.0;
  Vec2 eccentricity_vector = Vec2::Zero();
  double semi_major_axis = 0.0;  // -mu/(2h); negative on hyperbolae

  double eccentricity() const { return eccentricity_vector.norm(); }
};

KeplerElements kepler_elements(const PhaseState& s, double mu);

/// Closed-form Kepler flow in Levi-Civita coordinates z = u^2.
///
/// With dt = |z| ds the motion at energy h > 0 becomes the linear system
/// u'' = (h/2) u, so every quantity below is explicit in the regularised
/// anomaly s. Collisions are passed through: u crosses zero and z bounces
/// back along its ray.
class KeplerFlow {
 public:
  KeplerFlow(const PhaseState& start, double mu);

  Vec2 position(double s) const;
  Vec2 velocity(double s) const;
  /// Physical time elapsed at anomaly s.
  double time(double s) const;
  /// |dz/ds|, the speed of the position in the anomaly parameter.
  double parameter_speed(double s) const;

  double energy() const { return h_; }

 private:
  using C = std::complex<double>;
  C u(double s) const;
  C du(double s) const;

  double mu_;
  double h_;
  double kappa_;
  C u0_;
  C du0_;
};


/// Time to fall radially from radius r0 to the mass at inner energy h.
double radial_fall_time(double r0, double h, double mu);

/// Follows the inner Kepler arc from a boundary state pointing inward to its
/// first boundary crossing. Nearly radial launches (|L| < angmom_tol) take
/// the regularised bounce and return along their ray.
///
/// Throws Error(grazing_intersection) for tangential arrivals and
/// Error(numerical_stall) if no crossing is bracketed within max_iter steps.
ArcResult propagate_inner(const PhaseState& start, const BilliardConfig& cfg,
                          bool capture_polyline = false);

/// Jacobi length of an inner arc: integral of |z'| sqrt(V_I(z)) dt.
double jacobi_length(const ArcResult& arc, const BilliardConfig& cfg);

/// Inner arc joining gamma(xi0) to gamma(xi1), found by secant shooting on
/// the launch angle starting from alpha_guess. Intended for short arcs close
/// to a homothetic, where the solution is unique.
ArcResult solve_fixed_ends(double xi0, double xi1, const BilliardConfig& cfg,
                           double alpha_guess = 0.0);

}  // namespace kbill
