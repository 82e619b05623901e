#pragma once

#include <array>
#include <complex>
#include <optional>

#include <Eigen/LU>

#include "kbill/return_map.hpp"

namespace kbill {

using Mat2 = Eigen::Matrix2d;

enum class FixedPointType { saddle, centre, degenerate };

std::string_view to_string(FixedPointType t);

/// Closed-form linearisation of the reflective map at a homothetic fixed
/// point on the major axis.
struct StabilityReport {
  double xi_bar = 0.0;
  double S12 = 0.0;      // mixed second derivative of the Jacobi length
  double epsilon = 0.0;  // S11 = S22 = -S12 + epsilon
  Mat2 DF = Mat2::Identity();
  double delta = 0.0;    // tr(DF)^2 - 4
  FixedPointType classification = FixedPointType::degenerate;
  std::array<std::complex<double>, 2> eigenvalues{};
};

/// Eigenvalues of a unit-determinant 2x2 matrix from its trace.
std::array<std::complex<double>, 2> unimodular_eigenvalues(double trace);

/// Requires reflective mode, y0 == 0 and xi_bar in {0, pi}; throws
/// Error(unsupported_configuration) otherwise. DF uses the library's angle
/// orientation (alpha positive toward the positive tangent).
StabilityReport analytic_DF(double xi_bar, const BilliardConfig& cfg);

/// Sign indicator for the stability of xi = pi; negative means centre,
/// positive means saddle.
double c_pi(const BilliardConfig& cfg);

/// The inner energy at which c_pi changes sign, or nullopt when xi = pi is a
/// saddle for every h_I > 0.
std::optional<double> bifurcation_threshold_reflective(const BilliardConfig& cfg);

/// Central-difference Jacobian of the map at a fixed point, one Richardson
/// level (steps fd_step and fd_step/2). Throws Error(fixed_point_drift) if the
/// point moves by more than 1e-8 under the map.
Mat2 numeric_DF(MapKind map, const SectionState& fixed, const BilliardConfig& cfg);

/// Jacobian at an arbitrary regular point (no fixed-point check).
Mat2 numeric_jacobian(MapKind map, const SectionState& at, const BilliardConfig& cfg);

/// Bisection on tr(numeric_DF)^2 - 4 over h_I in [h_lo, h_hi] down to a
/// bracket of width 1e-4. Throws Error(no_sign_change) if the discriminant
/// keeps one sign (or vanishes identically) on the range.
double bifurcation_scan(MapKind map, const SectionState& fixed, double h_lo, double h_hi, const BilliardConfig& cfg);

/// Left brake point: root of the alpha-component of map_F(xi, 0) on
/// (pi/2 + delta, pi - delta). Throws Error(no_brake_orbit) when that
/// component does not change sign there.
double find_brake_orbit(const BilliardConfig& cfg, double delta = 0.001);

}  // namespace kbill
