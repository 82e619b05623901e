#include "kbill/stability.hpp"

#include <cmath>
#include <sstream>

#include "kbill/error.hpp"

namespace kbill {

namespace {

void require_axis_homothetic(double xi_bar, const BilliardConfig& cfg) {
  if (cfg.mode != Mode::reflective)
    throw Error(ErrorKind::unsupported_configuration, "closed-form stability covers the reflective map only");
  if (cfg.y0 != 0.0)
    throw Error(ErrorKind::unsupported_configuration, "closed-form stability requires y0 = 0");
  if (std::abs(xi_bar) > 1e-12 && std::abs(xi_bar - kPi) > 1e-12)
    throw Error(ErrorKind::unsupported_configuration, "closed-form stability requires xi_bar in {0, pi}");
}

FixedPointType classify(double delta) {
  if (delta > 0.0) return FixedPointType::saddle;
  if (delta < 0.0) return FixedPointType::centre;
  return FixedPointType::degenerate;
}

SectionState perturbed(const SectionState& s, int axis, double h) {
  SectionState out = s;
  (axis == 0 ? out.xi : out.alpha) += h;
  return out;
}

Eigen::Vector2d central_difference(MapKind map, const SectionState& at, int axis, double h,
                                   const BilliardConfig& cfg) {
  const SectionState plus = apply_map(map, perturbed(at, axis, h), cfg);
  const SectionState minus = apply_map(map, perturbed(at, axis, -h), cfg);
  return {wrap_difference(plus.xi - minus.xi) / (2.0 * h), (plus.alpha - minus.alpha) / (2.0 * h)};
}

}  // namespace

std::string_view to_string(FixedPointType t) {
  switch (t) {
    case FixedPointType::saddle: return "saddle";
    case FixedPointType::centre: return "centre";
    case FixedPointType::degenerate: return "degenerate";
  }
  return "degenerate";
}

std::array<std::complex<double>, 2> unimodular_eigenvalues(double trace) {
  const std::complex<double> root = std::sqrt(std::complex<double>(trace * trace - 4.0, 0.0));
  return {0.5 * (trace + root), 0.5 * (trace - root)};
}

StabilityReport analytic_DF(double xi_bar, const BilliardConfig& cfg) {
  require_axis_homothetic(xi_bar, cfg);
  const bool at_pi = std::abs(xi_bar - kPi) <= 1e-12;
  const double b = cfg.b;
  const double radius = at_pi ? 1.0 - cfg.x0 : 1.0 + cfg.x0;  // |gamma(xi_bar)|
  const double speed_param = b;                                // |gamma_dot(xi_bar)|
  const double VI = cfg.h_inner + cfg.mu / radius;
  const double sqrtV = std::sqrt(VI);

  StabilityReport rep;
  rep.xi_bar = at_pi ? kPi : 0.0;
  rep.S12 = speed_param * speed_param * cfg.mu / (4.0 * radius * radius * sqrtV);
  rep.epsilon = sqrtV * (b * b / radius - 1.0);
  const double S11 = -rep.S12 + rep.epsilon;
  const double S22 = S11;
  const double w = sqrtV * speed_param;

  // Implicit-function linearisation of the generating relations. The
  // off-diagonal signs follow the orientation alpha -> +tangent.
  rep.DF << -S11 / rep.S12, -w / rep.S12,
            -(S11 * S22 - rep.S12 * rep.S12) / (rep.S12 * w), -S22 / rep.S12;

  rep.delta = 4.0 / (rep.S12 * rep.S12) * rep.epsilon * (rep.epsilon - 2.0 * rep.S12);
  rep.classification = classify(rep.delta);
  rep.eigenvalues = unimodular_eigenvalues(rep.DF.trace());
  return rep;
}

double c_pi(const BilliardConfig& cfg) {
  require_axis_homothetic(kPi, cfg);
  const double d = 1.0 - cfg.x0;
  const double b2 = cfg.b * cfg.b;
  const double VI = cfg.h_inner + cfg.mu / d;
  const double A = b2 / d - 1.0;
  return A * (A - b2 * cfg.mu / (2.0 * d * d) / VI);
}

std::optional<double> bifurcation_threshold_reflective(const BilliardConfig& cfg) {
  require_axis_homothetic(kPi, cfg);
  const double d = 1.0 - cfg.x0;
  const double b2 = cfg.b * cfg.b;
  const double A = b2 / d - 1.0;
  if (A <= 0.0) return std::nullopt;
  const double h = b2 * cfg.mu / (2.0 * d * d * A) - cfg.mu / d;
  // Below zero the sign change happens outside the admissible energies.
  if (h <= 0.0) return std::nullopt;
  return h;
}

Mat2 numeric_jacobian(MapKind map, const SectionState& at, const BilliardConfig& cfg) {
  const double h = cfg.tol.fd_step;
  Mat2 J;
  for (int axis = 0; axis < 2; ++axis) {
    const Eigen::Vector2d coarse = central_difference(map, at, axis, h, cfg);
    const Eigen::Vector2d fine = central_difference(map, at, axis, 0.5 * h, cfg);
    J.col(axis) = (4.0 * fine - coarse) / 3.0;
  }
  return J;
}

Mat2 numeric_DF(MapKind map, const SectionState& fixed, const BilliardConfig& cfg) {
  const SectionState img = apply_map(map, fixed, cfg);
  const double drift = std::hypot(wrap_difference(img.xi - fixed.xi), img.alpha - fixed.alpha);
  if (drift > 1e-8) {
    std::ostringstream os;
    os << "point (" << fixed.xi << ", " << fixed.alpha << ") is not fixed: residual " << drift;
    throw Error(ErrorKind::fixed_point_drift, os.str());
  }
  return numeric_jacobian(map, fixed, cfg);
}

double bifurcation_scan(MapKind map, const SectionState& fixed, double h_lo, double h_hi, const BilliardConfig& cfg) {
  constexpr double kDeadBand = 1e-7;
  constexpr double kWidth = 1e-4;
  auto g = [&](double h) {
    BilliardConfig c = cfg;
    c.h_inner = h;
    const double tr = numeric_DF(map, fixed, c).trace();
    return tr * tr - 4.0;
  };
  double lo = h_lo, hi = h_hi;
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (std::abs(g_lo) <= kDeadBand || std::abs(g_hi) <= kDeadBand || (g_lo > 0) == (g_hi > 0)) {
    std::ostringstream os;
    os << "discriminant keeps its sign on [" << h_lo << ", " << h_hi << "] (" << g_lo << ", " << g_hi << ")";
    throw Error(ErrorKind::no_sign_change, os.str());
  }
  while (hi - lo > kWidth) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0) == (g_lo > 0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double find_brake_orbit(const BilliardConfig& cfg, double delta) {
  if (cfg.mode != Mode::reflective || cfg.y0 != 0.0)
    throw Error(ErrorKind::unsupported_configuration, "brake orbits are located for reflective, y0 = 0 billiards");
  auto g = [&](double xi) { return map_F({xi, 0.0}, cfg).alpha; };
  double lo = 0.5 * kPi + delta;
  double hi = kPi - delta;
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if ((g_lo > 0) == (g_hi > 0) || g_lo == 0.0 || g_hi == 0.0)
    throw Error(ErrorKind::no_brake_orbit, "no orthogonal return on the search bracket");
  for (int it = 0; it < cfg.tol.max_iter && hi - lo > 1e-11; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0) == (g_lo > 0))
      lo = mid;
    else
      hi = mid;
  }
  const double xi_brake = 0.5 * (lo + hi);
  const SectionState img = map_F({xi_brake, 0.0}, cfg);
  if (std::abs(wrap_difference(img.xi - (kTwoPi - xi_brake))) > 1e-6 || std::abs(img.alpha) > 1e-6)
    throw Error(ErrorKind::no_brake_orbit, "orthogonal return is not the mirror point");
  return xi_brake;
}

}  // namespace kbill
