#include "kbill/inner_arc.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "crossing.hpp"
#include "kbill/error.hpp"

namespace kbill {

namespace {

constexpr int kPolylineSamples = 64;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

void check_boundary_start(const PhaseState& start, const BilliardConfig& cfg) {
  const double bval = implicit_B(start.position, cfg);
  if (std::abs(bval) > cfg.tol.root_tol) {
    std::ostringstream os;
    os << "arc start is off the boundary (|B| = " << std::abs(bval) << ")";
    throw Error(ErrorKind::off_boundary, os.str());
  }
}

}  // namespace

KeplerElements kepler_elements(const PhaseState& s, double mu) {
  const Vec2& r = s.position;
  const Vec2& v = s.velocity;
  KeplerElements el;
  el.energy = 0.5 * v.squaredNorm() - mu / r.norm();
  el.angular_momentum = cross(r, v);
  // e = (v x L)/mu - r/|r| in the plane: v x (L e_z) = L (v_y, -v_x).
  el.eccentricity_vector = Vec2(v.y(), -v.x()) * (el.angular_momentum / mu) - r.normalized();
  el.semi_major_axis = -mu / (2.0 * el.energy);
  return el;
}

KeplerFlow::KeplerFlow(const PhaseState& start, double mu) : mu_(mu) {
  const Vec2& z = start.position;
  const Vec2& v = start.velocity;
  h_ = 0.5 * v.squaredNorm() - mu / z.norm();
  if (!(h_ > 0.0)) throw Error(ErrorKind::invalid_configuration, "inner arc requires positive energy");
  kappa_ = std::sqrt(0.5 * h_);
  u0_ = std::sqrt(C(z.x(), z.y()));
  du0_ = 0.5 * C(v.x(), v.y()) * std::conj(u0_);
}

KeplerFlow::C KeplerFlow::u(double s) const {
  const double ks = kappa_ * s;
  return u0_ * std::cosh(ks) + du0_ * (std::sinh(ks) / kappa_);
}

KeplerFlow::C KeplerFlow::du(double s) const {
  const double ks = kappa_ * s;
  return u0_ * (kappa_ * std::sinh(ks)) + du0_ * std::cosh(ks);
}

Vec2 KeplerFlow::position(double s) const {
  const C w = u(s);
  const C z = w * w;
  return {z.real(), z.imag()};
}

Vec2 KeplerFlow::velocity(double s) const {
  const C w = u(s);
  const C v = 2.0 * du(s) / std::conj(w);
  return {v.real(), v.imag()};
}

double KeplerFlow::time(double s) const {
  // t(s) = integral of |u|^2 ds with u = u0 cosh + (du0/k) sinh.
  const double k = kappa_;
  const double sh = std::sinh(k * s);
  const double sh2 = std::sinh(2.0 * k * s);
  const double a = std::norm(u0_);
  const double c = std::norm(du0_) / (k * k);
  const double m = (u0_ * std::conj(du0_)).real() / k;
  return a * (0.5 * s + sh2 / (4.0 * k)) + m * sh * sh / k + c * (sh2 / (4.0 * k) - 0.5 * s);
}

double KeplerFlow::parameter_speed(double s) const { return 2.0 * std::abs(u(s)) * std::abs(du(s)); }

double radial_fall_time(double r0, double h, double mu) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto dt_dr = [&](double r) { return std::sqrt(r / (2.0 * (h * r + mu))); };
  return integrator.integrate(dt_dr, 0.0, r0);
}

ArcResult propagate_inner(const PhaseState& start, const BilliardConfig& cfg, bool capture_polyline) {
  check_boundary_start(start, cfg);
  const Vec2 grad0 = grad_B(start.position, cfg);
  if (!(start.velocity.dot(grad0) < -cfg.tol.graze_tol))
    throw Error(ErrorKind::grazing_intersection, "inner arc launch is tangential or points out of the domain");

  ArcResult arc;
  arc.start_state = start;
  const double L = cross(start.position, start.velocity);

  if (std::abs(L) < cfg.tol.angmom_tol) {
    // Regularised bounce off the mass: back along the same ray.
    const double r0 = start.position.norm();
    const double h = 0.5 * start.velocity.squaredNorm() - cfg.mu / r0;
    arc.kind = ArcKind::radial_collision;
    arc.end_state = {start.position, -start.velocity};
    arc.xi_end = boundary_parameter(start.position, cfg);
    arc.flight_time = 2.0 * radial_fall_time(r0, h, cfg.mu);
    // u(s) = u0 (cosh ks - |v0|/(2k) sinh ks) vanishes at tanh ks = 2k/|v0|.
    const double k = std::sqrt(0.5 * h);
    arc.flight_parameter = 2.0 * std::atanh(2.0 * k / start.velocity.norm()) / k;
    if (capture_polyline) {
      for (int i = 0; i <= kPolylineSamples; ++i) {
        const double frac = std::abs(1.0 - 2.0 * double(i) / kPolylineSamples);
        arc.polyline.push_back(start.position * frac);
      }
    }
    return arc;
  }

  const KeplerFlow flow(start, cfg.mu);
  const double h = flow.energy();
  // |dz/ds| = 2 |u| |u'| with |u'|^2 = (mu + h|u|^2)/2 and |u|^2 = |z| <= R.
  const double R = 1.0 + std::hypot(cfg.x0, cfg.y0);
  const double max_speed = 2.0 * std::sqrt(R) * std::sqrt(0.5 * (cfg.mu + h * R));
  const double step = (2.0 * cfg.b / 16.0) / max_speed;

  auto B_of_s = [&](double s) { return implicit_B(flow.position(s), cfg); };
  const auto bracket = detail::first_sign_change(B_of_s, -1.0, step, std::numeric_limits<double>::infinity(),
                                                 cfg.tol.max_iter);
  if (!bracket) throw Error(ErrorKind::numerical_stall, "inner arc: no boundary crossing bracketed");
  const double s_star = detail::bisect(B_of_s, *bracket);

  arc.kind = ArcKind::generic;
  arc.flight_parameter = s_star;
  arc.end_state = {flow.position(s_star), flow.velocity(s_star)};
  arc.xi_end = boundary_parameter(arc.end_state.position, cfg);
  arc.flight_time = flow.time(s_star);

  const double dBdt = grad_B(arc.end_state.position, cfg).dot(arc.end_state.velocity);
  if (std::abs(dBdt) < cfg.tol.graze_tol)
    throw Error(ErrorKind::grazing_intersection, "inner arc touches the boundary tangentially");

  if (capture_polyline) {
    arc.polyline.reserve(kPolylineSamples + 1);
    for (int i = 0; i <= kPolylineSamples; ++i) arc.polyline.push_back(flow.position(s_star * i / kPolylineSamples));
  }
  return arc;
}

double jacobi_length(const ArcResult& arc, const BilliardConfig& cfg) {
  // Radial arcs are covered too: the regularised flow passes through the
  // collision and the integrand below stays bounded there.
  const KeplerFlow flow(arc.start_state, cfg.mu);
  // dt = |z| ds, so |z'(t)| sqrt(V_I) dt = |dz/ds| sqrt(V_I) ds.
  auto integrand = [&](double s) {
    const double r = flow.position(s).norm();
    if (r == 0.0) return 0.0;
    return flow.parameter_speed(s) * std::sqrt(cfg.h_inner + cfg.mu / r);
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, arc.flight_parameter, 20,
                                                                       1e-13);
}

ArcResult solve_fixed_ends(double xi0, double xi1, const BilliardConfig& cfg, double alpha_guess) {
  auto shoot = [&](double alpha) {
    return propagate_inner(section_to_phase({xi0, alpha}, Direction::inward, cfg), cfg);
  };
  auto residual = [&](const ArcResult& a) { return wrap_difference(a.xi_end - xi1); };

  double a0 = alpha_guess;
  double a1 = alpha_guess + 1e-4;
  ArcResult arc0 = shoot(a0);
  double r0 = residual(arc0);
  ArcResult arc1 = shoot(a1);
  double r1 = residual(arc1);
  for (int it = 0; it < 100; ++it) {
    if (std::abs(r1) < 1e-15) return arc1;
    if (r1 == r0) break;
    const double a2 = a1 - r1 * (a1 - a0) / (r1 - r0);
    a0 = a1;
    r0 = r1;
    a1 = a2;
    arc1 = shoot(a1);
    r1 = residual(arc1);
    if (std::abs(a1 - a0) < 1e-15) return arc1;
  }
  if (std::abs(r1) < 1e-12) return arc1;
  throw Error(ErrorKind::numerical_stall, "fixed-ends shooting did not converge");
}

}  // namespace kbill
