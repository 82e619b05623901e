#include "kbill/outer_arc.hpp"

#include <cmath>
#include <sstream>

#include "crossing.hpp"
#include "kbill/error.hpp"

namespace kbill {

namespace {

constexpr int kPeriodNodes = 256;
constexpr int kPolylineSamples = 64;

}  // namespace

Vec2 HookeFlow::position(double t) const {
  return start.position * std::cos(omega * t) + start.velocity * (std::sin(omega * t) / omega);
}

Vec2 HookeFlow::velocity(double t) const {
  return -start.position * (omega * std::sin(omega * t)) + start.velocity * std::cos(omega * t);
}

double HookeFlow::period() const { return kTwoPi / omega; }

ArcResult propagate_outer(const PhaseState& start, const BilliardConfig& cfg, bool capture_polyline) {
  const double bval = implicit_B(start.position, cfg);
  if (std::abs(bval) > cfg.tol.root_tol) {
    std::ostringstream os;
    os << "outer arc start is off the boundary (|B| = " << std::abs(bval) << ")";
    throw Error(ErrorKind::off_boundary, os.str());
  }
  if (!(start.velocity.dot(grad_B(start.position, cfg)) > cfg.tol.graze_tol))
    throw Error(ErrorKind::grazing_intersection, "outer arc launch is tangential or points into the domain");

  const HookeFlow flow{start, cfg.omega};
  const double period = flow.period();
  auto B_of_t = [&](double t) { return implicit_B(flow.position(t), cfg); };

  // B(z(t)) is a trigonometric polynomial of degree 2 in wt: at most four
  // roots per period, so 256 nodes cannot alias a sign change.
  const double step = period / kPeriodNodes;
  const auto bracket = detail::first_sign_change(B_of_t, +1.0, step, period * (1.0 - 0.5 / kPeriodNodes),
                                                 kPeriodNodes);
  if (!bracket) throw Error(ErrorKind::no_reentry, "outer arc closes without re-entering the domain");
  const double t_star = detail::bisect(B_of_t, *bracket);

  ArcResult arc;
  arc.start_state = start;
  arc.kind = ArcKind::generic;
  arc.flight_parameter = t_star;
  arc.flight_time = t_star;
  arc.end_state = {flow.position(t_star), flow.velocity(t_star)};
  arc.xi_end = boundary_parameter(arc.end_state.position, cfg);

  const double dBdt = grad_B(arc.end_state.position, cfg).dot(arc.end_state.velocity);
  if (!(dBdt < -cfg.tol.graze_tol))
    throw Error(ErrorKind::grazing_intersection, "outer arc re-enters tangentially");

  if (capture_polyline) {
    arc.polyline.reserve(kPolylineSamples + 1);
    for (int i = 0; i <= kPolylineSamples; ++i) arc.polyline.push_back(flow.position(t_star * i / kPolylineSamples));
  }
  return arc;
}

}  // namespace kbill
