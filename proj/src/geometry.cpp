#include "kbill/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "kbill/error.hpp"

namespace kbill {

namespace {

constexpr int kScanNodes = 720;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_configuration, msg); }

double f_scale(const BilliardConfig& cfg) {
  return (1.0 - cfg.b * cfg.b) + std::abs(cfg.x0) + cfg.b * std::abs(cfg.y0);
}

}  // namespace

double max_boundary_radius(const BilliardConfig& cfg) {
  auto neg_r2 = [&](double xi) { return -gamma(xi, cfg).squaredNorm(); };
  int best = 0;
  double best_val = neg_r2(0.0);
  for (int i = 1; i < kScanNodes; ++i) {
    double v = neg_r2(kTwoPi * i / kScanNodes);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = kTwoPi / kScanNodes;
  const double c = kTwoPi * best / kScanNodes;
  auto [xi, val] = boost::math::tools::brent_find_minima(neg_r2, c - h, c + h, 52);
  (void)xi;
  return std::sqrt(-std::min(val, best_val));
}

void validate(const BilliardConfig& cfg) {
  const auto& t = cfg.tol;
  if (!(cfg.b > 0.0 && cfg.b <= 1.0)) invalid("b must satisfy 0 < b <= 1");
  if (!(cfg.x0 * cfg.x0 + cfg.y0 * cfg.y0 / (cfg.b * cfg.b) < 1.0))
    invalid("origin must lie strictly inside the domain: x0^2 + y0^2/b^2 < 1");
  if (!(cfg.mu > 0.0)) invalid("mu must be positive");
  if (!(cfg.h_inner > 0.0)) invalid("hI must be positive");
  if (!(t.root_tol > 0 && t.fd_step > 0 && t.angmom_tol > 0 && t.graze_tol > 0 && t.max_iter > 0))
    invalid("tolerances must be strictly positive");
  if (cfg.mode == Mode::refractive) {
    if (!(cfg.omega > 0.0)) invalid("omega must be positive");
    if (!(cfg.h_outer > 0.0)) invalid("hE must be positive in refractive mode");
    if (!(cfg.h_outer < cfg.h_inner)) invalid("refractive mode requires hE < hI");
    const double hill = std::sqrt(2.0 * cfg.h_outer) / cfg.omega;
    if (!(max_boundary_radius(cfg) < hill)) {
      std::ostringstream os;
      os << "boundary leaves the outer Hill disc of radius " << hill;
      invalid(os.str());
    }
  }
}

double wrap_angle(double xi) {
  double r = std::fmod(xi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_difference(double dxi) {
  double r = wrap_angle(dxi);
  return r > kPi ? r - kTwoPi : r;
}

Vec2 gamma(double xi, const BilliardConfig& cfg) {
  return {std::cos(xi) + cfg.x0, cfg.b * std::sin(xi) + cfg.y0};
}

Vec2 gamma_dot(double xi, const BilliardConfig& cfg) { return {-std::sin(xi), cfg.b * std::cos(xi)}; }

Vec2 unit_tangent(double xi, const BilliardConfig& cfg) { return gamma_dot(xi, cfg).normalized(); }

Vec2 outward_normal(double xi, const BilliardConfig& cfg) {
  const Vec2 t = unit_tangent(xi, cfg);
  return {t.y(), -t.x()};
}

Vec2 inward_normal(double xi, const BilliardConfig& cfg) { return -outward_normal(xi, cfg); }

double implicit_B(const Vec2& p, const BilliardConfig& cfg) {
  const double dx = p.x() - cfg.x0;
  const double dy = (p.y() - cfg.y0) / cfg.b;
  return dx * dx + dy * dy - 1.0;
}

Vec2 grad_B(const Vec2& p, const BilliardConfig& cfg) {
  return {2.0 * (p.x() - cfg.x0), 2.0 * (p.y() - cfg.y0) / (cfg.b * cfg.b)};
}

double boundary_parameter(const Vec2& p, const BilliardConfig& cfg) {
  return wrap_angle(std::atan2((p.y() - cfg.y0) / cfg.b, p.x() - cfg.x0));
}

double radial_derivative_f(double xi, const BilliardConfig& cfg) {
  const double c = std::cos(xi), s = std::sin(xi);
  return (1.0 - cfg.b * cfg.b) * c * s + cfg.x0 * s - cfg.b * cfg.y0 * c;
}

double radial_derivative_f_prime(double xi, const BilliardConfig& cfg) {
  const double c = std::cos(xi), s = std::sin(xi);
  return (1.0 - cfg.b * cfg.b) * (c * c - s * s) + cfg.x0 * c + cfg.b * cfg.y0 * s;
}

std::vector<CentralConfiguration> central_configurations(const BilliardConfig& cfg) {
  if (cfg.b == 1.0 && cfg.x0 == 0.0 && cfg.y0 == 0.0)
    throw Error(ErrorKind::degenerate_family,
                "centred circle: every boundary point is a degenerate central configuration");

  const double scale = f_scale(cfg);
  const double zero_band = 8.0 * std::numeric_limits<double>::epsilon() * scale;
  const double h = kTwoPi / kScanNodes;

  std::vector<double> node_f(kScanNodes + 1);
  for (int i = 0; i <= kScanNodes; ++i) node_f[i] = radial_derivative_f(h * i, cfg);
  auto is_zero = [&](int i) { return std::abs(node_f[i]) <= zero_band; };

  std::vector<double> roots;
  for (int i = 0; i < kScanNodes; ++i) {
    if (is_zero(i)) {
      roots.push_back(h * i);
      continue;
    }
    if (is_zero(i + 1) || (node_f[i] > 0) == (node_f[i + 1] > 0)) continue;
    double lo = h * i, hi = h * (i + 1);
    double f_lo = node_f[i];
    for (int it = 0; it < 200 && hi - lo > cfg.tol.root_tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = radial_derivative_f(mid, cfg);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0) == (f_lo > 0)) {
        lo = mid;
        f_lo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(wrap_angle(0.5 * (lo + hi)));
  }
  std::sort(roots.begin(), roots.end());

  // Degeneracy: |f'| small relative to the typical slope of f on the scan.
  double slope_scale = 0.0;
  for (int i = 0; i < kScanNodes; ++i)
    slope_scale = std::max(slope_scale, std::abs(node_f[i + 1] - node_f[i]) / h);
  const double degenerate_band = cfg.tol.root_tol * std::max(1.0, slope_scale);

  std::vector<CentralConfiguration> out;
  out.reserve(roots.size());
  for (double r : roots)
    out.push_back({r, std::abs(radial_derivative_f_prime(r, cfg)) <= degenerate_band, std::nullopt});

  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vec2 pi_ = gamma(out[i].xi, cfg);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i == j) continue;
      const Vec2 pj = gamma(out[j].xi, cfg);
      const double cross = pi_.x() * pj.y() - pi_.y() * pj.x();
      if (std::abs(cross) <= 1e-9 * pi_.norm() * pj.norm() && pi_.dot(pj) < 0.0) {
        out[i].antipodal_partner = j;
        break;
      }
    }
  }
  return out;
}

Admissibility is_admissible(const BilliardConfig& cfg) {
  const double b = cfg.b;
  if (b >= 1.0) {
    if (cfg.x0 == 0.0 && cfg.y0 == 0.0)
      return {false, "circle centred at the mass: all central configurations are degenerate"};
    return {false, "circle: exactly two antipodal central configurations"};
  }
  const double e2 = 1.0 - b * b;
  if (cfg.x0 == 0.0 && std::abs(cfg.y0) >= e2 / b)
    return {false, "minor-axis branch: x0 = 0 and |y0| >= (1-b^2)/b"};
  if (cfg.y0 == 0.0 && std::abs(cfg.x0) >= e2)
    return {false, "major-axis branch: y0 = 0 and |x0| >= 1-b^2"};
  return {true, "at least two non-degenerate, non-antipodal central configurations"};
}

bool is_admissible_constructive(const BilliardConfig& cfg) {
  std::vector<CentralConfiguration> ccs;
  try {
    ccs = central_configurations(cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::degenerate_family) return false;
    throw;
  }
  for (std::size_t i = 0; i < ccs.size(); ++i) {
    if (ccs[i].degenerate) continue;
    for (std::size_t j = i + 1; j < ccs.size(); ++j) {
      if (ccs[j].degenerate) continue;
      const bool antipodal = (ccs[i].antipodal_partner && *ccs[i].antipodal_partner == j) ||
                             (ccs[j].antipodal_partner && *ccs[j].antipodal_partner == i);
      if (!antipodal) return true;
    }
  }
  return false;
}

double potential_inner(const Vec2& p, const BilliardConfig& cfg) {
  const double r = p.norm();
  if (r == 0.0) throw Error(ErrorKind::origin_singularity, "inner potential evaluated at the origin");
  return cfg.h_inner + cfg.mu / r;
}

double potential_outer(const Vec2& p, const BilliardConfig& cfg) {
  return cfg.h_outer - 0.5 * cfg.omega * cfg.omega * p.squaredNorm();
}

double angle_from_normal(const Vec2& v, const Vec2& normal, const Vec2& tangent) {
  return std::atan2(v.dot(tangent), v.dot(normal));
}

PhaseState section_to_phase(const SectionState& s, Direction dir, const BilliardConfig& cfg) {
  const double xi = wrap_angle(s.xi);
  const Vec2 p = gamma(xi, cfg);
  const Vec2 t = unit_tangent(xi, cfg);
  Vec2 n;
  double speed;
  if (dir == Direction::inward) {
    n = inward_normal(xi, cfg);
    speed = std::sqrt(2.0 * potential_inner(p, cfg));
  } else {
    n = outward_normal(xi, cfg);
    const double ve = potential_outer(p, cfg);
    if (!(ve > 0.0)) throw Error(ErrorKind::invalid_configuration, "outer kinetic energy non-positive on the boundary");
    speed = std::sqrt(2.0 * ve);
  }
  return {p, speed * (std::cos(s.alpha) * n + std::sin(s.alpha) * t)};
}

SectionState phase_to_section(const PhaseState& p, const BilliardConfig& cfg) {
  const double bval = implicit_B(p.position, cfg);
  if (std::abs(bval) > cfg.tol.root_tol) {
    std::ostringstream os;
    os << "phase state is off the boundary (|B| = " << std::abs(bval) << ")";
    throw Error(ErrorKind::off_boundary, os.str());
  }
  const double xi = boundary_parameter(p.position, cfg);
  const Vec2 t = unit_tangent(xi, cfg);
  const Vec2 n_in = inward_normal(xi, cfg);
  const Vec2 n = p.velocity.dot(n_in) >= 0.0 ? n_in : Vec2(-n_in);
  return {xi, angle_from_normal(p.velocity, n, t)};
}

}  // namespace kbill
