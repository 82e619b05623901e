#include "kbill/return_map.hpp"

#include <cmath>
#include <string>

#include "kbill/error.hpp"
#include "kbill/inner_arc.hpp"
#include "kbill/outer_arc.hpp"
#include "kbill/transitions.hpp"

namespace kbill {

namespace {

using Polyline = std::vector<Vec2>;

void append(Polyline* out, const std::vector<Vec2>& pts) {
  if (out) out->insert(out->end(), pts.begin(), pts.end());
}

SectionState step_F(const SectionState& s, const BilliardConfig& cfg, Polyline* poly) {
  const PhaseState start = section_to_phase(s, Direction::inward, cfg);
  const ArcResult arc = propagate_inner(start, cfg, poly != nullptr);
  append(poly, arc.polyline);

  const double xi1 = arc.xi_end;
  const Vec2 n_in = inward_normal(xi1, cfg);
  const Vec2 v1 = reflect(arc.end_state.velocity, n_in);
  return {xi1, angle_from_normal(v1, n_in, unit_tangent(xi1, cfg))};
}

SectionState step_G(const SectionState& s, const BilliardConfig& cfg, Polyline* poly) {
  const PhaseState start = section_to_phase(s, Direction::outward, cfg);
  const ArcResult outer = propagate_outer(start, cfg, poly != nullptr);
  append(poly, outer.polyline);

  // Entering refraction.
  const double xi_mid = outer.xi_end;
  const double alpha_E =
      angle_from_normal(outer.end_state.velocity, inward_normal(xi_mid, cfg), unit_tangent(xi_mid, cfg));
  double alpha_I = refract_inward(alpha_E, gamma(xi_mid, cfg), cfg);
  double xi_inner = xi_mid;

  for (int bounce = 0;; ++bounce) {
    const ArcResult inner = propagate_inner(section_to_phase({xi_inner, alpha_I}, Direction::inward, cfg), cfg,
                                            poly != nullptr);
    append(poly, inner.polyline);

    const double xi1 = inner.xi_end;
    const double alpha_in =
        angle_from_normal(inner.end_state.velocity, outward_normal(xi1, cfg), unit_tangent(xi1, cfg));
    if (const auto alpha_out = refract_outward(alpha_in, gamma(xi1, cfg), cfg)) return {xi1, *alpha_out};

    if (!cfg.internal_reflection)
      throw Error(ErrorKind::total_internal_reflection,
                  "inner incidence " + std::to_string(alpha_in) + " exceeds the critical angle");
    if (bounce >= cfg.tol.max_iter)
      throw Error(ErrorKind::numerical_stall, "internal reflections did not terminate");
    // The reflected ray leaves at the same angle from the inward normal.
    xi_inner = xi1;
    alpha_I = alpha_in;
  }
}

Termination termination_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::grazing_intersection: return Termination::grazing;
    case ErrorKind::total_internal_reflection: return Termination::total_internal_reflection;
    case ErrorKind::no_reentry: return Termination::no_reentry;
    default: return Termination::numerical_stall;
  }
}

}  // namespace

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::grazing: return "grazing";
    case Termination::total_internal_reflection: return "total_internal_reflection";
    case Termination::no_reentry: return "no_reentry";
    case Termination::numerical_stall: return "numerical_stall";
  }
  return "numerical_stall";
}

Termination termination_from_string(std::string_view name) {
  for (auto t : {Termination::completed, Termination::grazing, Termination::total_internal_reflection,
                 Termination::no_reentry, Termination::numerical_stall})
    if (to_string(t) == name) return t;
  throw Error(ErrorKind::invalid_configuration, "unknown termination tag '" + std::string(name) + "'");
}

SectionState map_F(const SectionState& s, const BilliardConfig& cfg) { return step_F(s, cfg, nullptr); }

SectionState map_G(const SectionState& s, const BilliardConfig& cfg) { return step_G(s, cfg, nullptr); }

SectionState apply_map(MapKind map, const SectionState& s, const BilliardConfig& cfg) {
  return map == MapKind::F ? map_F(s, cfg) : map_G(s, cfg);
}

MapKind map_for(const BilliardConfig& cfg) { return cfg.mode == Mode::reflective ? MapKind::F : MapKind::G; }

OrbitRecord iterate(MapKind map, const SectionState& s0, int n, const BilliardConfig& cfg, bool capture_trajectory) {
  OrbitRecord rec;
  rec.states.reserve(static_cast<std::size_t>(n) + 1);
  rec.states.push_back({wrap_angle(s0.xi), s0.alpha});
  for (int i = 0; i < n; ++i) {
    Polyline poly;
    Polyline* sink = capture_trajectory ? &poly : nullptr;
    try {
      const SectionState next =
          map == MapKind::F ? step_F(rec.states.back(), cfg, sink) : step_G(rec.states.back(), cfg, sink);
      rec.states.push_back(next);
      if (capture_trajectory) rec.trajectory.push_back(std::move(poly));
    } catch (const Error& e) {
      rec.termination = termination_of(e.kind());
      return rec;
    }
  }
  rec.termination = Termination::completed;
  return rec;
}

}  // namespace kbill
