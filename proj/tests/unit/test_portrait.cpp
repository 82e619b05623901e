#include <doctest.h>

#include <cmath>

#include "kbill/error.hpp"
#include "kbill/inner_arc.hpp"
#include "kbill/outer_arc.hpp"
#include "kbill/portrait.hpp"
#include "kbill/transitions.hpp"
#include "test_util.hpp"

using namespace kbill;
using doctest::Approx;

namespace {

bool same(const PortraitDataset& a, const PortraitDataset& b) {
  if (a.orbits.size() != b.orbits.size()) return false;
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    const auto& x = a.orbits[i];
    const auto& y = b.orbits[i];
    if (x.termination != y.termination || x.states.size() != y.states.size()) return false;
    for (std::size_t k = 0; k < x.states.size(); ++k)
      if (x.states[k].xi != y.states[k].xi || x.states[k].alpha != y.states[k].alpha) return false;
  }
  return true;
}

struct Arrival {
  Vec2 point;
  double alpha;  // from the outward normal
};

// End of the inner leg that follows the outer arc launched from s.
Arrival inner_arrival(const SectionState& s, const BilliardConfig& c) {
  const ArcResult outer = propagate_outer(section_to_phase(s, Direction::outward, c), c);
  const double xi1 = outer.xi_end;
  const double alpha_E =
      angle_from_normal(outer.end_state.velocity, inward_normal(xi1, c), unit_tangent(xi1, c));
  const double alpha_I = refract_inward(alpha_E, outer.end_state.position, c);
  const ArcResult inner = propagate_inner(section_to_phase({xi1, alpha_I}, Direction::inward, c), c);
  const double xi2 = inner.xi_end;
  return {inner.end_state.position,
          angle_from_normal(inner.end_state.velocity, outward_normal(xi2, c), unit_tangent(xi2, c))};
}

}  // namespace

TEST_CASE("PortraitSpec validation and seeds") {
  PortraitSpec spec;
  CHECK_NOTHROW(validate(spec));
  const auto seeds = portrait_seeds(spec);
  REQUIRE(seeds.size() == 24u * 24u);
  CHECK(seeds[0].xi == Approx(kTwoPi / 48));
  CHECK(seeds[0].alpha == Approx(-1.5 + 3.0 / 48));
  CHECK(seeds[1].xi == seeds[0].xi);  // xi-major

  for (auto bad : {[] { PortraitSpec s; s.n_xi = 0; return s; }(),
                   [] { PortraitSpec s; s.alpha_max = 1.6; return s; }(),
                   [] { PortraitSpec s; s.xi_min = -0.1; return s; }(),
                   [] { PortraitSpec s; s.iterations = 0; return s; }()}) {
    try {
      validate(bad);
      FAIL("expected InvalidConfiguration");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_configuration);
    }
  }
}

TEST_CASE("generation is deterministic and independent of the thread count") {
  PortraitSpec spec;
  spec.n_xi = 6;
  spec.n_alpha = 5;
  spec.iterations = 60;
  const auto c = testing::focused_ellipse(10.0);
  spec.threads = 1;
  const auto a = generate(spec, c);
  spec.threads = 4;
  const auto b = generate(spec, c);
  const auto d = generate(spec, c);
  CHECK(a.orbits.size() == 30);
  CHECK(same(a, b));
  CHECK(same(b, d));
  for (std::size_t i = 0; i < a.seeds.size(); ++i) {
    CHECK(a.orbits[i].states.front().xi == a.seeds[i].xi);
    for (const auto& s : a.orbits[i].states) {
      CHECK(s.xi >= 0.0);
      CHECK(s.xi < kTwoPi);
      CHECK(std::abs(s.alpha) < kPi / 2);
    }
  }
}

TEST_CASE("seeds at fixed points give constant orbits") {
  PortraitSpec spec;
  spec.seeds = {{0.0, 0.0}, {kPi, 0.0}};
  spec.iterations = 50;
  for (const auto& c : {testing::focused_ellipse(), testing::refractive_circle(0.4, 12.0)}) {
    const auto data = generate(spec, c);
    for (const auto& orbit : data.orbits) {
      CHECK(orbit.termination == Termination::completed);
      for (const auto& s : orbit.states) CHECK(testing::section_distance(s, orbit.states.front()) <= 1e-10);
    }
  }
}

TEST_CASE("centred circle: constant alpha, evenly spaced xi") {
  PortraitSpec spec;
  spec.n_xi = 3;
  spec.n_alpha = 4;
  spec.alpha_min = -1.0;
  spec.alpha_max = 1.0;
  spec.iterations = 200;
  BilliardConfig reflective;
  reflective.mu = 2.0;
  reflective.h_inner = 3.0;
  for (const auto& c : {reflective, testing::refractive_circle(0.0, 12.0)}) {
    const auto data = generate(spec, c);
    for (const auto& orbit : data.orbits) {
      REQUIRE(orbit.termination == Termination::completed);
      const double step = wrap_difference(orbit.states[1].xi - orbit.states[0].xi);
      for (std::size_t k = 1; k < orbit.states.size(); ++k) {
        CHECK(std::abs(orbit.states[k].alpha - orbit.states[0].alpha) <= 1e-9);
        CHECK(std::abs(wrap_difference(orbit.states[k].xi - orbit.states[k - 1].xi - step)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("low-energy focused ellipse keeps the homothetic neighbourhoods apart") {
  PortraitSpec spec;
  spec.n_xi = 16;
  spec.n_alpha = 1;
  spec.alpha_min = -0.01;
  spec.alpha_max = 0.01;
  spec.iterations = 300;
  const auto data = generate(spec, testing::focused_ellipse(3.0));
  for (const auto& orbit : data.orbits) {
    bool near_zero = false, near_pi = false;
    for (const auto& s : orbit.states) {
      near_zero = near_zero || testing::section_distance(s, {0.0, 0.0}) < 0.15;
      near_pi = near_pi || testing::section_distance(s, {kPi, 0.0}) < 0.15;
    }
    CHECK_FALSE((near_zero && near_pi));
  }
}

TEST_CASE("terminated refractive orbits end beyond the critical angle") {
  PortraitSpec spec;
  spec.n_xi = 8;
  spec.n_alpha = 8;
  spec.iterations = 200;
  auto c = testing::refractive_circle(0.1, 10.0);
  c.b = std::sqrt(0.99);
  const auto data = generate(spec, c);
  int terminated = 0;
  for (const auto& orbit : data.orbits) {
    if (orbit.termination != Termination::total_internal_reflection) continue;
    ++terminated;
    const Arrival arr = inner_arrival(orbit.states.back(), c);
    CHECK(std::abs(arr.alpha) > critical_angle(arr.point, c));
  }
  CHECK(terminated > 0);
}
