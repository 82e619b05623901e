#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace kbill::detail {

struct Bracket {
  double lo;
  double hi;
};

/// Smallest bracket [lo, hi] in (0, s_max] over which fn leaves the sign
/// `sign0` it takes just after s = 0 (fn(0) itself is ~0). Marches with a
/// fixed step after confirming the initial sign by step halving.
template <class Fn>
std::optional<Bracket> first_sign_change(Fn&& fn, double sign0, double step, double s_max,
                                         int max_steps) {
  auto has_sign0 = [&](double v) { return sign0 > 0 ? v > 0.0 : v < 0.0; };

  double s = step;
  int halvings = 0;
  while (!has_sign0(fn(s))) {
    if (++halvings > 60) return std::nullopt;
    s *= 0.5;
  }
  if (halvings > 0) return Bracket{s, 2.0 * s};

  for (int k = 0; k < max_steps; ++k) {
    const double next = std::min(s + step, s_max);
    if (!has_sign0(fn(next))) return Bracket{s, next};
    if (next >= s_max) return std::nullopt;
    s = next;
  }
  return std::nullopt;
}

/// Bisection down to adjacent doubles (or max_iter halvings). Returns the
/// endpoint with the smaller |fn|.
template <class Fn>
double bisect(Fn&& fn, Bracket br, int max_iter = 200) {
  double f_lo = fn(br.lo);
  double f_hi = fn(br.hi);
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (br.lo + br.hi);
    if (mid <= br.lo || mid >= br.hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (f_lo > 0.0)) {
      br.lo = mid;
      f_lo = fm;
    } else {
      br.hi = mid;
      f_hi = fm;
    }
  }
  return std::abs(f_lo) <= std::abs(f_hi) ? br.lo : br.hi;
}

}  // namespace kbill::detail
