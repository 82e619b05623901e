#include "kbill/portrait.hpp"

#include <atomic>
#include <thread>

#include "kbill/error.hpp"

namespace kbill {

void validate(const PortraitSpec& spec) {
  auto bad = [](const char* msg) { throw Error(ErrorKind::invalid_configuration, msg); };
  if (spec.seeds.empty()) {
    if (spec.n_xi < 1 || spec.n_alpha < 1) bad("portrait grid counts must be at least 1");
    if (!(spec.xi_min >= 0.0 && spec.xi_max <= kTwoPi && spec.xi_min < spec.xi_max))
      bad("xi window must lie inside [0, 2pi)");
    if (!(spec.alpha_min > -0.5 * kPi && spec.alpha_max < 0.5 * kPi && spec.alpha_min < spec.alpha_max))
      bad("alpha window must lie inside (-pi/2, pi/2)");
  }
  for (const auto& s : spec.seeds)
    if (!(std::abs(s.alpha) < 0.5 * kPi)) bad("seed alpha must lie inside (-pi/2, pi/2)");
  if (spec.iterations < 1) bad("iterations must be at least 1");
}

std::vector<SectionState> portrait_seeds(const PortraitSpec& spec) {
  if (!spec.seeds.empty()) return spec.seeds;
  std::vector<SectionState> seeds;
  seeds.reserve(static_cast<std::size_t>(spec.n_xi) * spec.n_alpha);
  const double dxi = (spec.xi_max - spec.xi_min) / spec.n_xi;
  const double dal = (spec.alpha_max - spec.alpha_min) / spec.n_alpha;
  for (int i = 0; i < spec.n_xi; ++i)
    for (int j = 0; j < spec.n_alpha; ++j)
      seeds.push_back({spec.xi_min + (i + 0.5) * dxi, spec.alpha_min + (j + 0.5) * dal});
  return seeds;
}

PortraitDataset generate(const PortraitSpec& spec, const BilliardConfig& cfg) {
  validate(cfg);
  validate(spec);

  PortraitDataset data;
  data.config = cfg;
  data.seeds = portrait_seeds(spec);
  data.orbits.resize(data.seeds.size());

  const MapKind map = map_for(cfg);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < data.seeds.size(); i = next++)
      data.orbits[i] = iterate(map, data.seeds[i], spec.iterations, cfg, spec.capture_trajectories);
  };

  unsigned n_threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, data.seeds.size()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return data;
}

}  // namespace kbill
