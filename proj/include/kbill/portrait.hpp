#pragma once

#include <vector>

#include "kbill/return_map.hpp"

namespace kbill {

/// Grid (or explicit list) of seeds on the section cylinder.
struct PortraitSpec {
  double xi_min = 0.0;
  double xi_max = kTwoPi;
  double alpha_min = -1.5;
  double alpha_max = 1.5;
  int n_xi = 24;
  int n_alpha = 24;
  std::vector<SectionState> seeds;  // used instead of the grid when non-empty
  int iterations = 1000;
  bool capture_trajectories = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct PortraitDataset {
  BilliardConfig config;
  std::vector<SectionState> seeds;
  std::vector<OrbitRecord> orbits;  // orbits[i] starts from seeds[i]
};

/// Throws Error(invalid_configuration) if the windows leave the cylinder or
/// the counts are not positive.
void validate(const PortraitSpec& spec);

/// Seeds at the cell centres of the n_xi x n_alpha grid, xi-major order.
std::vector<SectionState> portrait_seeds(const PortraitSpec& spec);

/// Iterates the map selected by cfg.mode from every seed. Orbits run in
/// parallel; the result is ordered by seed index and does not depend on the
/// thread count.
PortraitDataset generate(const PortraitSpec& spec, const BilliardConfig& cfg);

}  // namespace kbill
