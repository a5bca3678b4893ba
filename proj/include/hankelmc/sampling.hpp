#ifndef HANKELMC_SAMPLING_HPP
#define HANKELMC_SAMPLING_HPP

#include "hankelmc/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hankelmc {

enum class MaskMode { M1, M2, M3, Custom };

/// Set of observed (channel, time) cells. M1 drops cells uniformly at random,
/// M2 drops whole time columns, M3 drops one contiguous time block on a
/// random half of the channels.
struct ObservationMask {
  Index n_c = 0;
  Index n = 0;
  MaskMode mode = MaskMode::Custom;
  std::uint64_t seed = 0;
  Eigen::ArrayXXd grid;  // n_c x n indicator, 1 = observed

  Index size() const { return static_cast<Index>(grid.sum() + 0.5); }
  Index cells() const { return n_c * n; }
  double fraction() const { return double(size()) / double(cells()); }
  bool observed(Index k, Index t) const { return grid(k, t) != 0.0; }
  bool full() const { return size() == cells(); }
  bool empty() const { return size() == 0; }

  /// Sorted (channel, time) list of observed cells.
  std::vector<std::pair<Index, Index>> index_list() const;

  static ObservationMask full_mask(Index n_c, Index n);
  static ObservationMask from_indices(Index n_c, Index n,
                                      const std::vector<std::pair<Index, Index>>& indices);
};

/// Draw an observation mask for the given missing-data mode. loss_fraction is
/// the fraction of cells removed, in [0,1). Deterministic per seed.
ObservationMask sample_mask(Index n_c, Index n, MaskMode mode, double loss_fraction,
                            std::uint64_t seed);

/// Zero out unobserved cells.
CxMatrix project(const ObservationMask& mask, const CxMatrix& Z);
/// Zero out observed cells (projection onto the complement).
CxMatrix project_complement(const ObservationMask& mask, const CxMatrix& Z);

/// Split a mask into L disjoint sub-masks covering it; the remainder after
/// equal division goes to the first subsets, one cell each.
std::vector<ObservationMask> partition(const ObservationMask& mask, Index L,
                                       std::uint64_t seed);

enum class CorruptionMode { B1, B2, B3 };

/// Sparse corruption layout and magnitude law. The nonzero entries have
/// magnitude uniform in (Xbar, 5*Xbar) with Xbar = ||X||_F / sqrt(n_c*n) and
/// phase uniform in (0, 2pi), or (0, pi/2) when quadrant1 is set.
struct CorruptionSpec {
  CorruptionMode mode = CorruptionMode::B1;
  double alpha = 0.0;  // per-row corrupted fraction
  bool quadrant1 = false;
  std::uint64_t seed = 0;
};

struct Corruption {
  CxMatrix corrupted;  // M = X + S
  CxMatrix sparse;     // S, the planted error matrix
  std::vector<std::pair<Index, Index>> support;  // sorted
};

/// Plant sparse errors on X per the spec. B1 corrupts floor(alpha*n) random
/// cells in every row, B2 corrupts floor(alpha*n) random full columns, B3
/// corrupts floor(alpha*n) consecutive full columns at a random start.
Corruption corrupt(const CxMatrix& X, const CorruptionSpec& spec);

}  // namespace hankelmc

#endif
