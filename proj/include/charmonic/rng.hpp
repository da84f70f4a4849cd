#ifndef CHARMONIC_RNG_HPP
#define CHARMONIC_RNG_HPP

#include "charmonic/grid.hpp"

#include <cstdint>

namespace charmonic {

/// Counter-based generator: value i of stream (seed, stream) is a pure
/// function of its arguments, so experiment reports are reproducible
/// regardless of call order.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t counter = 0;

  std::uint64_t next_u64();
  /// Uniform in [-1, 1).
  Real next_symmetric();
};

/// Smooth random scalar field: low-frequency Fourier modes with amplitudes
/// damped by 1/(1+|k|^2). max_mode bounds each |k_a|.
Eigen::VectorXd random_smooth_scalar(const ChartGrid& g, CounterRng& rng,
                                     Real amplitude, int max_mode = 2);

}  // namespace charmonic

#endif
