#include "charmonic/rng.hpp"

#include <cmath>
#include <numbers>

namespace charmonic {

namespace {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t CounterRng::next_u64() {
  std::uint64_t v = splitmix64(splitmix64(seed ^ splitmix64(stream)) + counter);
  ++counter;
  return v;
}

Real CounterRng::next_symmetric() {
  return 2.0 * (next_u64() >> 11) * 0x1.0p-53 - 1.0;
}

Eigen::VectorXd random_smooth_scalar(const ChartGrid& g, CounterRng& rng,
                                     Real amplitude, int max_mode) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.npoints);
  std::vector<Eigen::VectorXd> x(g.dim);
  for (int a = 0; a < g.dim; ++a) x[a] = coordinate_field(g, a);

  // Enumerate wave vectors with |k_a| <= max_mode, skipping k = 0.
  std::vector<int> k(g.dim, -max_mode);
  while (true) {
    Real k2 = 0;
    for (int a = 0; a < g.dim; ++a) k2 += Real(k[a]) * k[a];
    if (k2 > 0) {
      Real amp = amplitude * rng.next_symmetric() / (1.0 + k2);
      Real phase = std::numbers::pi * rng.next_symmetric();
      Eigen::ArrayXd arg = Eigen::ArrayXd::Constant(g.npoints, phase);
      for (int a = 0; a < g.dim; ++a)
        if (k[a] != 0)
          arg += k[a] * (2 * std::numbers::pi / g.period[a]) * x[a].array();
      f.array() += amp * arg.cos();
    }
    int a = 0;
    while (a < g.dim && k[a] == max_mode) k[a++] = -max_mode;
    if (a == g.dim) break;
    ++k[a];
  }
  return f;
}

}  // namespace charmonic
