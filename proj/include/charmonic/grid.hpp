#ifndef CHARMONIC_GRID_HPP
#define CHARMONIC_GRID_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace charmonic {

using Real = double;
using Index = std::ptrdiff_t;

/// How periodic derivatives are discretized. Spectral (trigonometric
/// interpolation) is the default; 4th-order central differences are kept as a
/// validation fallback.
enum class DiffScheme { Spectral, CentralFD4 };

/// Uniform periodic sample grid on an n-dimensional coordinate torus.
/// Axis 0 is the fastest-varying index in the flattened point ordering.
struct ChartGrid {
  int dim = 0;
  std::vector<int> sizes;
  std::vector<Real> period;
  std::vector<Real> spacing;
  std::vector<Index> stride;
  Index npoints = 0;

  bool operator==(const ChartGrid& o) const {
    return dim == o.dim && sizes == o.sizes && period == o.period;
  }
  bool operator!=(const ChartGrid& o) const { return !(*this == o); }

  Real cell_volume() const {
    Real v = 1;
    for (Real s : spacing) v *= s;
    return v;
  }
};

/// Builds a grid, rejecting dimensions and sizes outside the supported range.
/// Every axis needs at least 8 samples and an even count.
ChartGrid make_grid(int dim, const std::vector<int>& sizes,
                    const std::vector<Real>& period = {});

inline Index flat_index(const ChartGrid& g, const std::vector<int>& idx) {
  Index p = 0;
  for (int a = 0; a < g.dim; ++a) p += g.stride[a] * idx[a];
  return p;
}

void unflatten_index(const ChartGrid& g, Index p, std::vector<int>& idx);

/// Coordinate of every grid point along one axis, as a field.
Eigen::VectorXd coordinate_field(const ChartGrid& g, int axis);

/// Dense one-dimensional differentiation matrix for a periodic axis.
Eigen::MatrixXd derivative_matrix(int n, Real period, DiffScheme scheme);

/// Applies an n_a x n_a matrix along one axis of a flattened grid field.
Eigen::VectorXd apply_axis_matrix(const ChartGrid& g, int axis,
                                  const Eigen::MatrixXd& m,
                                  const Eigen::VectorXd& f);

/// Complex variant, used by the constant-coefficient Fourier solvers.
Eigen::VectorXcd apply_axis_matrix(const ChartGrid& g, int axis,
                                   const Eigen::MatrixXcd& m,
                                   const Eigen::VectorXcd& f);

/// d/dx_axis of a scalar sample vector.
Eigen::VectorXd derivative(const ChartGrid& g, int axis,
                           const Eigen::VectorXd& f,
                           DiffScheme scheme = DiffScheme::Spectral);

}  // namespace charmonic

#endif
