#include "charmonic/grid.hpp"

#include <cmath>
#include <numbers>

namespace charmonic {

ChartGrid make_grid(int dim, const std::vector<int>& sizes,
                    const std::vector<Real>& period) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("grid: dim must be in [1,6]");
  if (static_cast<int>(sizes.size()) != dim)
    throw std::invalid_argument("grid: sizes length must equal dim");
  ChartGrid g;
  g.dim = dim;
  g.sizes = sizes;
  g.period = period.empty() ? std::vector<Real>(dim, 2 * std::numbers::pi) : period;
  if (static_cast<int>(g.period.size()) != dim)
    throw std::invalid_argument("grid: period length must equal dim");
  g.spacing.resize(dim);
  g.stride.resize(dim);
  g.npoints = 1;
  for (int a = 0; a < dim; ++a) {
    if (sizes[a] < 8) throw std::invalid_argument("grid: axis size below 8");
    if (sizes[a] % 2 != 0) throw std::invalid_argument("grid: axis size must be even");
    if (!(g.period[a] > 0)) throw std::invalid_argument("grid: period must be positive");
    g.spacing[a] = g.period[a] / sizes[a];
    g.stride[a] = g.npoints;
    g.npoints *= sizes[a];
  }
  return g;
}

void unflatten_index(const ChartGrid& g, Index p, std::vector<int>& idx) {
  idx.resize(g.dim);
  for (int a = 0; a < g.dim; ++a) {
    idx[a] = static_cast<int>(p % g.sizes[a]);
    p /= g.sizes[a];
  }
}

Eigen::VectorXd coordinate_field(const ChartGrid& g, int axis) {
  Eigen::VectorXd x(g.npoints);
  for (Index p = 0; p < g.npoints; ++p) {
    Index i = (p / g.stride[axis]) % g.sizes[axis];
    x[p] = g.spacing[axis] * static_cast<Real>(i);
  }
  return x;
}

Eigen::MatrixXd derivative_matrix(int n, Real period, DiffScheme scheme) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const Real scale = 2 * std::numbers::pi / period;
  if (scheme == DiffScheme::Spectral) {
    // Trigonometric interpolation derivative for an even number of nodes.
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        if (j == l) continue;
        int k = j - l;
        Real sign = (k % 2 == 0) ? 1.0 : -1.0;
        d(j, l) = scale * 0.5 * sign / std::tan(std::numbers::pi * k / n);
      }
  } else {
    const Real h = period / n;
    auto wrap = [n](int i) { return ((i % n) + n) % n; };
    for (int j = 0; j < n; ++j) {
      d(j, wrap(j - 2)) += 1.0 / (12 * h);
      d(j, wrap(j - 1)) += -8.0 / (12 * h);
      d(j, wrap(j + 1)) += 8.0 / (12 * h);
      d(j, wrap(j + 2)) += -1.0 / (12 * h);
    }
  }
  return d;
}

namespace {

template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> apply_axis_impl(
    const ChartGrid& g, int axis, const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
    const Eigen::Vector<Scalar, Eigen::Dynamic>& f) {
  const int n = g.sizes[axis];
  const Index stride = g.stride[axis];
  Eigen::Vector<Scalar, Eigen::Dynamic> out(g.npoints);
  Eigen::Vector<Scalar, Eigen::Dynamic> pencil(n), res(n);
  // Pencils along `axis`: iterate over the complement of the axis in the
  // flattened ordering. inner runs over indices below the axis stride, outer
  // over blocks above it.
  const Index block = stride * n;
  for (Index outer = 0; outer < g.npoints; outer += block) {
    for (Index inner = 0; inner < stride; ++inner) {
      const Index base = outer + inner;
      for (int i = 0; i < n; ++i) pencil[i] = f[base + i * stride];
      res.noalias() = m * pencil;
      for (int i = 0; i < n; ++i) out[base + i * stride] = res[i];
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXd apply_axis_matrix(const ChartGrid& g, int axis,
                                  const Eigen::MatrixXd& m,
                                  const Eigen::VectorXd& f) {
  return apply_axis_impl<Real>(g, axis, m, f);
}

Eigen::VectorXcd apply_axis_matrix(const ChartGrid& g, int axis,
                                   const Eigen::MatrixXcd& m,
                                   const Eigen::VectorXcd& f) {
  return apply_axis_impl<std::complex<Real>>(g, axis, m, f);
}

Eigen::VectorXd derivative(const ChartGrid& g, int axis, const Eigen::VectorXd& f,
                           DiffScheme scheme) {
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("derivative: bad axis");
  return apply_axis_matrix(g, axis, derivative_matrix(g.sizes[axis], g.period[axis], scheme), f);
}

}  // namespace charmonic
