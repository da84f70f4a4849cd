#include "charmonic/metric.hpp"

#include <Eigen/Cholesky>

namespace charmonic {

Eigen::MatrixXd point_matrix(const TensorField& t, Index p) {
  const int n = t.grid.dim;
  if (t.rank() != 2) throw std::invalid_argument("point_matrix: rank-2 field required");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = t.data(p, i * n + j);
  return m;
}

Metric make_metric(TensorField g) {
  if (g.rank() != 2 || g.variance[0] != Variance::Covariant ||
      g.variance[1] != Variance::Covariant)
    throw std::invalid_argument("metric: (0,2) tensor required");
  const int n = g.grid.dim;
  // Store exactly symmetric.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd s = 0.5 * (g.data.col(i * n + j) + g.data.col(j * n + i));
      g.data.col(i * n + j) = s;
      g.data.col(j * n + i) = s;
    }
  g.symmetries = {SymmetryTag{0, 1, false}};

  Metric m;
  m.value = g;
  m.inverse = make_tensor_field(g.grid, {Variance::Contravariant, Variance::Contravariant});
  m.inverse.symmetries = {SymmetryTag{0, 1, false}};
  m.volume_density.resize(g.grid.npoints);
  Eigen::MatrixXd gp(n, n);
  for (Index p = 0; p < g.grid.npoints; ++p) {
    gp = point_matrix(g, p);
    Eigen::LLT<Eigen::MatrixXd> llt(gp);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("metric: not positive definite at a grid point");
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    inv = 0.5 * (inv + inv.transpose().eval());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.inverse.data(p, i * n + j) = inv(i, j);
    Real det = 1;
    for (int i = 0; i < n; ++i) det *= llt.matrixL()(i, i);
    m.volume_density[p] = det;  // prod of Cholesky diagonal = sqrt(det g)
  }
  return m;
}

std::pair<ChartGrid, Metric> make_flat_torus(int dim, const std::vector<int>& sizes,
                                             const std::vector<Real>& period) {
  if (dim != 2 && dim != 4 && dim != 6)
    throw std::invalid_argument("make_flat_torus: dim must be 2, 4 or 6");
  ChartGrid g = make_grid(dim, sizes, period);
  TensorField id = make_tensor_field(g, {Variance::Covariant, Variance::Covariant});
  for (int i = 0; i < dim; ++i) id.data.col(i * dim + i).setOnes();
  return {g, make_metric(std::move(id))};
}

Metric conformal_metric(const Metric& g, const Eigen::VectorXd& omega) {
  if (omega.size() != g.grid().npoints)
    throw std::invalid_argument("conformal_metric: omega on wrong grid");
  if (omega.cwiseAbs().maxCoeff() > 300)
    throw std::invalid_argument("conformal_metric: |omega| > 300 rejected");
  TensorField v = g.value;
  Eigen::ArrayXd factor = (2.0 * omega.array()).exp();
  for (int c = 0; c < v.ncomp(); ++c) v.data.col(c).array() *= factor;
  return make_metric(std::move(v));
}

Real integrate(const Eigen::VectorXd& f, const Metric& g) {
  if (f.size() != g.grid().npoints) throw std::invalid_argument("integrate: wrong grid");
  return g.grid().cell_volume() * f.dot(g.volume_density);
}

Real total_volume(const Metric& g) {
  return g.grid().cell_volume() * g.volume_density.sum();
}

Eigen::MatrixXd cholesky_frame(const Metric& g, Index p) {
  const int n = g.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(point_matrix(g.value, p));
  Eigen::MatrixXd linv =
      llt.matrixL().solve(Eigen::MatrixXd::Identity(n, n));
  return linv.transpose();
}

}  // namespace charmonic
