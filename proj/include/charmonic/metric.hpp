#ifndef CHARMONIC_METRIC_HPP
#define CHARMONIC_METRIC_HPP

#include "charmonic/field.hpp"

namespace charmonic {

/// Riemannian metric on a ChartGrid with cached inverse and volume density.
struct Metric {
  TensorField value;    // (0,2), stored symmetric
  TensorField inverse;  // (2,0)
  Eigen::VectorXd volume_density;  // sqrt(det g)

  const ChartGrid& grid() const { return value.grid; }
  int dim() const { return value.grid.dim; }
};

/// Validates symmetry and pointwise positive-definiteness, then caches the
/// inverse and the volume density.
Metric make_metric(TensorField g);

std::pair<ChartGrid, Metric> make_flat_torus(int dim, const std::vector<int>& sizes,
                                             const std::vector<Real>& period = {});

/// e^{2 omega} g. Rejects |omega| > 300 to avoid silent overflow.
Metric conformal_metric(const Metric& g, const Eigen::VectorXd& omega);

/// Trapezoid rule on the periodic grid: sum f * sqrt(det g) * prod(spacing).
Real integrate(const Eigen::VectorXd& f, const Metric& g);
Real total_volume(const Metric& g);

/// Pointwise g-orthonormal frame from the Cholesky factorization g = L L^T;
/// column k of the returned matrix is the frame vector e_k (so e_k^a = out(a,k),
/// equal to L^{-T}). Frames satisfy sum_k e_k e_k^T = g^{-1}.
Eigen::MatrixXd cholesky_frame(const Metric& g, Index point);

/// Small helpers for per-point views of rank-2 fields.
Eigen::MatrixXd point_matrix(const TensorField& t, Index p);

}  // namespace charmonic

#endif
