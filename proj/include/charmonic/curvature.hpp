#ifndef CHARMONIC_CURVATURE_HPP
#define CHARMONIC_CURVATURE_HPP

#include "charmonic/metric.hpp"

namespace charmonic {

// Conventions, fixed once for the whole artifact:
//   - Riem(X,Y,Z,W) = g(R(X,Y)Z, W) with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y],
//     so the round unit n-sphere has scal = n(n-1) > 0.
//   - Ric_{jk} = g^{il} Riem_{ijkl}.
//   - delta T = -g^{ij} nabla_i T_{j...}, the formal adjoint of d, so the
//     Laplacian delta d has positive spectrum.

/// Gamma^k_{ij}, component order [k,i,j]; symmetric in (i,j) by construction.
TensorField christoffel(const Metric& g);

/// Covariant derivative with the new covariant slot first:
/// (nabla T)_{a I} = partial_a T_I + Gamma corrections per slot variance.
TensorField covariant_derivative(const TensorField& t, const Metric& g,
                                 const TensorField& gamma);

/// delta T = -g^{ai} (nabla T)_{a i ...}; first slot of T must be covariant.
TensorField divergence(const TensorField& t, const Metric& g);
TensorField divergence(const TensorField& t, const Metric& g, const TensorField& gamma);

Eigen::VectorXd laplacian(const Eigen::VectorXd& f, const Metric& g);

TensorField riemann(const Metric& g);               // (0,4), R_{ijkl}
TensorField ricci(const Metric& g);                  // (0,2), symmetric
TensorField ricci(const Metric& g, const TensorField& gamma);
Eigen::VectorXd scalar_curv(const Metric& g);
Eigen::VectorXd scalar_curv(const Metric& g, const TensorField& ric);

/// Sc = (Ric - scal/(2(n-1)) g) / (n-2). Rejects dim 2.
TensorField schouten(const Metric& g);
TensorField schouten(const Metric& g, const TensorField& ric);

/// Riemann minus its Kulkarni-Nomizu completion by the Schouten tensor;
/// totally trace-free. Rejects dim < 4. Materializes a (0,4) field, so use
/// only in dim <= 4; bach() streams the dim-6 contraction instead.
TensorField weyl(const Metric& g);

/// Bach tensor: B(X,Y) = sum_k (nabla_{e_k} nabla_{e_k} Sc)(X,Y)
/// - (nabla_{e_k} nabla_Y Sc)(X,e_k) - Sc(W_{e_k,X} Y, e_k), with a pointwise
/// Cholesky g-orthonormal frame e_k. In dim 4 it is symmetric and trace-free.
TensorField bach(const Metric& g);

/// Contraction helpers.
TensorField raise_index(const TensorField& t, const Metric& g, int slot);
TensorField lower_index(const TensorField& t, const Metric& g, int slot);
Eigen::VectorXd trace_g(const TensorField& t, const Metric& g);  // g^{ij} t_{ij}
TensorField compose2(const TensorField& a, const TensorField& b, const Metric& g);  // a_{ik} g^{kl} b_{lj}
Eigen::VectorXd norm2_g(const TensorField& t, const Metric& g);  // |t|_g^2 for rank 2 covariant

}  // namespace charmonic

#endif
