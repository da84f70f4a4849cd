#ifndef CHARMONIC_FIELD_HPP
#define CHARMONIC_FIELD_HPP

#include "charmonic/grid.hpp"

#include <string>

namespace charmonic {

enum class Variance { Covariant, Contravariant };

/// Declared exchange symmetry between two tensor slots. Declared symmetries
/// are the ones the constructor enforces exactly; everything else is checked
/// in tests at discretization tolerance.
struct SymmetryTag {
  int slot_a = 0;
  int slot_b = 1;
  bool antisymmetric = false;
};

/// Array of tensor components over a ChartGrid. Storage is one column per
/// component (row-major flattening of the tensor multi-index), one row per
/// grid point.
struct TensorField {
  ChartGrid grid;
  std::vector<Variance> variance;
  std::vector<SymmetryTag> symmetries;
  Eigen::MatrixXd data;

  int rank() const { return static_cast<int>(variance.size()); }
  int ncomp() const { return static_cast<int>(data.cols()); }

  /// Flat component index from a tensor multi-index.
  int comp(std::initializer_list<int> idx) const {
    int c = 0;
    for (int i : idx) c = c * grid.dim + i;
    return c;
  }
};

TensorField make_tensor_field(const ChartGrid& g, std::vector<Variance> variance);
TensorField make_scalar_field(const ChartGrid& g, Eigen::VectorXd values);

inline int ncomp_for_rank(const ChartGrid& g, int rank) {
  int c = 1;
  for (int i = 0; i < rank; ++i) c *= g.dim;
  return c;
}

/// Largest symmetry violation over the declared tags, relative to max|comp|.
Real max_symmetry_violation(const TensorField& t);

/// Componentwise periodic derivative; does not add a tensor slot.
TensorField partial_derivative(const TensorField& t, int axis,
                               DiffScheme scheme = DiffScheme::Spectral);

std::string dump_field_json(const TensorField& t);
TensorField load_field_json(const std::string& text);

}  // namespace charmonic

#endif
