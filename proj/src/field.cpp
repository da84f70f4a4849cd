#include "charmonic/field.hpp"

#include <json.hpp>

namespace charmonic {

TensorField make_tensor_field(const ChartGrid& g, std::vector<Variance> variance) {
  TensorField t;
  t.grid = g;
  t.variance = std::move(variance);
  t.data = Eigen::MatrixXd::Zero(g.npoints, ncomp_for_rank(g, static_cast<int>(t.variance.size())));
  return t;
}

TensorField make_scalar_field(const ChartGrid& g, Eigen::VectorXd values) {
  if (values.size() != g.npoints) throw std::invalid_argument("scalar field: wrong length");
  TensorField t;
  t.grid = g;
  t.data = std::move(values);
  return t;
}

namespace {

// Component index with two slots swapped.
int swapped_comp(const TensorField& t, int c, int slot_a, int slot_b) {
  const int r = t.rank();
  const int n = t.grid.dim;
  std::vector<int> idx(r);
  for (int s = r - 1; s >= 0; --s) {
    idx[s] = c % n;
    c /= n;
  }
  std::swap(idx[slot_a], idx[slot_b]);
  int out = 0;
  for (int s = 0; s < r; ++s) out = out * n + idx[s];
  return out;
}

}  // namespace

Real max_symmetry_violation(const TensorField& t) {
  Real scale = t.data.cwiseAbs().maxCoeff();
  if (scale == 0) return 0;
  Real worst = 0;
  for (const auto& tag : t.symmetries) {
    const Real sign = tag.antisymmetric ? -1.0 : 1.0;
    for (int c = 0; c < t.ncomp(); ++c) {
      int cs = swapped_comp(t, c, tag.slot_a, tag.slot_b);
      if (cs < c) continue;
      Real v = (t.data.col(c) - sign * t.data.col(cs)).cwiseAbs().maxCoeff();
      worst = std::max(worst, v);
    }
  }
  return worst / scale;
}

TensorField partial_derivative(const TensorField& t, int axis, DiffScheme scheme) {
  TensorField out = t;
  const Eigen::MatrixXd d =
      derivative_matrix(t.grid.sizes[axis], t.grid.period[axis], scheme);
  for (int c = 0; c < t.ncomp(); ++c)
    out.data.col(c) = apply_axis_matrix(t.grid, axis, d, t.data.col(c));
  out.symmetries = t.symmetries;  // componentwise op preserves declared symmetries
  return out;
}

std::string dump_field_json(const TensorField& t) {
  nlohmann::ordered_json j;
  j["grid"]["dim"] = t.grid.dim;
  j["grid"]["sizes"] = t.grid.sizes;
  j["grid"]["period"] = t.grid.period;
  std::vector<std::string> var;
  for (auto v : t.variance)
    var.push_back(v == Variance::Covariant ? "covariant" : "contravariant");
  j["variance"] = var;
  // Point-major: all components of point 0, then point 1, ...
  std::vector<Real> flat;
  flat.reserve(static_cast<size_t>(t.grid.npoints) * t.ncomp());
  for (Index p = 0; p < t.grid.npoints; ++p)
    for (int c = 0; c < t.ncomp(); ++c) flat.push_back(t.data(p, c));
  j["data"] = flat;
  return j.dump();
}

TensorField load_field_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ChartGrid g = make_grid(j.at("grid").at("dim").get<int>(),
                          j.at("grid").at("sizes").get<std::vector<int>>(),
                          j.at("grid").at("period").get<std::vector<Real>>());
  std::vector<Variance> var;
  for (const auto& s : j.at("variance"))
    var.push_back(s.get<std::string>() == "covariant" ? Variance::Covariant
                                                      : Variance::Contravariant);
  TensorField t = make_tensor_field(g, var);
  const auto& flat = j.at("data");
  if (static_cast<Index>(flat.size()) != g.npoints * t.ncomp())
    throw std::invalid_argument("field load: data length mismatch");
  size_t k = 0;
  for (Index p = 0; p < g.npoints; ++p)
    for (int c = 0; c < t.ncomp(); ++c) t.data(p, c) = flat[k++].get<Real>();
  return t;
}

}  // namespace charmonic
