#include "charmonic/curvature.hpp"

namespace charmonic {

namespace {

inline int c2(int n, int i, int j) { return i * n + j; }
inline int c3(int n, int k, int i, int j) { return (k * n + i) * n + j; }
inline int c4(int n, int i, int j, int k, int l) { return ((i * n + j) * n + k) * n + l; }

inline int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Derivative of every component along every axis; d[a] is the componentwise
// partial along axis a.
std::vector<TensorField> all_partials(const TensorField& t) {
  std::vector<TensorField> d;
  d.reserve(t.grid.dim);
  for (int a = 0; a < t.grid.dim; ++a) d.push_back(partial_derivative(t, a));
  return d;
}

}  // namespace

TensorField christoffel(const Metric& g) {
  const int n = g.dim();
  const auto dg = all_partials(g.value);
  TensorField gamma = make_tensor_field(
      g.grid(), {Variance::Contravariant, Variance::Covariant, Variance::Covariant});
  gamma.symmetries = {SymmetryTag{1, 2, false}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // lower-index bracket [l;ij] = (d_i g_{jl} + d_j g_{il} - d_l g_{ij}) / 2
      std::vector<Eigen::VectorXd> bracket(n);
      for (int l = 0; l < n; ++l)
        bracket[l] = 0.5 * (dg[i].data.col(c2(n, j, l)) + dg[j].data.col(c2(n, i, l)) -
                            dg[l].data.col(c2(n, i, j)));
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(g.grid().npoints);
        for (int l = 0; l < n; ++l)
          acc.array() += g.inverse.data.col(c2(n, k, l)).array() * bracket[l].array();
        gamma.data.col(c3(n, k, i, j)) = acc;
        if (i != j) gamma.data.col(c3(n, k, j, i)) = acc;
      }
    }
  return gamma;
}

TensorField covariant_derivative(const TensorField& t, const Metric& g,
                                 const TensorField& gamma) {
  const int n = g.dim();
  const int r = t.rank();
  const int nc = t.ncomp();
  std::vector<Variance> var;
  var.push_back(Variance::Covariant);
  for (auto v : t.variance) var.push_back(v);
  TensorField out = make_tensor_field(g.grid(), var);

  std::vector<int> idx(r);
  for (int a = 0; a < n; ++a) {
    TensorField dt = partial_derivative(t, a);
    for (int c = 0; c < nc; ++c) {
      int tmp = c;
      for (int s = r - 1; s >= 0; --s) {
        idx[s] = tmp % n;
        tmp /= n;
      }
      Eigen::VectorXd acc = dt.data.col(c);
      for (int s = 0; s < r; ++s) {
        const int is = idx[s];
        // component index with slot s replaced by b, as a function of b
        int base = c - is * ipow(n, r - 1 - s);
        int step = ipow(n, r - 1 - s);
        for (int b = 0; b < n; ++b) {
          const auto tb = t.data.col(base + b * step);
          if (t.variance[s] == Variance::Contravariant)
            acc.array() += gamma.data.col(c3(n, is, a, b)).array() * tb.array();
          else
            acc.array() -= gamma.data.col(c3(n, b, a, is)).array() * tb.array();
        }
      }
      out.data.col(a * nc + c) = acc;
    }
  }
  return out;
}

TensorField divergence(const TensorField& t, const Metric& g) {
  return divergence(t, g, christoffel(g));
}

TensorField divergence(const TensorField& t, const Metric& g, const TensorField& gamma) {
  const int n = g.dim();
  const int r = t.rank();
  if (r < 1 || t.variance[0] != Variance::Covariant)
    throw std::invalid_argument("divergence: first slot must be covariant");
  std::vector<Variance> var(t.variance.begin() + 1, t.variance.end());
  TensorField out = make_tensor_field(g.grid(), var);
  const int ncJ = out.ncomp();

  std::vector<int> idx(r - 1);
  for (int a = 0; a < n; ++a) {
    TensorField dt = partial_derivative(t, a);
    for (int i = 0; i < n; ++i) {
      const auto w = g.inverse.data.col(c2(n, a, i));
      for (int cj = 0; cj < ncJ; ++cj) {
        int cin = i * ncJ + cj;
        // nabla_a T_{i J}
        Eigen::VectorXd nab = dt.data.col(cin);
        for (int b = 0; b < n; ++b)
          nab.array() -=
              gamma.data.col(c3(n, b, a, i)).array() * t.data.col(b * ncJ + cj).array();
        int tmp = cj;
        for (int s = r - 2; s >= 0; --s) {
          idx[s] = tmp % n;
          tmp /= n;
        }
        for (int s = 0; s < r - 1; ++s) {
          const int js = idx[s];
          int step = ipow(n, r - 2 - s);
          int base = cin - js * step;
          for (int b = 0; b < n; ++b) {
            const auto tb = t.data.col(base + b * step);
            if (t.variance[s + 1] == Variance::Contravariant)
              nab.array() += gamma.data.col(c3(n, js, a, b)).array() * tb.array();
            else
              nab.array() -= gamma.data.col(c3(n, b, a, js)).array() * tb.array();
          }
        }
        out.data.col(cj).array() -= w.array() * nab.array();
      }
    }
  }
  return out;
}

Eigen::VectorXd laplacian(const Eigen::VectorXd& f, const Metric& g) {
  TensorField df = make_tensor_field(g.grid(), {Variance::Covariant});
  for (int a = 0; a < g.dim(); ++a) df.data.col(a) = derivative(g.grid(), a, f);
  return divergence(df, g).data.col(0);
}

TensorField riemann(const Metric& g) {
  const int n = g.dim();
  const TensorField gamma = christoffel(g);
  const auto dgamma = all_partials(gamma);
  TensorField riem = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant,
                                                  Variance::Covariant, Variance::Covariant});
  riem.symmetries = {SymmetryTag{0, 1, true}};
  const Index np = g.grid().npoints;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // R^m_{ijk}, then lower with g_{lm}
        std::vector<Eigen::VectorXd> up(n);
        for (int m = 0; m < n; ++m) {
          Eigen::VectorXd v =
              dgamma[i].data.col(c3(n, m, j, k)) - dgamma[j].data.col(c3(n, m, i, k));
          for (int a = 0; a < n; ++a)
            v.array() += gamma.data.col(c3(n, m, i, a)).array() *
                             gamma.data.col(c3(n, a, j, k)).array() -
                         gamma.data.col(c3(n, m, j, a)).array() *
                             gamma.data.col(c3(n, a, i, k)).array();
          up[m] = v;
        }
        for (int l = 0; l < n; ++l) {
          Eigen::VectorXd low = Eigen::VectorXd::Zero(np);
          for (int m = 0; m < n; ++m)
            low.array() += g.value.data.col(c2(n, l, m)).array() * up[m].array();
          riem.data.col(c4(n, i, j, k, l)) = low;
          riem.data.col(c4(n, j, i, k, l)) = -low;
        }
      }
  return riem;
}

TensorField ricci(const Metric& g) { return ricci(g, christoffel(g)); }

TensorField ricci(const Metric& g, const TensorField& gamma) {
  const int n = g.dim();
  const auto dgamma = all_partials(gamma);
  TensorField ric = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant});
  const Index np = g.grid().npoints;
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(np);
      for (int a = 0; a < n; ++a) {
        v += dgamma[a].data.col(c3(n, a, j, k)) - dgamma[j].data.col(c3(n, a, a, k));
        for (int b = 0; b < n; ++b)
          v.array() += gamma.data.col(c3(n, a, a, b)).array() *
                           gamma.data.col(c3(n, b, j, k)).array() -
                       gamma.data.col(c3(n, a, j, b)).array() *
                           gamma.data.col(c3(n, b, a, k)).array();
      }
      ric.data.col(c2(n, j, k)) = v;
      if (j != k) ric.data.col(c2(n, k, j)) = v;
    }
  // The analytic operator is symmetric; symmetrizing removes the discrete
  // asymmetry of mixed partials on rough data. Done above by construction
  // (j <= k), but the two stored triangles came from the same sum, so the
  // declared symmetry is exact.
  ric.symmetries = {SymmetryTag{0, 1, false}};
  return ric;
}

Eigen::VectorXd scalar_curv(const Metric& g) { return trace_g(ricci(g), g); }

Eigen::VectorXd scalar_curv(const Metric& g, const TensorField& ric) {
  return trace_g(ric, g);
}

TensorField schouten(const Metric& g) { return schouten(g, ricci(g)); }

TensorField schouten(const Metric& g, const TensorField& ric) {
  const int n = g.dim();
  if (n < 3) throw std::invalid_argument("schouten: requires dim >= 3");
  Eigen::VectorXd scal = trace_g(ric, g);
  TensorField sc = ric;
  Eigen::ArrayXd shift = scal.array() / (2.0 * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sc.data.col(c2(n, i, j)) =
          (ric.data.col(c2(n, i, j)).array() - shift * g.value.data.col(c2(n, i, j)).array()) /
          (n - 2);
  sc.symmetries = {SymmetryTag{0, 1, false}};
  return sc;
}

TensorField weyl(const Metric& g) {
  const int n = g.dim();
  if (n < 4) throw std::invalid_argument("weyl: requires dim >= 4");
  TensorField w = riemann(g);
  TensorField sc = schouten(g);
  const auto& gv = g.value.data;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // Kulkarni-Nomizu product Sc ^ g
          w.data.col(c4(n, i, j, k, l)).array() +=
              sc.data.col(c2(n, i, k)).array() * gv.col(c2(n, j, l)).array() +
              sc.data.col(c2(n, j, l)).array() * gv.col(c2(n, i, k)).array() -
              sc.data.col(c2(n, i, l)).array() * gv.col(c2(n, j, k)).array() -
              sc.data.col(c2(n, j, k)).array() * gv.col(c2(n, i, l)).array();
        }
  w.symmetries = {SymmetryTag{0, 1, true}};
  return w;
}

namespace detail {

// Streamed Bach evaluation: never materializes a rank-4 field, so it stays
// inside the memory budget in dim 6. Algebraically identical to the frame
// formula because sum_k e_k e_k^T = g^{-1}.
TensorField bach_streamed(const Metric& g) {
  const int n = g.dim();
  const Index np = g.grid().npoints;
  const TensorField gamma = christoffel(g);
  const TensorField ric = ricci(g, gamma);
  const TensorField sc = schouten(g, ric);
  const TensorField s1 = covariant_derivative(sc, g, gamma);  // (a,i,j)

  TensorField term1 = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant});
  TensorField term2 = term1;

  const auto& gi = g.inverse.data;
  // S2_{b,p,q,s} = nabla_b (nabla Sc)_{p q s}, consumed on the fly:
  //   term1_{qs} += g^{bp} S2_{bpqs},  term2_{qp} -= g^{bs} S2_{bpqs}.
  for (int b = 0; b < n; ++b) {
    TensorField ds1 = partial_derivative(s1, b);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int s = 0; s < n; ++s) {
          Eigen::VectorXd f = ds1.data.col(c3(n, p, q, s));
          for (int c = 0; c < n; ++c)
            f.array() -= gamma.data.col(c3(n, c, b, p)).array() *
                             s1.data.col(c3(n, c, q, s)).array() +
                         gamma.data.col(c3(n, c, b, q)).array() *
                             s1.data.col(c3(n, p, c, s)).array() +
                         gamma.data.col(c3(n, c, b, s)).array() *
                             s1.data.col(c3(n, p, q, c)).array();
          term1.data.col(c2(n, q, s)).array() += gi.col(c2(n, b, p)).array() * f.array();
          term2.data.col(c2(n, q, p)).array() -= gi.col(c2(n, b, s)).array() * f.array();
        }
  }

  // Weyl contraction term: -Sc^{lu} W_{u i j l}, split into the Riemann part
  // and the Kulkarni-Nomizu part (the latter is pure (0,2) algebra).
  TensorField scmix = raise_index(sc, g, 0);  // Sc^u_m  (slot0 contravariant)
  TensorField t3 = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant});

  // Riemann part: t3R_{ij} = -Sc^u_m R^m_{uij}
  for (int u = 0; u < n; ++u) {
    // d_u Gamma^m_{ij} for all (m,i,j)
    TensorField dgu = partial_derivative(gamma, u);
    for (int m = 0; m < n; ++m) {
      const auto w = scmix.data.col(c2(n, u, m));
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd dgi_col;  // d_i Gamma^m_{uj}
        for (int j = 0; j < n; ++j) {
          Eigen::VectorXd rm = dgu.data.col(c3(n, m, i, j)) -
                               derivative(g.grid(), i, gamma.data.col(c3(n, m, u, j)));
          for (int a = 0; a < n; ++a)
            rm.array() += gamma.data.col(c3(n, m, u, a)).array() *
                              gamma.data.col(c3(n, a, i, j)).array() -
                          gamma.data.col(c3(n, m, i, a)).array() *
                              gamma.data.col(c3(n, a, u, j)).array();
          t3.data.col(c2(n, i, j)).array() -= w.array() * rm.array();
        }
      }
    }
  }
  // Kulkarni-Nomizu part: -(2 SS_{ij} - q g_{ij} - trSc Sc_{ij})
  TensorField ss = compose2(sc, sc, g);
  Eigen::VectorXd q = trace_g(ss, g);
  Eigen::VectorXd trsc = trace_g(sc, g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t3.data.col(c2(n, i, j)).array() -=
          2.0 * ss.data.col(c2(n, i, j)).array() -
          q.array() * g.value.data.col(c2(n, i, j)).array() -
          trsc.array() * sc.data.col(c2(n, i, j)).array();

  TensorField out = term1;
  out.data += term2.data + t3.data;
  return out;
}

}  // namespace detail

TensorField bach(const Metric& g) {
  const int n = g.dim();
  if (n < 4) throw std::invalid_argument("bach: requires dim >= 4");
  if (n > 4) return detail::bach_streamed(g);

  const TensorField gamma = christoffel(g);
  const TensorField sc = schouten(g, ricci(g, gamma));
  const TensorField s1 = covariant_derivative(sc, g, gamma);
  const TensorField s2 = covariant_derivative(s1, g, gamma);  // (b,a,i,j)
  const TensorField w = weyl(g);

  TensorField out = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant});
  Eigen::MatrixXd e;
  for (Index p = 0; p < g.grid().npoints; ++p) {
    e = cholesky_frame(g, p);  // column k = frame vector e_k
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Real acc = 0;
        for (int k = 0; k < n; ++k) {
          for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) {
              acc += e(b, k) * e(a, k) * s2.data(p, c4(n, b, a, i, j));
              // -(nabla_{e_k} nabla_Y Sc)(X, e_k): outer b, inner j, args (i, a)
              acc -= e(b, k) * e(a, k) * s2.data(p, c4(n, b, j, i, a));
            }
          // -Sc(W_{e_k, X} Y, e_k)
          for (int u = 0; u < n; ++u)
            for (int l = 0; l < n; ++l)
              for (int m = 0; m < n; ++m)
                for (int q = 0; q < n; ++q)
                  acc -= sc.data(p, c2(n, m, q)) * g.inverse.data(p, c2(n, m, l)) *
                         w.data(p, c4(n, u, i, j, l)) * e(u, k) * e(q, k);
        }
        out.data(p, c2(n, i, j)) = acc;
      }
  }
  return out;
}

TensorField raise_index(const TensorField& t, const Metric& g, int slot) {
  if (t.variance[slot] != Variance::Covariant)
    throw std::invalid_argument("raise_index: slot already contravariant");
  const int n = g.dim();
  TensorField out = t;
  out.variance[slot] = Variance::Contravariant;
  out.symmetries.clear();
  const int r = t.rank();
  const int step = ipow(n, r - 1 - slot);
  for (int c = 0; c < t.ncomp(); ++c) {
    const int is = (c / step) % n;
    const int base = c - is * step;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(t.grid.npoints);
    for (int b = 0; b < n; ++b)
      acc.array() += g.inverse.data.col(is * n + b).array() * t.data.col(base + b * step).array();
    out.data.col(c) = acc;
  }
  return out;
}

TensorField lower_index(const TensorField& t, const Metric& g, int slot) {
  if (t.variance[slot] != Variance::Contravariant)
    throw std::invalid_argument("lower_index: slot already covariant");
  const int n = g.dim();
  TensorField out = t;
  out.variance[slot] = Variance::Covariant;
  out.symmetries.clear();
  const int r = t.rank();
  const int step = ipow(n, r - 1 - slot);
  for (int c = 0; c < t.ncomp(); ++c) {
    const int is = (c / step) % n;
    const int base = c - is * step;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(t.grid.npoints);
    for (int b = 0; b < n; ++b)
      acc.array() += g.value.data.col(is * n + b).array() * t.data.col(base + b * step).array();
    out.data.col(c) = acc;
  }
  return out;
}

Eigen::VectorXd trace_g(const TensorField& t, const Metric& g) {
  const int n = g.dim();
  if (t.rank() != 2) throw std::invalid_argument("trace_g: rank-2 field required");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(t.grid.npoints);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.array() += g.inverse.data.col(i * n + j).array() * t.data.col(i * n + j).array();
  return out;
}

TensorField compose2(const TensorField& a, const TensorField& b, const Metric& g) {
  const int n = g.dim();
  TensorField out = make_tensor_field(g.grid(), {Variance::Covariant, Variance::Covariant});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(a.grid.npoints);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc.array() += a.data.col(i * n + k).array() *
                         g.inverse.data.col(k * n + l).array() * b.data.col(l * n + j).array();
      out.data.col(i * n + j) = acc;
    }
  return out;
}

Eigen::VectorXd norm2_g(const TensorField& t, const Metric& g) {
  const int n = g.dim();
  if (t.rank() != 2) throw std::invalid_argument("norm2_g: rank-2 field required");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(t.grid.npoints);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out.array() += g.inverse.data.col(i * n + k).array() *
                         g.inverse.data.col(j * n + l).array() *
                         t.data.col(i * n + j).array() * t.data.col(k * n + l).array();
  return out;
}

}  // namespace charmonic
