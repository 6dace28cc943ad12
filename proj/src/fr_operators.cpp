#include "nsfr/fr_operators.hpp"

#include <cmath>

namespace nsfr {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double vcjh_ap(int p) { return factorial(2 * p) / (std::pow(2.0, p) * factorial(p) * factorial(p)); }

}  // namespace

// The classical closed forms carry a factor of two relative to the correction
// block c (D^p)^T M D^p used here; the conversion is pinned by the identity
// M_GL + K(c_HU) = diag(w_LGL), asserted in the test suite.
double correction_c_sd(int p) {
  if (p < 1) throw DimensionError("correction_c_sd: p >= 1 required");
  const double ap_fact = vcjh_ap(p) * factorial(p);
  return 0.5 * 2.0 * p / ((2.0 * p + 1.0) * (p + 1.0) * ap_fact * ap_fact);
}

double correction_c_hu(int p) {
  if (p < 1) throw DimensionError("correction_c_hu: p >= 1 required");
  const double ap_fact = vcjh_ap(p) * factorial(p);
  return 0.5 * 2.0 * (p + 1.0) / ((2.0 * p + 1.0) * p * ap_fact * ap_fact);
}

bool correction_c_plus_available(int p) { return p >= 2 && p <= 5; }

double correction_c_plus(int p) {
  // 1D von Neumann values (RK4 linear advection), halved into this convention
  switch (p) {
    case 2: return 0.5 * 0.206;
    case 3: return 0.5 * 3.80e-3;
    case 4: return 0.5 * 4.67e-5;
    case 5: return 0.5 * 4.28e-7;
    default:
      throw DimensionError("correction_c_plus: tabulated only for p in [2,5]; pass scheme.c_1d explicitly");
  }
}

double correction_c_combo(double c1d, int active_dirs) {
  double c = 1.0;
  for (int k = 0; k < active_dirs; ++k) c *= c1d;
  return c;
}

Operator1D diff_power_p(const Basis1D& basis) {
  Operator1D d = mat_solve(basis.mass, basis.stiffness);
  Operator1D dp = Operator1D::identity(basis.p + 1);
  for (int k = 0; k < basis.p; ++k) dp = mat_mul(d, dp);
  return dp;
}

Operator1D correction_1d(const Basis1D& basis, double c1d) {
  if (c1d < 0.0) throw DimensionError("correction parameter must be nonnegative");
  const int np = basis.p + 1;
  Operator1D k(np, np);
  if (c1d == 0.0) return k;
  Operator1D dp = diff_power_p(basis);
  Operator1D mdp = mat_mul(basis.mass, dp);
  Operator1D dpt = dp.transposed();
  k = mat_mul(dpt, mdp);
  for (double& v : k.a) v *= c1d;
  return k;
}

Operator1D modified_mass_1d(const Basis1D& basis, double c1d) {
  Operator1D m = basis.mass;
  Operator1D k = correction_1d(basis, c1d);
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += k.a[i];
  return m;
}

Operator1D build_fr_projection(const Basis1D& basis, double c1d) {
  Operator1D mk = modified_mass_1d(basis, c1d);
  Operator1D chi_t_w = basis.interp.transposed();
  for (int i = 0; i < chi_t_w.rows; ++i)
    for (int q = 0; q < chi_t_w.cols; ++q) chi_t_w(i, q) *= basis.eval_rule.weights[q];
  return mat_solve(mk, chi_t_w);
}

ReferenceOperators build_reference_operators(int p, QuadKind quad_kind, int overint,
                                             double c1d) {
  ReferenceOperators ops;
  const QuadratureRule sol = quadrature_rule(QuadKind::GaussLobattoLegendre, p + 1);
  const QuadratureRule quad = quadrature_rule(quad_kind, p + 1 + overint);
  ops.basis = lagrange_matrices(p, sol, quad);
  ops.c1d = c1d;
  ops.proj = l2_projection(ops.basis);
  ops.k1d = correction_1d(ops.basis, c1d);
  ops.mmass1d = modified_mass_1d(ops.basis, c1d);
  ops.mmass1d_inv = mat_inverse(ops.mmass1d);
  ops.fr_proj = build_fr_projection(ops.basis, c1d);
  LagrangeBasis flux_basis(quad.nodes);
  ops.quad_diff = flux_basis.diff_matrix();
  const int nq = quad.n;
  ops.skew = Operator1D(nq, nq);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j)
      ops.skew(i, j) = quad.weights[i] * ops.quad_diff(i, j) - ops.quad_diff(j, i) * quad.weights[j];
  const std::array<double, 2> ends{-1.0, 1.0};
  ops.bound_flux = flux_basis.eval_matrix(ends);
  ops.bound_sol = ops.basis.lagrange.eval_matrix(ends);
  ops.wq = quad.weights;
  return ops;
}

HybridStiffness build_hybrid_stiffness(const ReferenceOperators& ops, int dim) {
  if (dim < 1 || dim > 3) throw DimensionError("build_hybrid_stiffness: dim in [1,3]");
  HybridStiffness h;
  h.dim = dim;
  const int nq = ops.nq();
  h.ext = Extents{nq, dim > 1 ? nq : 1, dim > 2 ? nq : 1};
  h.n_volume = h.ext.size();
  h.face_offsets.assign(2 * dim + 1, 0);
  for (int f = 0; f < 2 * dim; ++f)
    h.face_offsets[f + 1] = h.face_offsets[f] + face_node_count(h.ext, f / 2);
  h.n_face_total = h.face_offsets[2 * dim];
  const int n = h.n_volume + h.n_face_total;

  // 3D quadrature weights at volume nodes
  std::vector<double> w3(h.n_volume, 1.0);
  for (int k = 0; k < h.ext.nz; ++k)
    for (int j = 0; j < h.ext.ny; ++j)
      for (int i = 0; i < h.ext.nx; ++i) {
        double w = ops.wq[i];
        if (dim > 1) w *= ops.wq[j];
        if (dim > 2) w *= ops.wq[k];
        w3[h.ext.index(i, j, k)] = w;
      }

  h.qtilde.assign(dim, Operator1D(n, n));
  h.skew.assign(dim, Operator1D(n, n));
  h.boundary.assign(dim, Operator1D(n, n));

  for (int r = 0; r < dim; ++r) {
    Operator1D& sk = h.skew[r];
    Operator1D& bd = h.boundary[r];
    // volume block W d_r phi - (d_r phi)^T W
    for (int k = 0; k < h.ext.nz; ++k)
      for (int j = 0; j < h.ext.ny; ++j)
        for (int i = 0; i < h.ext.nx; ++i) {
          const int row = h.ext.index(i, j, k);
          const int ri = (r == 0) ? i : (r == 1 ? j : k);
          for (int b = 0; b < nq; ++b) {
            const int col = (r == 0) ? h.ext.index(b, j, k)
                                     : (r == 1 ? h.ext.index(i, b, k) : h.ext.index(i, j, b));
            sk(row, col) += w3[row] * ops.quad_diff(ri, b);
            sk(col, row) -= w3[row] * ops.quad_diff(ri, b);
          }
        }
    // face blocks for the two faces normal to r
    for (int side = 0; side < 2; ++side) {
      const int face_id = 2 * r + side;
      const double sign = side ? 1.0 : -1.0;
      const int t1n = (r == 0) ? h.ext.ny : h.ext.nx;
      const int t2n = (r == 2) ? h.ext.ny : h.ext.nz;
      for (int t2 = 0; t2 < t2n; ++t2)
        for (int t1 = 0; t1 < t1n; ++t1) {
          const int fnode = t1 + t1n * t2;
          const int col = h.n_volume + h.face_offsets[face_id] + fnode;
          double wf = 1.0;
          if (dim > 1) wf *= ops.wq[t1];
          if (dim > 2) wf *= ops.wq[t2];
          for (int a = 0; a < nq; ++a) {
            const int row = (r == 0) ? h.ext.index(a, t1, dim > 2 ? t2 : 0)
                                     : (r == 1 ? h.ext.index(t1, a, dim > 2 ? t2 : 0)
                                               : h.ext.index(t1, t2, a));
            const double val = ops.bound_flux(side, a) * wf * sign;
            sk(row, col) += val;
            sk(col, row) -= val;
          }
          bd(col, col) = sign * wf;
        }
    }
    Operator1D& qt = h.qtilde[r];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) qt(i, j) = 0.5 * (sk(i, j) + bd(i, j));
  }
  return h;
}

namespace {

Operator1D kron_chain(const std::vector<const Operator1D*>& ms) {
  Operator1D acc = *ms[0];
  for (size_t i = 1; i < ms.size(); ++i) acc = kron(acc, *ms[i]);
  return acc;
}

}  // namespace

Operator1D kron(const Operator1D& a, const Operator1D& b) {
  Operator1D c(a.rows * b.rows, a.cols * b.cols);
  for (int ia = 0; ia < a.rows; ++ia)
    for (int ja = 0; ja < a.cols; ++ja) {
      const double av = a(ia, ja);
      if (av == 0.0) continue;
      for (int ib = 0; ib < b.rows; ++ib)
        for (int jb = 0; jb < b.cols; ++jb)
          c(ia * b.rows + ib, ja * b.cols + jb) = av * b(ib, jb);
    }
  return c;
}

Operator1D build_curvilinear_mass(const ReferenceOperators& ops, int dim,
                                  std::span<const double> j_vol) {
  const Operator1D eye1 = Operator1D::identity(1);
  std::vector<const Operator1D*> chain;
  for (int r = dim - 1; r >= 0; --r) chain.push_back(&ops.basis.interp);
  while (static_cast<int>(chain.size()) < 3) chain.insert(chain.begin(), &eye1);
  Operator1D chi = kron_chain(chain);  // (nq^dim) x (np^dim), xi fastest
  const int nv = chi.rows, np = chi.cols;
  if (static_cast<int>(j_vol.size()) != nv)
    throw DimensionError("build_curvilinear_mass: J size mismatch");
  const int nq = ops.nq();
  Operator1D m(np, np);
  for (int q = 0; q < nv; ++q) {
    const int i = q % nq;
    const int j = (dim > 1) ? (q / nq) % nq : 0;
    const int k = (dim > 2) ? q / (nq * nq) : 0;
    double w = ops.wq[i];
    if (dim > 1) w *= ops.wq[j];
    if (dim > 2) w *= ops.wq[k];
    if (j_vol[q] <= 0.0) throw InvalidMeshError("build_curvilinear_mass: nonpositive J");
    const double wj = w * j_vol[q];
    for (int a = 0; a < np; ++a) {
      const double ca = chi(q, a);
      if (ca == 0.0) continue;
      for (int b = 0; b < np; ++b) m(a, b) += ca * wj * chi(q, b);
    }
  }
  return m;
}

Operator1D build_correction_operator(const ReferenceOperators& ops, int dim,
                                     std::span<const double> j_vol, double c1d) {
  if (c1d < 0.0) throw DimensionError("correction parameter must be nonnegative");
  const int np1 = ops.np();
  int np = 1;
  for (int r = 0; r < dim; ++r) np *= np1;
  Operator1D km(np, np);
  if (c1d == 0.0) return km;
  Operator1D mm = build_curvilinear_mass(ops, dim, j_vol);
  Operator1D dp = diff_power_p(ops.basis);
  const Operator1D eye = Operator1D::identity(np1);
  const Operator1D eye1 = Operator1D::identity(1);
  for (int mask = 1; mask < (1 << dim); ++mask) {
    std::vector<const Operator1D*> chain;
    for (int r = dim - 1; r >= 0; --r) chain.push_back((mask >> r) & 1 ? &dp : &eye);
    while (static_cast<int>(chain.size()) < 3) chain.insert(chain.begin(), &eye1);
    Operator1D dcombo = kron_chain(chain);
    const double c = correction_c_combo(c1d, __builtin_popcount(mask));
    Operator1D t = mat_mul(dcombo.transposed(), mat_mul(mm, dcombo));
    for (size_t i = 0; i < km.a.size(); ++i) km.a[i] += c * t.a[i];
  }
  return km;
}

size_t wa_work_size(const ReferenceOperators& ops, int dim) {
  const int np = ops.np(), nq = ops.nq();
  size_t nv = 1, nm = 1;
  for (int r = 0; r < dim; ++r) {
    nv *= nq;
    nm *= np;
  }
  // node buffer + two tensor intermediates sized generously
  const size_t inter = static_cast<size_t>(std::max(np, nq)) * std::max(np, nq) *
                       std::max(np, nq);
  return nv + nm + 2 * inter;
}

void weight_adjusted_inverse_apply(const ReferenceOperators& ops, int dim,
                                   std::span<const double> j_vol,
                                   std::span<const double> rhs, std::span<double> out,
                                   std::span<double> work) {
  static const Operator1D eye1 = Operator1D::identity(1);
  const int np = ops.np(), nq = ops.nq();
  Extents me{np, dim > 1 ? np : 1, dim > 2 ? np : 1};
  Extents qe{nq, dim > 1 ? nq : 1, dim > 2 ? nq : 1};
  const int nv = qe.size();
  if (static_cast<int>(j_vol.size()) != nv)
    throw DimensionError("weight_adjusted_inverse_apply: J size mismatch");
  Operator1D pt = ops.fr_proj.transposed();
  std::array<const Operator1D*, 3> up{&pt, dim > 1 ? &pt : &eye1, dim > 2 ? &pt : &eye1};
  std::array<const Operator1D*, 3> down{&ops.fr_proj, dim > 1 ? &ops.fr_proj : &eye1,
                                        dim > 2 ? &ops.fr_proj : &eye1};
  std::span<double> nodal = work.subspan(0, nv);
  std::span<double> rest = work.subspan(nv);
  apply_tensor_product(*up[0], *up[1], *up[2], rhs, me, nodal, rest);
  for (int k = 0; k < qe.nz; ++k)
    for (int j = 0; j < qe.ny; ++j)
      for (int i = 0; i < qe.nx; ++i) {
        const int q = qe.index(i, j, k);
        double w = ops.wq[i];
        if (dim > 1) w *= ops.wq[j];
        if (dim > 2) w *= ops.wq[k];
        if (j_vol[q] <= 0.0) throw InvalidMeshError("weight-adjusted inverse: nonpositive J");
        nodal[q] /= (w * j_vol[q]);
      }
  apply_tensor_product(*down[0], *down[1], *down[2], nodal, qe, out, rest);
}

void reference_modified_mass_solve(const ReferenceOperators& ops, int dim, double j0,
                                   std::span<const double> rhs, std::span<double> out,
                                   std::span<double> work) {
  static const Operator1D eye1 = Operator1D::identity(1);
  const int np = ops.np();
  Extents me{np, dim > 1 ? np : 1, dim > 2 ? np : 1};
  std::array<const Operator1D*, 3> inv{&ops.mmass1d_inv, dim > 1 ? &ops.mmass1d_inv : &eye1,
                                       dim > 2 ? &ops.mmass1d_inv : &eye1};
  apply_tensor_product(*inv[0], *inv[1], *inv[2], rhs, me, out, work);
  const double s = 1.0 / j0;
  for (int i = 0; i < me.size(); ++i) out[i] *= s;
}

void reference_modified_mass_apply(const ReferenceOperators& ops, int dim,
                                   std::span<const double> in, std::span<double> out,
                                   std::span<double> work) {
  static const Operator1D eye1 = Operator1D::identity(1);
  const int np = ops.np();
  Extents me{np, dim > 1 ? np : 1, dim > 2 ? np : 1};
  std::array<const Operator1D*, 3> mm{&ops.mmass1d, dim > 1 ? &ops.mmass1d : &eye1,
                                      dim > 2 ? &ops.mmass1d : &eye1};
  apply_tensor_product(*mm[0], *mm[1], *mm[2], in, me, out, work);
}

}  // namespace nsfr
