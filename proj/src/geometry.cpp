#include "nsfr/geometry.hpp"

#include <cmath>
#include <cstring>

namespace nsfr {

std::array<double, 3> CurvilinearMapping::eval(int e, const std::array<double, 3>& xi) const {
  const int g = grid_basis.size();
  std::vector<double> lx(g), ly(g), lz(g);
  grid_basis.eval_row(xi[0], lx);
  grid_basis.eval_row(xi[1], ly);
  grid_basis.eval_row(xi[2], lz);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int k = 0; k < g; ++k)
    for (int j = 0; j < g; ++j) {
      const double ljk = ly[j] * lz[k];
      for (int i = 0; i < g; ++i) {
        const double w = lx[i] * ljk;
        const double* cp = point(e, grid_ext.index(i, j, k));
        x[0] += w * cp[0];
        x[1] += w * cp[1];
        x[2] += w * cp[2];
      }
    }
  return x;
}

CurvilinearMapping mapping_from_function(
    const StructuredMesh& mesh, int grid_degree,
    const std::function<std::array<double, 3>(const std::array<double, 3>&)>& map) {
  CurvilinearMapping cm;
  cm.mesh = mesh;
  cm.grid_degree = grid_degree;
  const QuadratureRule gnodes = quadrature_rule(QuadKind::GaussLobattoLegendre, grid_degree + 1);
  cm.grid_basis = LagrangeBasis(gnodes.nodes);
  const int g = grid_degree + 1;
  cm.grid_ext = Extents{g, g, g};
  const int ne = mesh.n_elements();
  cm.control_points.resize(static_cast<size_t>(ne) * cm.grid_ext.size() * 3);
  const double h = mesh.h();
  for (int e = 0; e < ne; ++e) {
    const auto c = mesh.coords(e);
    for (int k = 0; k < g; ++k)
      for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) {
          const std::array<double, 3> a{
              mesh.x_left + (c[0] + 0.5 * (gnodes.nodes[i] + 1.0)) * h,
              mesh.x_left + (c[1] + 0.5 * (gnodes.nodes[j] + 1.0)) * h,
              mesh.x_left + (c[2] + 0.5 * (gnodes.nodes[k] + 1.0)) * h};
          const auto x = map(a);
          double* cp = &cm.control_points[(static_cast<size_t>(e) * cm.grid_ext.size() +
                                           cm.grid_ext.index(i, j, k)) * 3];
          cp[0] = x[0];
          cp[1] = x[1];
          cp[2] = x[2];
        }
  }
  return cm;
}

CurvilinearMapping warp_grid_3d(int m_per_dir, double beta, double x_left, double x_right,
                                int grid_degree, double length_scale) {
  if (beta < 0.0) throw InvalidMeshError("warp_grid_3d: beta must be nonnegative");
  StructuredMesh mesh{m_per_dir, x_left, x_right};
  const double l = (length_scale > 0.0) ? length_scale : (x_right - x_left) / (2.0 * M_PI);
  auto map = [beta, l](const std::array<double, 3>& a) -> std::array<double, 3> {
    return {a[0] + beta * std::sin(a[0] / l) * std::sin(a[1] / l) * std::sin(2.0 * a[2] / l),
            a[1] + beta * std::sin(4.0 * a[0] / l) * std::sin(a[1] / l) * std::sin(3.0 * a[2] / l),
            a[2] + beta * std::sin(2.0 * a[0] / l) * std::sin(5.0 * a[1] / l) * std::sin(a[2] / l)};
  };
  return mapping_from_function(mesh, grid_degree, map);
}

namespace {

// differentiate nodal values along one direction of a tensor grid
void diff_dir(const Operator1D& d, int dir, const std::vector<double>& in, Extents e,
              std::vector<double>& out) {
  out.resize(in.size());
  apply_operator_dir(d, dir, in, e, out);
}

}  // namespace

MetricData build_metrics_conservative_curl(const CurvilinearMapping& mapping,
                                           const ReferenceOperators& ops, MetricMode mode) {
  MetricData md;
  const int nq = ops.nq();
  const int np = ops.np();
  md.vol_ext = Extents{nq, nq, nq};
  md.sol_ext = Extents{np, np, np};
  const int nv = md.vol_ext.size();
  const int g = mapping.grid_basis.size();
  const Extents ge{g, g, g};
  const int ne = mapping.mesh.n_elements();
  md.elem.resize(ne);

  // interpolation from grid nodes to volume quadrature / solution nodes
  const Operator1D ig = mapping.grid_basis.eval_matrix(ops.basis.eval_rule.nodes);
  const Operator1D is = mapping.grid_basis.eval_matrix(ops.basis.solution_rule.nodes);
  const Operator1D dg = mapping.grid_basis.diff_matrix();

  std::vector<double> work(3 * static_cast<size_t>(std::max(g, nq)) *
                           std::max(g, nq) * std::max(g, nq) * 2);

  for (int e = 0; e < ne; ++e) {
    ElementMetrics& em = md.elem[e];
    // gather control point components
    std::array<std::vector<double>, 3> xg;
    for (int n = 0; n < 3; ++n) xg[n].resize(ge.size());
    for (int node = 0; node < ge.size(); ++node) {
      const double* cp = mapping.point(e, node);
      for (int n = 0; n < 3; ++n) xg[n][node] = cp[n];
    }

    // physical coordinates at volume quadrature and solution nodes
    em.x_vol.resize(static_cast<size_t>(nv) * 3);
    em.x_sol.resize(static_cast<size_t>(md.sol_ext.size()) * 3);
    for (int n = 0; n < 3; ++n) {
      TensorField xf(ge, xg[n]);
      TensorField xq = apply_tensor_product(ig, ig, ig, xf);
      TensorField xs = apply_tensor_product(is, is, is, xf);
      for (int q = 0; q < nv; ++q) em.x_vol[3 * static_cast<size_t>(q) + n] = xq.values[q];
      for (int q = 0; q < md.sol_ext.size(); ++q)
        em.x_sol[3 * static_cast<size_t>(q) + n] = xs.values[q];
    }

    // mapping derivatives dx_m/dxi_k at grid nodes, then at quadrature nodes
    std::array<std::array<std::vector<double>, 3>, 3> dxg;  // [m][k]
    std::array<std::array<std::vector<double>, 3>, 3> dxq;
    for (int m = 0; m < 3; ++m)
      for (int k = 0; k < 3; ++k) {
        diff_dir(dg, k, xg[m], ge, dxg[m][k]);
        TensorField f(ge, dxg[m][k]);
        dxq[m][k] = apply_tensor_product(ig, ig, ig, f).values;
      }

    // determinant of the metric Jacobian at volume nodes
    em.jac_vol.resize(nv);
    for (int q = 0; q < nv; ++q) {
      const double a11 = dxq[0][0][q], a12 = dxq[0][1][q], a13 = dxq[0][2][q];
      const double a21 = dxq[1][0][q], a22 = dxq[1][1][q], a23 = dxq[1][2][q];
      const double a31 = dxq[2][0][q], a32 = dxq[2][1][q], a33 = dxq[2][2][q];
      em.jac_vol[q] = a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
                      a13 * (a21 * a32 - a22 * a31);
      if (!(em.jac_vol[q] > 0.0))
        throw InvalidMeshError("build_metrics: nonpositive metric Jacobian (degenerate warp)");
    }
    em.const_jacobian = true;
    em.j0 = em.jac_vol[0];
    for (int q = 1; q < nv; ++q)
      if (std::abs(em.jac_vol[q] - em.j0) > 1e-13 * std::abs(em.j0)) {
        em.const_jacobian = false;
        break;
      }

    em.cof_vol.assign(static_cast<size_t>(nv) * 9, 0.0);
    if (mode == MetricMode::NaiveAnalytic) {
      // pointwise cofactor: J a^1 = a_2 x a_3 (cyclic); exact per node but not
      // discretely divergence-free
      for (int q = 0; q < nv; ++q) {
        double* c = &em.cof_vol[9 * static_cast<size_t>(q)];
        for (int i = 0; i < 3; ++i) {
          const int j = (i + 1) % 3, k = (i + 2) % 3;
          // (J a^i)_n = eps_{nab} a_j[a] a_k[b] -> cross product of columns j,k
          const std::array<double, 3> aj{dxq[0][j][q], dxq[1][j][q], dxq[2][j][q]};
          const std::array<double, 3> ak{dxq[0][k][q], dxq[1][k][q], dxq[2][k][q]};
          c[3 * 0 + i] = aj[1] * ak[2] - aj[2] * ak[1];
          c[3 * 1 + i] = aj[2] * ak[0] - aj[0] * ak[2];
          c[3 * 2 + i] = aj[0] * ak[1] - aj[1] * ak[0];
        }
      }
    } else {
      // antisymmetrized products A^{(n)}_k = 1/2 (x_l d_k x_m - x_m d_k x_l)
      // built on the mapping shape functions, interpolated to the quadrature,
      // then curled with the flux-basis differentiation matrices
      std::array<std::array<std::vector<double>, 3>, 3> aq;  // [n][k] at vol nodes
      std::vector<double> ag(ge.size());
      for (int n = 0; n < 3; ++n) {
        const int m = (n + 1) % 3, l = (n + 2) % 3;
        for (int k = 0; k < 3; ++k) {
          for (int node = 0; node < ge.size(); ++node)
            ag[node] = 0.5 * (xg[l][node] * dxg[m][k][node] - xg[m][node] * dxg[l][k][node]);
          TensorField f(ge, ag);
          aq[n][k] = apply_tensor_product(ig, ig, ig, f).values;
        }
      }
      std::vector<double> d1, d2;
      for (int n = 0; n < 3; ++n)
        for (int i = 0; i < 3; ++i) {
          const int j = (i + 1) % 3, k = (i + 2) % 3;
          // C_ni = d_k A_j - d_j A_k (sign fixed by the Cartesian limit)
          diff_dir(ops.quad_diff, k, aq[n][j], md.vol_ext, d1);
          diff_dir(ops.quad_diff, j, aq[n][k], md.vol_ext, d2);
          for (int q = 0; q < nv; ++q)
            em.cof_vol[9 * static_cast<size_t>(q) + 3 * n + i] = d1[q] - d2[q];
        }
    }

    // face data: cofactor interpolated from the volume values with the flux
    // basis along the normal direction; normals and J^Gamma follow from it
    for (int dir = 0; dir < 3; ++dir) {
      const int fn = face_node_count(md.vol_ext, dir);
      for (int side = 0; side < 2; ++side) {
        const int f = 2 * dir + side;
        em.cof_surf[f].assign(static_cast<size_t>(fn) * 9, 0.0);
        em.jac_surf[f].assign(fn, 0.0);
        em.normal[f].assign(static_cast<size_t>(fn) * 3, 0.0);
        em.x_surf[f].assign(static_cast<size_t>(fn) * 3, 0.0);
        const int t1n = (dir == 0) ? nq : nq;
        const int t2n = nq;
        (void)t1n;
        (void)t2n;
        for (int t2 = 0; t2 < nq; ++t2)
          for (int t1 = 0; t1 < nq; ++t1) {
            const int fnode = t1 + nq * t2;
            double cface[9] = {0};
            for (int a = 0; a < nq; ++a) {
              const int q = (dir == 0) ? md.vol_ext.index(a, t1, t2)
                                       : (dir == 1 ? md.vol_ext.index(t1, a, t2)
                                                   : md.vol_ext.index(t1, t2, a));
              const double w = ops.bound_flux(side, a);
              for (int c = 0; c < 9; ++c) cface[c] += w * em.cof_vol[9 * static_cast<size_t>(q) + c];
            }
            std::memcpy(&em.cof_surf[f][9 * static_cast<size_t>(fnode)], cface, sizeof cface);
            const double sign = side ? 1.0 : -1.0;
            const double v0 = sign * cface[3 * 0 + dir];
            const double v1 = sign * cface[3 * 1 + dir];
            const double v2 = sign * cface[3 * 2 + dir];
            const double jg = std::sqrt(v0 * v0 + v1 * v1 + v2 * v2);
            if (!(jg > 0.0)) throw InvalidMeshError("build_metrics: degenerate face normal");
            em.jac_surf[f][fnode] = jg;
            em.normal[f][3 * static_cast<size_t>(fnode) + 0] = v0 / jg;
            em.normal[f][3 * static_cast<size_t>(fnode) + 1] = v1 / jg;
            em.normal[f][3 * static_cast<size_t>(fnode) + 2] = v2 / jg;
          }
        // physical coordinates on the face (mapping evaluated on the face)
        const Operator1D bg = mapping.grid_basis.eval_matrix(
            std::array<double, 1>{side ? 1.0 : -1.0});
        for (int n = 0; n < 3; ++n) {
          TensorField xf(ge, xg[n]);
          const Operator1D& a0 = (dir == 0) ? bg : ig;
          const Operator1D& a1 = (dir == 1) ? bg : ig;
          const Operator1D& a2 = (dir == 2) ? bg : ig;
          TensorField xq = apply_tensor_product(a0, a1, a2, xf);
          // collapse the singleton direction; remaining dims keep xi-fastest order
          for (int t2 = 0; t2 < nq; ++t2)
            for (int t1 = 0; t1 < nq; ++t1) {
              const int fnode = t1 + nq * t2;
              Extents fe = xq.ext;
              int idx;
              if (dir == 0)
                idx = fe.index(0, t1, t2);
              else if (dir == 1)
                idx = fe.index(t1, 0, t2);
              else
                idx = fe.index(t1, t2, 0);
              em.x_surf[f][3 * static_cast<size_t>(fnode) + n] = xq.values[idx];
            }
        }
      }
    }
  }
  return md;
}

double gcl_residual(const MetricData& metrics, const ReferenceOperators& ops) {
  double worst = 0.0;
  const Extents e = metrics.vol_ext;
  std::vector<double> comp(e.size()), d(e.size());
  for (const ElementMetrics& em : metrics.elem) {
    for (int n = 0; n < 3; ++n) {
      std::vector<double> div(e.size(), 0.0);
      for (int i = 0; i < 3; ++i) {
        for (int q = 0; q < e.size(); ++q) comp[q] = em.cof_vol[9 * static_cast<size_t>(q) + 3 * n + i];
        apply_operator_dir(ops.quad_diff, i, comp, e, d);
        for (int q = 0; q < e.size(); ++q) div[q] += d[q];
      }
      for (double v : div) worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

FaceNormals physical_normals(const MetricData& metrics, int elem, int face) {
  const ElementMetrics& em = metrics.elem[elem];
  return FaceNormals{std::span<const double>(em.normal[face]),
                     std::span<const double>(em.jac_surf[face])};
}

}  // namespace nsfr
