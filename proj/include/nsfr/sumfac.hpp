#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "nsfr/tensor.hpp"

namespace nsfr {

/// Apply a 1D operator along one direction of a tensor field.
/// out extents equal in extents with extent(dir) replaced by op.rows.
void apply_operator_dir(const Operator1D& op, int dir, std::span<const double> in,
                        Extents in_ext, std::span<double> out);

/// y = (A_zeta (x) A_eta (x) A_xi) x as three directional passes.
TensorField apply_tensor_product(const Operator1D& a_xi, const Operator1D& a_eta,
                                 const Operator1D& a_zeta, const TensorField& x);

/// Workspace variant for hot paths; `work` must hold both intermediates
/// (tensor_work_size). `out` may not alias `x` or `work`.
void apply_tensor_product(const Operator1D& a_xi, const Operator1D& a_eta,
                          const Operator1D& a_zeta, std::span<const double> x,
                          Extents x_ext, std::span<double> out, std::span<double> work);

inline size_t tensor_work_size(const Operator1D& a_xi, const Operator1D& a_eta,
                               Extents x_ext) {
  const size_t s1 = static_cast<size_t>(a_xi.rows) * x_ext.ny * x_ext.nz;
  const size_t s2 = static_cast<size_t>(a_xi.rows) * a_eta.rows * x_ext.nz;
  return s1 + s2;
}

/// Per-residual accounting of lazy two-point evaluations; the scaling claims
/// are asserted against these.
struct ProviderCallCounter {
  std::int64_t volume_calls = 0;
  std::int64_t surface_calls = 0;
};

/// Volume-volume block of [(Qtilde - Qtilde^T) o F] 1 in sum-factorized form.
///
/// qskew[r] is the 1D skew factor W D - D^T W on the quadrature nodes of
/// direction r; w1d[r] the 1D weights. The provider is called once per
/// unordered node pair sharing a 1D line and must be symmetric in (i,j):
///   provider(i, j, dir, out[nstates]).
/// Accumulates into out[s*nnodes + node]. Call count: sum_dir n^{d-1} *
/// n(n-1)/2, bounded by d n^{d+1}.
template <class Provider>
void hadamard_sumfac_volume(const std::array<const Operator1D*, 3>& qskew,
                            const std::array<std::span<const double>, 3>& w1d,
                            Extents ext, int nstates, Provider&& provider,
                            std::span<double> out, ProviderCallCounter* counter) {
  const int nn = ext.size();
  constexpr int kMaxStates = 8;
  double f[kMaxStates];
  for (int dir = 0; dir < 3; ++dir) {
    const int n = ext.extent(dir);
    if (n < 2) continue;
    const Operator1D& q = *qskew[dir];
    if (q.rows != n || q.cols != n) throw DimensionError("hadamard volume: skew factor size");
    const int t1n = (dir == 0) ? ext.ny : ext.nx;
    const int t2n = (dir == 2) ? ext.ny : ext.nz;
    std::span<const double> wt1 = (dir == 0) ? w1d[1] : w1d[0];
    std::span<const double> wt2 = (dir == 2) ? w1d[1] : w1d[2];
    const int stride = (dir == 0) ? 1 : (dir == 1 ? ext.nx : ext.nx * ext.ny);
    for (int t2 = 0; t2 < t2n; ++t2) {
      for (int t1 = 0; t1 < t1n; ++t1) {
        int base;
        if (dir == 0)
          base = ext.index(0, t1, t2);
        else if (dir == 1)
          base = ext.index(t1, 0, t2);
        else
          base = ext.index(t1, t2, 0);
        const double wt = wt1[t1] * wt2[t2];
        for (int a = 0; a < n; ++a) {
          const int ia = base + a * stride;
          for (int b = a + 1; b < n; ++b) {
            const double qab = q(a, b) - q(b, a);
            if (qab == 0.0) continue;
            const int ib = base + b * stride;
            provider(ia, ib, dir, f);
            if (counter) ++counter->volume_calls;
            const double c = wt * qab;
            for (int s = 0; s < nstates; ++s) {
              out[s * nn + ia] += c * f[s];
              out[s * nn + ib] -= c * f[s];
            }
          }
        }
      }
    }
  }
}

/// Layout of the face blocks accompanying the hybrid operator: face id
/// f = 2*dir + side with side 0 at xi_dir = -1 and 1 at xi_dir = +1. Face
/// nodes run over the transverse extents, lower direction fastest.
inline int face_node_count(Extents ext, int dir) {
  return (dir == 0) ? ext.ny * ext.nz : (dir == 1 ? ext.nx * ext.nz : ext.nx * ext.ny);
}

/// Surface-volume blocks of the hybrid Hadamard product.
///
/// boundary_interp[r]: 2 x n matrix of the collocated flux basis at -1 (row 0)
/// and +1 (row 1) for direction r. Provider:
///   provider(vol_flat, face_id, face_node, dir, out[nstates]).
/// vol_out accumulates the volume rows, face_out(face_id, s, face_node) the
/// face rows. Call count: 2 d n^d.
template <class Provider, class FaceSink>
void hadamard_sumfac_surface(const std::array<const Operator1D*, 3>& boundary_interp,
                             const std::array<std::span<const double>, 3>& w1d,
                             Extents ext, int nstates, Provider&& provider,
                             std::span<double> vol_out, FaceSink&& face_out,
                             ProviderCallCounter* counter) {
  const int nn = ext.size();
  constexpr int kMaxStates = 8;
  double f[kMaxStates];
  for (int dir = 0; dir < 3; ++dir) {
    const int n = ext.extent(dir);
    if (n < 2) continue;
    const Operator1D& bi = *boundary_interp[dir];
    if (bi.rows != 2 || bi.cols != n) throw DimensionError("hadamard surface: boundary factor size");
    const int t1n = (dir == 0) ? ext.ny : ext.nx;
    const int t2n = (dir == 2) ? ext.ny : ext.nz;
    std::span<const double> wt1 = (dir == 0) ? w1d[1] : w1d[0];
    std::span<const double> wt2 = (dir == 2) ? w1d[1] : w1d[2];
    const int stride = (dir == 0) ? 1 : (dir == 1 ? ext.nx : ext.nx * ext.ny);
    for (int side = 0; side < 2; ++side) {
      const int face_id = 2 * dir + side;
      const double sign = side ? 1.0 : -1.0;
      for (int t2 = 0; t2 < t2n; ++t2) {
        for (int t1 = 0; t1 < t1n; ++t1) {
          int base;
          if (dir == 0)
            base = ext.index(0, t1, t2);
          else if (dir == 1)
            base = ext.index(t1, 0, t2);
          else
            base = ext.index(t1, t2, 0);
          const int fnode = t1 + t1n * t2;
          const double wt = wt1[t1] * wt2[t2];
          for (int a = 0; a < n; ++a) {
            const int ia = base + a * stride;
            provider(ia, face_id, fnode, dir, f);
            if (counter) ++counter->surface_calls;
            const double c = sign * bi(side, a) * wt;
            for (int s = 0; s < nstates; ++s) {
              vol_out[s * nn + ia] += c * f[s];
              face_out(face_id, s, fnode) -= c * f[s];
            }
          }
        }
      }
    }
  }
}

/// Literal [(Q - Q^T) o F] 1 with the d-direction dot product, on dense
/// per-direction matrices. Oracle for the sum-factorized kernels.
std::vector<double> dense_hadamard_oracle(std::span<const Operator1D> q_dirs,
                                          std::span<const Operator1D> f_dirs);

}  // namespace nsfr
