#include "nsfr/sumfac.hpp"

#include <cstring>

namespace nsfr {

void apply_operator_dir(const Operator1D& op, int dir, std::span<const double> in,
                        Extents in_ext, std::span<double> out) {
  if (op.cols != in_ext.extent(dir))
    throw DimensionError("apply_operator_dir: operator columns do not match field extent");
  const int nx = in_ext.nx, ny = in_ext.ny, nz = in_ext.nz;
  const int m = op.rows, n = op.cols;
  if (dir == 0) {
    const int nlines = ny * nz;
    for (int l = 0; l < nlines; ++l) {
      const double* src = in.data() + static_cast<size_t>(l) * n;
      double* dst = out.data() + static_cast<size_t>(l) * m;
      for (int a = 0; a < m; ++a) {
        double acc = 0.0;
        const double* row = &op.a[static_cast<size_t>(a) * n];
        for (int i = 0; i < n; ++i) acc += row[i] * src[i];
        dst[a] = acc;
      }
    }
  } else if (dir == 1) {
    for (int k = 0; k < nz; ++k) {
      const double* src = in.data() + static_cast<size_t>(k) * nx * n;
      double* dst = out.data() + static_cast<size_t>(k) * nx * m;
      for (int b = 0; b < m; ++b) {
        double* drow = dst + static_cast<size_t>(b) * nx;
        std::memset(drow, 0, sizeof(double) * nx);
        const double* row = &op.a[static_cast<size_t>(b) * n];
        for (int j = 0; j < n; ++j) {
          const double c = row[j];
          if (c == 0.0) continue;
          const double* srow = src + static_cast<size_t>(j) * nx;
          for (int i = 0; i < nx; ++i) drow[i] += c * srow[i];
        }
      }
    }
  } else {
    const int plane = nx * ny;
    for (int c2 = 0; c2 < m; ++c2) {
      double* dst = out.data() + static_cast<size_t>(c2) * plane;
      std::memset(dst, 0, sizeof(double) * plane);
      const double* row = &op.a[static_cast<size_t>(c2) * n];
      for (int k = 0; k < n; ++k) {
        const double c = row[k];
        if (c == 0.0) continue;
        const double* src = in.data() + static_cast<size_t>(k) * plane;
        for (int r = 0; r < plane; ++r) dst[r] += c * src[r];
      }
    }
  }
}

void apply_tensor_product(const Operator1D& a_xi, const Operator1D& a_eta,
                          const Operator1D& a_zeta, std::span<const double> x,
                          Extents x_ext, std::span<double> out, std::span<double> work) {
  if (a_xi.cols != x_ext.nx || a_eta.cols != x_ext.ny || a_zeta.cols != x_ext.nz)
    throw DimensionError("apply_tensor_product: operator/extent mismatch");
  const Extents e1{a_xi.rows, x_ext.ny, x_ext.nz};
  const Extents e2{a_xi.rows, a_eta.rows, x_ext.nz};
  std::span<double> w1 = work.subspan(0, e1.size());
  std::span<double> w2 = work.subspan(e1.size(), e2.size());
  apply_operator_dir(a_xi, 0, x, x_ext, w1);
  apply_operator_dir(a_eta, 1, w1, e1, w2);
  apply_operator_dir(a_zeta, 2, w2, e2, out);
}

TensorField apply_tensor_product(const Operator1D& a_xi, const Operator1D& a_eta,
                                 const Operator1D& a_zeta, const TensorField& x) {
  Extents oe{a_xi.rows, a_eta.rows, a_zeta.rows};
  TensorField y(oe);
  std::vector<double> work(tensor_work_size(a_xi, a_eta, x.ext));
  apply_tensor_product(a_xi, a_eta, a_zeta, x.values, x.ext, y.values, work);
  return y;
}

std::vector<double> dense_hadamard_oracle(std::span<const Operator1D> q_dirs,
                                          std::span<const Operator1D> f_dirs) {
  if (q_dirs.size() != f_dirs.size())
    throw DimensionError("dense_hadamard_oracle: direction counts differ");
  if (q_dirs.empty()) return {};
  const int n = q_dirs[0].rows;
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (size_t r = 0; r < q_dirs.size(); ++r) {
    const Operator1D& q = q_dirs[r];
    const Operator1D& f = f_dirs[r];
    if (q.rows != n || q.cols != n || f.rows != n || f.cols != n)
      throw DimensionError("dense_hadamard_oracle: shape mismatch");
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += (q(i, j) - q(j, i)) * f(i, j);
      out[i] += acc;
    }
  }
  return out;
}

}  // namespace nsfr
