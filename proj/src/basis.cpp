#include "nsfr/basis.hpp"

#include <cmath>
#include <limits>

namespace nsfr {

LagrangeBasis::LagrangeBasis(std::vector<double> pts) : nodes(std::move(pts)) {
  const int n = size();
  bary.assign(n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) bary[i] /= (nodes[i] - nodes[j]);
}

void LagrangeBasis::eval_row(double x, std::span<double> out) const {
  const int n = size();
  for (int j = 0; j < n; ++j) {
    if (x == nodes[j]) {
      for (int k = 0; k < n; ++k) out[k] = (k == j) ? 1.0 : 0.0;
      return;
    }
  }
  double denom = 0.0;
  for (int j = 0; j < n; ++j) {
    out[j] = bary[j] / (x - nodes[j]);
    denom += out[j];
  }
  for (int j = 0; j < n; ++j) out[j] /= denom;
}

Operator1D LagrangeBasis::eval_matrix(std::span<const double> pts) const {
  Operator1D m(static_cast<int>(pts.size()), size());
  for (int i = 0; i < m.rows; ++i)
    eval_row(pts[i], std::span<double>(&m(i, 0), static_cast<size_t>(m.cols)));
  return m;
}

Operator1D LagrangeBasis::diff_matrix() const {
  const int n = size();
  Operator1D d(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = (bary[j] / bary[i]) / (nodes[i] - nodes[j]);
      rowsum += d(i, j);
    }
    d(i, i) = -rowsum;
  }
  return d;
}

Operator1D mat_mul(const Operator1D& a, const Operator1D& b) {
  if (a.cols != b.rows) throw DimensionError("mat_mul: shape mismatch");
  Operator1D c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Operator1D mat_solve(const Operator1D& a, const Operator1D& rhs) {
  if (a.rows != a.cols || a.rows != rhs.rows)
    throw DimensionError("mat_solve: shape mismatch");
  const int n = a.rows;
  Operator1D lu = a;
  Operator1D x = rhs;
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int pr = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > best) {
        best = std::abs(lu(r, col));
        pr = r;
      }
    if (best < std::numeric_limits<double>::min() * 4)
      throw DimensionError("mat_solve: singular matrix");
    if (pr != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pr, j));
      for (int j = 0; j < x.cols; ++j) std::swap(x(col, j), x(pr, j));
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / lu(col, col);
      lu(r, col) = f;
      for (int j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
      for (int j = 0; j < x.cols; ++j) x(r, j) -= f * x(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < x.cols; ++j) {
      x(col, j) /= lu(col, col);
      for (int r = 0; r < col; ++r) x(r, j) -= lu(r, col) * x(col, j);
    }
  }
  return x;
}

Operator1D mat_inverse(const Operator1D& a) {
  return mat_solve(a, Operator1D::identity(a.rows));
}

Basis1D lagrange_matrices(int p, const QuadratureRule& solution_rule,
                          const QuadratureRule& eval_rule) {
  if (solution_rule.n != p + 1)
    throw DimensionError("lagrange_matrices: solution rule must have p+1 nodes");
  Basis1D b;
  b.p = p;
  b.solution_rule = solution_rule;
  b.eval_rule = eval_rule;
  b.lagrange = LagrangeBasis(solution_rule.nodes);
  b.node_diff = b.lagrange.diff_matrix();
  b.collocated = (solution_rule.kind == eval_rule.kind && solution_rule.n == eval_rule.n);
  b.interp = b.collocated ? Operator1D::identity(p + 1)
                          : b.lagrange.eval_matrix(eval_rule.nodes);
  // derivative of a degree-p interpolant is again degree <= p, so the row of
  // derivatives at x is chi(x) * D exactly
  b.diff = mat_mul(b.interp, b.node_diff);
  const int nq = eval_rule.n;
  const int np = p + 1;
  b.mass = Operator1D(np, np);
  b.stiffness = Operator1D(np, np);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      double m = 0.0, s = 0.0;
      for (int q = 0; q < nq; ++q) {
        m += b.interp(q, i) * eval_rule.weights[q] * b.interp(q, j);
        s += b.interp(q, i) * eval_rule.weights[q] * b.diff(q, j);
      }
      b.mass(i, j) = m;
      b.stiffness(i, j) = s;
    }
  return b;
}

Operator1D l2_projection(const Basis1D& basis) {
  if (basis.collocated) return Operator1D::identity(basis.p + 1);
  // M^{-1} chi^T W
  Operator1D chi_t_w = basis.interp.transposed();
  for (int i = 0; i < chi_t_w.rows; ++i)
    for (int q = 0; q < chi_t_w.cols; ++q)
      chi_t_w(i, q) *= basis.eval_rule.weights[q];
  return mat_solve(basis.mass, chi_t_w);
}

}  // namespace nsfr
