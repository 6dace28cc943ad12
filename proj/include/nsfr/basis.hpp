#pragma once

#include <span>
#include <vector>

#include "nsfr/quadrature.hpp"
#include "nsfr/tensor.hpp"

namespace nsfr {

/// Lagrange basis on a fixed node set, evaluated through barycentric weights.
/// The negative-sum diagonal of the differentiation matrix makes D*1 = 0 hold
/// bitwise, and the barycentric form keeps the partition of unity exact.
struct LagrangeBasis {
  std::vector<double> nodes;
  std::vector<double> bary;

  LagrangeBasis() = default;
  explicit LagrangeBasis(std::vector<double> pts);

  int size() const { return static_cast<int>(nodes.size()); }

  /// Row of cardinal values l_j(x).
  void eval_row(double x, std::span<double> out) const;

  /// chi(pts): matrix with entry (i,j) = l_j(pts[i]).
  Operator1D eval_matrix(std::span<const double> pts) const;

  /// Differentiation matrix at the basis nodes.
  Operator1D diff_matrix() const;
};

/// 1D operators tying a degree-p Lagrange solution basis (on `solution_rule`
/// nodes, LGL(p+1) throughout this project) to an evaluation quadrature.
struct Basis1D {
  int p = 0;
  QuadratureRule solution_rule;
  QuadratureRule eval_rule;
  LagrangeBasis lagrange;   // on solution nodes
  Operator1D interp;        // chi(xi_v), n_q x (p+1)
  Operator1D diff;          // grad chi(xi_v) = chi(xi_v) * D_nodes
  Operator1D node_diff;     // D at solution nodes
  Operator1D mass;          // chi^T W chi
  Operator1D stiffness;     // chi^T W grad chi
  bool collocated = false;  // eval nodes == solution nodes
};

/// Assemble interp/diff/mass/stiffness at the eval_rule nodes.
Basis1D lagrange_matrices(int p, const QuadratureRule& solution_rule,
                          const QuadratureRule& eval_rule);

/// Pi = M^{-1} chi^T W; reproduces polynomials of degree <= p.
Operator1D l2_projection(const Basis1D& basis);

// Small dense helpers used by operator construction (row-major, Gaussian
// elimination with partial pivoting; sizes here are O(p+1)).
Operator1D mat_mul(const Operator1D& a, const Operator1D& b);
Operator1D mat_inverse(const Operator1D& a);
Operator1D mat_solve(const Operator1D& a, const Operator1D& rhs);

}  // namespace nsfr
