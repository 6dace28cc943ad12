#pragma once

#include <vector>

#include "nsfr/defs.hpp"

namespace nsfr {

enum class QuadKind { GaussLegendre, GaussLobattoLegendre };

/// 1D quadrature rule on [-1,1]. GL(n) is exact to degree 2n-1, LGL(n) to 2n-3.
struct QuadratureRule {
  QuadKind kind;
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Highest polynomial degree integrated exactly.
  int strength() const {
    return kind == QuadKind::GaussLegendre ? 2 * n - 1 : 2 * n - 3;
  }
};

/// Nodes by Newton iteration on the Legendre recurrences, tolerance 1e-15.
QuadratureRule quadrature_rule(QuadKind kind, int n);

/// Legendre polynomial P_n and derivative at x.
void legendre_eval(int n, double x, double& p, double& dp);

}  // namespace nsfr
