#include "nsfr/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace nsfr {

void legendre_eval(int n, double x, double& p, double& dp) {
  double pm1 = 1.0, pm2 = 0.0;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  double pk = x;
  for (int k = 2; k <= n; ++k) {
    pm2 = pm1;
    pm1 = pk;
    pk = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0) * pm2) / k;
  }
  p = pk;
  // (1-x^2) P_n' = n (P_{n-1} - x P_n)
  if (std::abs(x) < 1.0)
    dp = n * (pm1 - x * pk) / (1.0 - x * x);
  else
    dp = n * (n + 1.0) / 2.0 * (x > 0 ? 1.0 : ((n % 2 == 0) ? -1.0 : 1.0));
}

namespace {

constexpr int kMaxNewton = 100;
constexpr double kTol = 1e-15;

QuadratureRule gauss_legendre(int n) {
  QuadratureRule r;
  r.kind = QuadKind::GaussLegendre;
  r.n = n;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess
    double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0, dp = 0;
    for (int it = 0; it < kMaxNewton; ++it) {
      legendre_eval(n, x, p, dp);
      const double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < kTol) break;
    }
    legendre_eval(n, x, p, dp);
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[n - 1 - i] = -x;
    r.weights[n - 1 - i] = r.weights[i];
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

QuadratureRule gauss_lobatto(int n) {
  QuadratureRule r;
  r.kind = QuadKind::GaussLobattoLegendre;
  r.n = n;
  r.nodes.resize(n);
  r.weights.resize(n);
  r.nodes.front() = -1.0;
  r.nodes.back() = 1.0;
  // interior nodes: roots of P'_{n-1}, Newton on q = P'_{n-1},
  // q' from the Legendre ODE: (1-x^2) P'' = 2x P' - m(m+1) P, m = n-1
  const int m = n - 1;
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    double x = -std::cos(M_PI * i / m);
    for (int it = 0; it < kMaxNewton; ++it) {
      double p = 0, dp = 0;
      legendre_eval(m, x, p, dp);
      const double d2p = (2.0 * x * dp - m * (m + 1.0) * p) / (1.0 - x * x);
      const double dx = -dp / d2p;
      x += dx;
      if (std::abs(dx) < kTol) break;
    }
    r.nodes[i] = x;
    r.nodes[n - 1 - i] = -x;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  std::sort(r.nodes.begin(), r.nodes.end());
  for (int i = 0; i < n; ++i) {
    double p = 0, dp = 0;
    legendre_eval(m, r.nodes[i], p, dp);
    r.weights[i] = 2.0 / (m * (m + 1.0) * p * p);
  }
  return r;
}

}  // namespace

QuadratureRule quadrature_rule(QuadKind kind, int n) {
  if (kind == QuadKind::GaussLegendre) {
    if (n < 1) throw DimensionError("Gauss-Legendre rule needs n >= 1");
    return gauss_legendre(n);
  }
  if (n < 2) throw DimensionError("Gauss-Lobatto-Legendre rule needs n >= 2");
  return gauss_lobatto(n);
}

}  // namespace nsfr
