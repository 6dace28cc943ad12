#include "nsfr/euler.hpp"

#include <cmath>

namespace nsfr {

double pressure(const EulerGas& gas, const State& u) {
  const double ke = 0.5 * (u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) / u[0];
  return (gas.gamma - 1.0) * (u[4] - ke);
}

double sound_speed(const EulerGas& gas, const State& u) {
  return std::sqrt(gas.gamma * pressure(gas, u) / u[0]);
}

bool admissible(const EulerGas& gas, const State& u) {
  if (!(u[0] > 0.0) || !std::isfinite(u[0])) return false;
  for (double c : u)
    if (!std::isfinite(c)) return false;
  return pressure(gas, u) > 0.0;
}

State prim_to_cons(const EulerGas& gas, double rho, const std::array<double, 3>& vel,
                   double p) {
  const double q2 = vel[0] * vel[0] + vel[1] * vel[1] + vel[2] * vel[2];
  return {rho, rho * vel[0], rho * vel[1], rho * vel[2],
          p / (gas.gamma - 1.0) + 0.5 * rho * q2};
}

Flux physical_flux(const EulerGas& gas, const State& u) {
  if (!admissible(gas, u)) throw InadmissibleStateError("physical_flux: inadmissible state");
  const double p = pressure(gas, u);
  Flux f;
  for (int k = 0; k < 3; ++k) {
    const double vk = u[1 + k] / u[0];
    f[k] = {u[0] * vk, u[1] * vk, u[2] * vk, u[3] * vk, (u[4] + p) * vk};
    f[k][1 + k] += p;
  }
  return f;
}

State physical_flux_dir(const EulerGas& gas, const State& u, int k) {
  return physical_flux(gas, u)[k];
}

State entropy_variables(const EulerGas& gas, const State& u) {
  if (!admissible(gas, u)) throw InadmissibleStateError("entropy_variables: inadmissible state");
  const double g = gas.gamma;
  const double p = pressure(gas, u);
  const double s = std::log(p) - g * std::log(u[0]);
  const double q2 = (u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) / (u[0] * u[0]);
  return {(g - s) / (g - 1.0) - 0.5 * u[0] * q2 / p, u[1] / p, u[2] / p, u[3] / p,
          -u[0] / p};
}

State entropy_to_conservative(const EulerGas& gas, const State& v) {
  const double g = gas.gamma;
  if (!(v[4] < 0.0))
    throw InadmissibleStateError("entropy_to_conservative: v5 >= 0 (no inverse mapping)");
  const double gm1 = g - 1.0;
  const double v1 = v[0] * gm1, v2 = v[1] * gm1, v3 = v[2] * gm1, v4 = v[3] * gm1,
               v5 = v[4] * gm1;
  const double s = g - v1 + (v2 * v2 + v3 * v3 + v4 * v4) / (2.0 * v5);
  const double rho_iota =
      std::pow(gm1 / std::pow(-v5, g), 1.0 / gm1) * std::exp(-s / gm1);
  State u{-rho_iota * v5, rho_iota * v2, rho_iota * v3, rho_iota * v4,
          rho_iota * (1.0 - (v2 * v2 + v3 * v3 + v4 * v4) / (2.0 * v5))};
  if (!admissible(gas, u))
    throw InadmissibleStateError("entropy_to_conservative: inadmissible result");
  return u;
}

double entropy_function(const EulerGas& gas, const State& u) {
  const double s = std::log(pressure(gas, u)) - gas.gamma * std::log(u[0]);
  return -u[0] * s / (gas.gamma - 1.0);
}

double entropy_potential(const EulerGas& gas, const State& u, int k) {
  (void)gas;
  return u[1 + k];
}

State kinetic_energy_variables(const State& u) {
  const double iu = 1.0 / u[0];
  const double vx = u[1] * iu, vy = u[2] * iu, vz = u[3] * iu;
  return {-0.5 * (vx * vx + vy * vy + vz * vz), vx, vy, vz, 0.0};
}

double log_mean(double a, double b) {
  if (a > b) std::swap(a, b);
  const double z = a / b;
  const double f = (z - 1.0) / (z + 1.0);
  const double f2 = f * f;
  if (f2 < 1e-8) {
    // |a-b| small relative to a+b: series for 2f/ln(z)
    return 0.5 * (a + b) / (1.0 + f2 * (1.0 / 3.0 + f2 * (1.0 / 5.0 + f2 / 7.0)));
  }
  return (a - b) / std::log(z);
}

namespace {

struct Primitive {
  double rho, p;
  std::array<double, 3> vel;
};

Primitive prim(const EulerGas& gas, const State& u) {
  Primitive pr;
  pr.rho = u[0];
  const double iu = 1.0 / u[0];
  pr.vel = {u[1] * iu, u[2] * iu, u[3] * iu};
  pr.p = pressure(gas, u);
  return pr;
}

Flux flux_chandrashekar(const EulerGas& gas, const Primitive& l, const Primitive& r) {
  const double g = gas.gamma;
  const double bl = 0.5 * l.rho / l.p, br = 0.5 * r.rho / r.p;
  const double rho_log = log_mean(l.rho, r.rho);
  const double beta_log = log_mean(bl, br);
  const double p_tilde = 0.5 * (l.rho + r.rho) / (bl + br);
  const std::array<double, 3> vbar{0.5 * (l.vel[0] + r.vel[0]), 0.5 * (l.vel[1] + r.vel[1]),
                                   0.5 * (l.vel[2] + r.vel[2])};
  const double v2bar = 0.5 * (l.vel[0] * l.vel[0] + r.vel[0] * r.vel[0] +
                              l.vel[1] * l.vel[1] + r.vel[1] * r.vel[1] +
                              l.vel[2] * l.vel[2] + r.vel[2] * r.vel[2]);
  Flux f;
  for (int k = 0; k < 3; ++k) {
    const double fm = rho_log * vbar[k];
    f[k][0] = fm;
    f[k][1] = fm * vbar[0];
    f[k][2] = fm * vbar[1];
    f[k][3] = fm * vbar[2];
    f[k][1 + k] += p_tilde;
    f[k][4] = (0.5 / ((g - 1.0) * beta_log) - 0.5 * v2bar) * fm + vbar[0] * f[k][1] +
              vbar[1] * f[k][2] + vbar[2] * f[k][3];
  }
  return f;
}

Flux flux_ranocha(const EulerGas& gas, const Primitive& l, const Primitive& r) {
  const double g = gas.gamma;
  const double rho_log = log_mean(l.rho, r.rho);
  const double rho_over_p_log = log_mean(l.rho / l.p, r.rho / r.p);
  const double pbar = 0.5 * (l.p + r.p);
  const std::array<double, 3> vbar{0.5 * (l.vel[0] + r.vel[0]), 0.5 * (l.vel[1] + r.vel[1]),
                                   0.5 * (l.vel[2] + r.vel[2])};
  const double vprod = 0.5 * (l.vel[0] * r.vel[0] + l.vel[1] * r.vel[1] + l.vel[2] * r.vel[2]);
  Flux f;
  for (int k = 0; k < 3; ++k) {
    const double fm = rho_log * vbar[k];
    f[k][0] = fm;
    f[k][1] = fm * vbar[0];
    f[k][2] = fm * vbar[1];
    f[k][3] = fm * vbar[2];
    f[k][1 + k] += pbar;
    f[k][4] = fm * (1.0 / ((g - 1.0) * rho_over_p_log) + vprod) +
              0.5 * (l.p * r.vel[k] + r.p * l.vel[k]);
  }
  return f;
}

Flux flux_ismail_roe(const EulerGas& gas, const Primitive& l, const Primitive& r) {
  const double g = gas.gamma;
  const double z1l = std::sqrt(l.rho / l.p), z1r = std::sqrt(r.rho / r.p);
  const double z5l = std::sqrt(l.rho * l.p), z5r = std::sqrt(r.rho * r.p);
  const double z1b = 0.5 * (z1l + z1r), z5b = 0.5 * (z5l + z5r);
  const double z1log = log_mean(z1l, z1r), z5log = log_mean(z5l, z5r);
  const std::array<double, 3> vhat{(z1l * l.vel[0] + z1r * r.vel[0]) / (2.0 * z1b),
                                   (z1l * l.vel[1] + z1r * r.vel[1]) / (2.0 * z1b),
                                   (z1l * l.vel[2] + z1r * r.vel[2]) / (2.0 * z1b)};
  const double rho_hat = z1b * z5log;
  const double p1 = z5b / z1b;
  const double p2 = ((g + 1.0) / (2.0 * g)) * (z5log / z1log) + ((g - 1.0) / (2.0 * g)) * p1;
  const double a2 = g * p2 / rho_hat;
  const double hhat =
      a2 / (g - 1.0) + 0.5 * (vhat[0] * vhat[0] + vhat[1] * vhat[1] + vhat[2] * vhat[2]);
  Flux f;
  for (int k = 0; k < 3; ++k) {
    const double fm = rho_hat * vhat[k];
    f[k][0] = fm;
    f[k][1] = fm * vhat[0];
    f[k][2] = fm * vhat[1];
    f[k][3] = fm * vhat[2];
    f[k][1 + k] += p1;
    f[k][4] = fm * hhat;
  }
  return f;
}

}  // namespace

Flux two_point_flux(const EulerGas& gas, TwoPointFluxKind kind, const State& ul,
                    const State& ur) {
  if (!admissible(gas, ul) || !admissible(gas, ur))
    throw InadmissibleStateError("two_point_flux: inadmissible state");
  switch (kind) {
    case TwoPointFluxKind::Chandrashekar:
      return flux_chandrashekar(gas, prim(gas, ul), prim(gas, ur));
    case TwoPointFluxKind::ChandrashekarRanochaFix:
      return flux_ranocha(gas, prim(gas, ul), prim(gas, ur));
    case TwoPointFluxKind::IsmailRoe:
      return flux_ismail_roe(gas, prim(gas, ul), prim(gas, ur));
    case TwoPointFluxKind::CentralConservative: {
      Flux fl = physical_flux(gas, ul);
      Flux fr = physical_flux(gas, ur);
      for (int k = 0; k < 3; ++k)
        for (int s = 0; s < kStates; ++s) fl[k][s] = 0.5 * (fl[k][s] + fr[k][s]);
      return fl;
    }
  }
  throw DimensionError("two_point_flux: unknown kind");
}

State two_point_flux_dir(const EulerGas& gas, TwoPointFluxKind kind, const State& ul,
                         const State& ur, int k) {
  return two_point_flux(gas, kind, ul, ur)[k];
}

bool is_entropy_conserving(TwoPointFluxKind kind) {
  return kind != TwoPointFluxKind::CentralConservative;
}

bool is_kinetic_energy_preserving(TwoPointFluxKind kind) {
  return kind == TwoPointFluxKind::ChandrashekarRanochaFix;
}

State roe_dissipation(const EulerGas& gas, const State& ul, const State& ur,
                      const std::array<double, 3>& n) {
  const double g = gas.gamma;
  const Primitive l = prim(gas, ul), r = prim(gas, ur);
  if (!(l.rho > 0.0) || !(r.rho > 0.0))
    throw InadmissibleStateError("roe_dissipation: vacuum state");
  const double sl = std::sqrt(l.rho), sr = std::sqrt(r.rho);
  const double hl = (ul[4] + l.p) / l.rho, hr = (ur[4] + r.p) / r.rho;
  const double isum = 1.0 / (sl + sr);
  const std::array<double, 3> vel{(sl * l.vel[0] + sr * r.vel[0]) * isum,
                                  (sl * l.vel[1] + sr * r.vel[1]) * isum,
                                  (sl * l.vel[2] + sr * r.vel[2]) * isum};
  const double h = (sl * hl + sr * hr) * isum;
  const double rho = sl * sr;
  const double q2 = vel[0] * vel[0] + vel[1] * vel[1] + vel[2] * vel[2];
  const double a2 = (g - 1.0) * (h - 0.5 * q2);
  if (!(a2 > 0.0)) throw InadmissibleStateError("roe_dissipation: nonpositive Roe sound speed");
  const double a = std::sqrt(a2);
  const double un = vel[0] * n[0] + vel[1] * n[1] + vel[2] * n[2];

  // orthonormal tangents
  std::array<double, 3> t1{1.0, 0.0, 0.0};
  if (std::abs(n[0]) > 0.9) t1 = {0.0, 1.0, 0.0};
  double dot = t1[0] * n[0] + t1[1] * n[1] + t1[2] * n[2];
  for (int i = 0; i < 3; ++i) t1[i] -= dot * n[i];
  double nt = std::sqrt(t1[0] * t1[0] + t1[1] * t1[1] + t1[2] * t1[2]);
  for (int i = 0; i < 3; ++i) t1[i] /= nt;
  const std::array<double, 3> t2{n[1] * t1[2] - n[2] * t1[1], n[2] * t1[0] - n[0] * t1[2],
                                 n[0] * t1[1] - n[1] * t1[0]};
  const double ut1 = vel[0] * t1[0] + vel[1] * t1[1] + vel[2] * t1[2];
  const double ut2 = vel[0] * t2[0] + vel[1] * t2[1] + vel[2] * t2[2];

  // right eigenvectors (columns) and eigenvalues
  double R[5][5];
  const double lam[5] = {std::abs(un - a), std::abs(un), std::abs(un), std::abs(un),
                         std::abs(un + a)};
  R[0][0] = 1.0;       R[0][1] = 1.0;      R[0][2] = 0.0;   R[0][3] = 0.0;   R[0][4] = 1.0;
  for (int i = 0; i < 3; ++i) {
    R[1 + i][0] = vel[i] - a * n[i];
    R[1 + i][1] = vel[i];
    R[1 + i][2] = t1[i];
    R[1 + i][3] = t2[i];
    R[1 + i][4] = vel[i] + a * n[i];
  }
  R[4][0] = h - a * un;
  R[4][1] = 0.5 * q2;
  R[4][2] = ut1;
  R[4][3] = ut2;
  R[4][4] = h + a * un;

  // eigenvector scaling with R S R^T = du/dv at the Roe state
  const double p_roe = rho * a2 / g;
  const double S[5] = {rho / (2.0 * g), rho * (g - 1.0) / g, p_roe, p_roe, rho / (2.0 * g)};

  const State vl = entropy_variables(gas, ul);
  const State vr = entropy_variables(gas, ur);
  State dv;
  for (int i = 0; i < kStates; ++i) dv[i] = vl[i] - vr[i];

  double w[5];
  for (int c = 0; c < 5; ++c) {
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += R[i][c] * dv[i];
    w[c] = lam[c] * S[c] * acc;
  }
  State out{};
  for (int i = 0; i < 5; ++i) {
    double acc = 0.0;
    for (int c = 0; c < 5; ++c) acc += R[i][c] * w[c];
    out[i] = -0.5 * acc;
  }
  return out;
}

}  // namespace nsfr
