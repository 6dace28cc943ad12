#pragma once

#include <array>
#include <span>

#include "nsfr/defs.hpp"

namespace nsfr {

constexpr int kStates = 5;
using State = std::array<double, kStates>;
using Flux = std::array<State, 3>;  // columns f1, f2, f3

struct EulerGas {
  double gamma = 1.4;
};

double pressure(const EulerGas& gas, const State& u);
double sound_speed(const EulerGas& gas, const State& u);
bool admissible(const EulerGas& gas, const State& u);
State prim_to_cons(const EulerGas& gas, double rho, const std::array<double, 3>& vel, double p);

/// Physical flux columns f1, f2, f3. Throws on inadmissible states.
Flux physical_flux(const EulerGas& gas, const State& u);
State physical_flux_dir(const EulerGas& gas, const State& u, int k);

/// Entropy variables v = U'(u) for U = -rho s/(gamma-1), s = ln p - gamma ln rho.
State entropy_variables(const EulerGas& gas, const State& u);
/// Inverse map; requires v5 < 0 (this failure mode is what blocks a kinetic
/// energy analogue of the entropy projection).
State entropy_to_conservative(const EulerGas& gas, const State& v);

/// Entropy potential psi^k = v f^k' - F^k = rho u_k.
double entropy_potential(const EulerGas& gas, const State& u, int k);

double entropy_function(const EulerGas& gas, const State& u);

/// Kinetic energy variables (-|u|^2/2, u, v, w, 0); the zero fifth component
/// is why no inverse mapping exists.
State kinetic_energy_variables(const State& u);

enum class TwoPointFluxKind {
  Chandrashekar,
  ChandrashekarRanochaFix,
  IsmailRoe,
  CentralConservative
};

/// Symmetric consistent two-point flux, all three directions at once.
Flux two_point_flux(const EulerGas& gas, TwoPointFluxKind kind, const State& ul,
                    const State& ur);
State two_point_flux_dir(const EulerGas& gas, TwoPointFluxKind kind, const State& ul,
                         const State& ur, int k);
bool is_entropy_conserving(TwoPointFluxKind kind);
bool is_kinetic_energy_preserving(TwoPointFluxKind kind);

/// Roe dissipation for a unit normal, recast in entropy-variable jumps:
/// -1/2 R |Lambda| S R^T [[v]] with the eigenvector scaling R S R^T = du/dv.
/// Zero when ul == ur; [[v]] . d <= 0 always.
State roe_dissipation(const EulerGas& gas, const State& ul, const State& ur,
                      const std::array<double, 3>& unit_normal);

/// Logarithmic mean with a series guard near ul == ur; symmetric bitwise.
double log_mean(double a, double b);

}  // namespace nsfr
