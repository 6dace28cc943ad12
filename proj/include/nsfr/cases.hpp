#pragma once

#include <optional>
#include <string>

#include "nsfr/euler.hpp"

namespace nsfr {

enum class CaseKind { TaylorGreenVortex, ManufacturedEuler, IsentropicVortex, FreeStream };

/// A flow case: initial condition, optional exact solution and source term,
/// and the periodic box it lives on.
struct CaseSpec {
  CaseKind kind = CaseKind::FreeStream;
  EulerGas gas;
  double x_left = 0.0;
  double x_right = 2.0 * 3.14159265358979323846;
  // free-stream parameters
  double fs_rho = 1.0;
  std::array<double, 3> fs_vel{0.1, 0.1, 0.1};
  double fs_p = 1.0;
  // isentropic vortex parameters
  double vortex_pi_max = 0.4;

  bool has_exact() const {
    return kind == CaseKind::ManufacturedEuler || kind == CaseKind::IsentropicVortex ||
           kind == CaseKind::FreeStream;
  }
  bool has_source() const { return kind == CaseKind::ManufacturedEuler; }

  State initial(const std::array<double, 3>& x) const { return exact_or_initial(x, 0.0); }
  State exact(const std::array<double, 3>& x, double t) const { return exact_or_initial(x, t); }
  State source(const std::array<double, 3>& x, double t) const;

 private:
  State exact_or_initial(const std::array<double, 3>& x, double t) const;
};

CaseSpec make_case(CaseKind kind, const EulerGas& gas = EulerGas{});
CaseKind case_kind_from_name(const std::string& name);
std::string case_name(CaseKind kind);

State tgv_initial(const EulerGas& gas, double x, double y, double z);
State manufactured_exact(const EulerGas& gas, double x, double y, double z, double t);
State manufactured_source(const EulerGas& gas, double x, double y, double z, double t);
State isentropic_vortex_exact(const EulerGas& gas, double x, double y, double z, double t,
                              double pi_max = 0.4);

}  // namespace nsfr
