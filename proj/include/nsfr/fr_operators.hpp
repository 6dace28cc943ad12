#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "nsfr/basis.hpp"
#include "nsfr/sumfac.hpp"

namespace nsfr {

/// Correction parameter presets in this code's convention (the convention of
/// the modified-mass operator below). c_SD and c_HU come from the classical
/// ESFR closed forms; c_+ from the published von Neumann tables (p = 2..5).
/// See configs/README.md for sourcing. c = 0 recovers DG.
double correction_c_sd(int p);
double correction_c_hu(int p);
double correction_c_plus(int p);  // throws outside p in [2,5]
bool correction_c_plus_available(int p);

/// c_(s,v,w) = c1d^((s+v+w)/p) over the index set s,v,w in {0,p}, s+v+w >= p.
/// With s/p in {0,1} the exponent is the integer count of active directions.
double correction_c_combo(double c1d, int active_dirs);

/// p-th power of the strong-form 1D differentiation operator (M^-1 S)^p;
/// equals the nodal p-th-derivative operator for the degree-p basis.
Operator1D diff_power_p(const Basis1D& basis);

/// 1D ESFR correction block K = c (D^p)^T M (D^p).
Operator1D correction_1d(const Basis1D& basis, double c1d);

/// 1D modified mass matrix M + K. The d-dimensional reference modified mass
/// is its tensor product, which reproduces the full correction-index sum.
Operator1D modified_mass_1d(const Basis1D& basis, double c1d);

/// FR projection factor: (M + K)^{-1} chi^T W. c = 0 gives the L2 projection.
Operator1D build_fr_projection(const Basis1D& basis, double c1d);

/// Everything 1D the d-dimensional solver needs for one (p, quadrature, c).
struct ReferenceOperators {
  Basis1D basis;
  double c1d = 0.0;
  Operator1D proj;          // L2 projection Pi
  Operator1D k1d;           // c (D^p)^T M D^p
  Operator1D mmass1d;       // M + K
  Operator1D mmass1d_inv;
  Operator1D fr_proj;       // FR projection factor
  Operator1D quad_diff;     // flux-basis differentiation on quadrature nodes
  Operator1D skew;          // W Dq - Dq^T W
  Operator1D bound_flux;    // 2 x n_q flux basis at -1 (row 0), +1 (row 1)
  Operator1D bound_sol;     // 2 x (p+1) solution basis at -1, +1
  std::vector<double> wq;   // quadrature weights

  int np() const { return basis.p + 1; }
  int nq() const { return basis.eval_rule.n; }
};

ReferenceOperators build_reference_operators(int p, QuadKind quad_kind, int overint,
                                             double c1d);

/// Dense hybridized skew-symmetric stiffness operator over volume plus face
/// quadrature nodes, per reference direction. Hybrid node order: volume nodes
/// first, then faces 2*dir+side with the face-node layout of sumfac.hpp.
struct HybridStiffness {
  int dim = 3;
  Extents ext;                        // volume quadrature extents
  int n_volume = 0;
  int n_face_total = 0;
  std::vector<Operator1D> qtilde;     // per direction, (Nv+Nf) square
  std::vector<Operator1D> skew;       // Qtilde - Qtilde^T
  std::vector<Operator1D> boundary;   // blockdiag(0, W_f diag(nhat^r))

  int face_offset(int face_id) const { return face_offsets[face_id]; }
  std::vector<int> face_offsets;
};

HybridStiffness build_hybrid_stiffness(const ReferenceOperators& ops, int dim);

/// Dense per-element ESFR correction operator (Eq. form with the full index
/// set); J given at the volume quadrature nodes. Diagnostics and tests only;
/// the solve path never materializes it.
Operator1D build_correction_operator(const ReferenceOperators& ops, int dim,
                                     std::span<const double> j_vol, double c1d);

/// Dense per-element mass matrix chi^T W J chi.
Operator1D build_curvilinear_mass(const ReferenceOperators& ops, int dim,
                                  std::span<const double> j_vol);

/// Weight-adjusted inverse application: out = FrProj (W J)^{-1} FrProj^T rhs,
/// three sum-factorized passes plus a diagonal solve. J must be positive.
/// work needs wa_work_size doubles.
void weight_adjusted_inverse_apply(const ReferenceOperators& ops, int dim,
                                   std::span<const double> j_vol,
                                   std::span<const double> rhs, std::span<double> out,
                                   std::span<double> work);

/// Exact reference solve (M+K)^{-1} rhs / j0 for elements with constant J.
void reference_modified_mass_solve(const ReferenceOperators& ops, int dim, double j0,
                                   std::span<const double> rhs, std::span<double> out,
                                   std::span<double> work);

/// Apply the reference modified mass tensor product (M+K) (x) ... (x) (M+K).
void reference_modified_mass_apply(const ReferenceOperators& ops, int dim,
                                   std::span<const double> in, std::span<double> out,
                                   std::span<double> work);

size_t wa_work_size(const ReferenceOperators& ops, int dim);

/// Kronecker product (row-major), for dense oracles.
Operator1D kron(const Operator1D& a, const Operator1D& b);

}  // namespace nsfr
