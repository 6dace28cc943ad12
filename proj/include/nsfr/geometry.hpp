#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nsfr/fr_operators.hpp"

namespace nsfr {

/// Periodic structured box of m^3 hexahedra; connectivity is implicit.
struct StructuredMesh {
  int m = 1;
  double x_left = 0.0;
  double x_right = 1.0;

  int n_elements() const { return m * m * m; }
  std::array<int, 3> coords(int e) const { return {e % m, (e / m) % m, e / (m * m)}; }
  int element(int e1, int e2, int e3) const {
    auto wrap = [this](int a) { return ((a % m) + m) % m; };
    return wrap(e1) + m * (wrap(e2) + m * wrap(e3));
  }
  /// Neighbor across face 2*dir+side.
  int neighbor(int e, int face) const {
    auto c = coords(e);
    const int dir = face / 2;
    c[dir] += (face % 2) ? 1 : -1;
    return element(c[0], c[1], c[2]);
  }
  double h() const { return (x_right - x_left) / m; }
};

/// Degree-(p+1) polynomial mapping per element, stored as control points at
/// tensor LGL grid nodes.
struct CurvilinearMapping {
  StructuredMesh mesh;
  int grid_degree = 1;
  LagrangeBasis grid_basis;            // 1D nodes of the mapping shape functions
  Extents grid_ext;
  std::vector<double> control_points;  // [elem][grid node][3]

  int nodes_per_element() const { return grid_ext.size(); }
  const double* point(int e, int node) const {
    return &control_points[(static_cast<size_t>(e) * nodes_per_element() + node) * 3];
  }
  /// Evaluate the element mapping polynomial at a reference point.
  std::array<double, 3> eval(int e, const std::array<double, 3>& xi) const;
};

/// Mapping from a closed-form warp of the periodic box; `grid_degree` copies
/// the solution degree plus one. beta = 0 gives the Cartesian mesh.
/// `length_scale` falls back to (x_right-x_left)/(2 pi), the periodic choice.
CurvilinearMapping warp_grid_3d(int m_per_dir, double beta, double x_left, double x_right,
                                int grid_degree, double length_scale = 0.0);

/// Arbitrary-map variant used by tests.
CurvilinearMapping mapping_from_function(
    const StructuredMesh& mesh, int grid_degree,
    const std::function<std::array<double, 3>(const std::array<double, 3>&)>& map);

enum class MetricMode {
  ConservativeCurl,  // discrete GCL by construction
  NaiveAnalytic      // pointwise adjugate; violates discrete GCL on warped grids
};

struct ElementMetrics {
  // volume quadrature nodes, xi fastest; cofactor stored [node][n][i] with n
  // the physical and i the reference index
  std::vector<double> jac_vol;
  std::vector<double> cof_vol;
  std::vector<double> x_vol;
  std::vector<double> x_sol;  // physical coordinates of the solution nodes
  // per face 2*dir+side, face-node layout of sumfac.hpp
  std::array<std::vector<double>, 6> cof_surf;
  std::array<std::vector<double>, 6> jac_surf;   // J^Gamma
  std::array<std::vector<double>, 6> normal;     // unit outward physical normal
  std::array<std::vector<double>, 6> x_surf;
  bool const_jacobian = false;
  double j0 = 0.0;

  const double* cof_at(int q) const { return &cof_vol[9 * static_cast<size_t>(q)]; }
  const double* cof_face_at(int f, int k) const { return &cof_surf[f][9 * static_cast<size_t>(k)]; }
};

struct MetricData {
  Extents vol_ext;
  Extents sol_ext;
  std::vector<ElementMetrics> elem;
};

/// Metric terms via the conservative-curl recipe: antisymmetrized products
/// x_l grad x_m built on the mapping shape functions, interpolated to the
/// volume quadrature, curled with the flux-basis differentiation matrices.
/// Face cofactors are the flux-basis interpolants of the volume cofactors,
/// which is the consistency the free-stream proof needs.
MetricData build_metrics_conservative_curl(const CurvilinearMapping& mapping,
                                           const ReferenceOperators& ops,
                                           MetricMode mode = MetricMode::ConservativeCurl);

/// Max |div^r C| over volume nodes of every element (discrete GCL residual).
double gcl_residual(const MetricData& metrics, const ReferenceOperators& ops);

struct FaceNormals {
  std::span<const double> unit_normals;  // [face node][3]
  std::span<const double> surface_jacobian;
};

/// Unit physical normals and J^Gamma for one element face.
FaceNormals physical_normals(const MetricData& metrics, int elem, int face);

}  // namespace nsfr
