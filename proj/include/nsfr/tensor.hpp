#pragma once

#include <span>
#include <vector>

#include "nsfr/defs.hpp"

namespace nsfr {

/// Dense real matrix in row-major order. All d-dimensional operators in the
/// solver are tensor products of these 1D factors.
struct Operator1D {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Operator1D() = default;
  Operator1D(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Operator1D identity(int n) {
    Operator1D m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  Operator1D transposed() const {
    Operator1D m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
};

/// Extents of a tensor-product node set; xi runs fastest:
/// index(i,j,k) = i + nx*(j + ny*k). Degenerate directions use extent 1.
struct Extents {
  int nx = 1;
  int ny = 1;
  int nz = 1;

  int size() const { return nx * ny * nz; }
  int index(int i, int j, int k) const { return i + nx * (j + ny * k); }
  int extent(int dir) const { return dir == 0 ? nx : (dir == 1 ? ny : nz); }
  bool operator==(const Extents&) const = default;
};

/// Flat nodal/modal values over a tensor-product node set.
struct TensorField {
  Extents ext;
  std::vector<double> values;

  TensorField() = default;
  explicit TensorField(Extents e) : ext(e), values(static_cast<size_t>(e.size()), 0.0) {}
  TensorField(Extents e, std::vector<double> v);

  double& operator()(int i, int j, int k) { return values[ext.index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values[ext.index(i, j, k)]; }
};

}  // namespace nsfr
