#pragma once

#include "fraclap/discretization.hpp"
#include "fraclap/volume_rule.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <memory>
#include <vector>

namespace fraclap {

/// How a nodal field is continued between nodes.
///  Weighted: u = b^s * g with g a local cubic (tensor cubic in 2D) interpolant of
///            g_k = u_k / b(x_k)^s, extrapolated to ghost nodes by least squares.
///  Uniform:  u is the linear (bilinear) interpolant of the nodal values with
///            exterior nodes set to zero.
enum class Scheme { Weighted, Uniform };

struct CellInfo {
  int i, j;
  CellKind kind;
};

class FieldModel {
 public:
  static constexpr int kMargin = 3;
  static constexpr int kMaxStencil = 16;

  /// full_lattice: every grid node is a coefficient and every cell is in the support
  /// (Uniform only; used for translation-invariant reference rows).
  FieldModel(std::shared_ptr<const Discretization> grid, Scheme scheme, double s, bool full_lattice = false);

  const Discretization& grid() const { return *grid_; }
  std::shared_ptr<const Discretization> grid_ptr() const { return grid_; }
  const Domain& domain() const { return grid_->domain(); }
  Scheme scheme() const { return scheme_; }
  int dim() const { return grid_->dim(); }
  double h() const { return grid_->h(); }
  double s() const { return s_; }
  bool full_lattice() const { return full_; }

  int ext_size() const { return ext_size_; }
  int ext_index(int i, int j) const;
  /// Maps unknowns (g for Weighted, u for Uniform) to coefficients on the extended lattice.
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& extension() const { return ext_; }
  /// b(x_k)^s at interior nodes (ones for Uniform).
  const Eigen::VectorXd& node_weight() const { return node_weight_; }
  const std::vector<CellInfo>& cells() const { return cells_; }

  /// Weight b^s (zero outside the domain) for Weighted; 1 for Uniform.
  double weight(const Point& y) const;
  Point weight_gradient(const Point& y) const;

  /// Cell containing y and local coordinates in [0, 1].
  void locate(const Point& y, int& ci, int& cj, double& tx, double& ty) const;
  /// Basis values of cell (ci, cj) at local (tx, ty); returns the stencil size.
  int stencil(int ci, int cj, double tx, double ty, int* ids, double* vals) const;
  /// Basis gradients (physical units), two arrays of stencil size.
  int stencil_gradient(int ci, int cj, double tx, double ty, int* ids, double* gx, double* gy) const;
  int stencil_size() const;

  /// Local quadratic model around the node nearest to x, evaluated at y.
  /// Returns the number of nodes (3 in 1D, 9 in 2D).
  int quadratic_stencil(const Point& x, const Point& y, int* ids, double* vals) const;

  /// Coefficients of the continued field for interior values u.
  Eigen::VectorXd coefficients(const Eigen::VectorXd& u) const;
  /// Coefficients for plain interpolation of nodal data (no boundary weight).
  Eigen::VectorXd plain_coefficients(const Eigen::VectorXd& data) const { return ext_ * data; }

  double evaluate(const Eigen::VectorXd& coeffs, const Point& y) const;
  Point gradient(const Eigen::VectorXd& coeffs, const Point& y) const;
  /// Interpolant of plain coefficients at y (no weight).
  double interpolate(const Eigen::VectorXd& coeffs, const Point& y) const;
  /// Gradient of the interpolant at y (no weight).
  Point interpolate_gradient(const Eigen::VectorXd& coeffs, const Point& y) const;

 private:
  void build_extension();

  std::shared_ptr<const Discretization> grid_;
  Scheme scheme_;
  double s_;
  bool full_;
  int width_ = 0, ext_size_ = 0;
  Eigen::SparseMatrix<double, Eigen::RowMajor> ext_;
  Eigen::VectorXd node_weight_;
  std::vector<CellInfo> cells_;
  Eigen::Matrix<double, 5, 8> quad_fit_;
};

}  // namespace fraclap
