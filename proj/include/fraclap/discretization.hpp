#pragma once

#include "fraclap/geometry.hpp"

#include <Eigen/Core>

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

namespace fraclap {

/// Raised when a grid would exceed the configured unknown cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform grid on the box [-L, L]^n. Node (i, j) sits at (-L + i h, -L + j h),
/// 0 <= i, j <= cells; in 1D j is always 0. Interior nodes are the unknowns.
class Discretization {
 public:
  static constexpr int kDefaultCap = 4096;

  Discretization(std::shared_ptr<const Domain> domain, double half_width, int cells,
                 int max_unknowns = kDefaultCap);

  const Domain& domain() const { return *domain_; }
  std::shared_ptr<const Domain> domain_ptr() const { return domain_; }
  int dim() const { return domain_->dim(); }
  double h() const { return h_; }
  double half_width() const { return L_; }
  int cells() const { return cells_; }

  Point node(int i, int j) const { return Point(-L_ + i * h_, dim() == 2 ? -L_ + j * h_ : 0.0); }
  int unknowns() const { return static_cast<int>(interior_.size()); }
  const std::vector<std::array<int, 2>>& interior() const { return interior_; }
  Point interior_point(int k) const { return node(interior_[k][0], interior_[k][1]); }
  /// Unknown number of lattice node (i, j), or -1 when it is exterior or off the grid.
  int unknown_index(int i, int j) const;

  /// Bytes needed for one dense operator on this grid.
  static double operator_bytes(int unknowns) { return 8.0 * unknowns * static_cast<double>(unknowns); }

 private:
  std::shared_ptr<const Domain> domain_;
  double L_, h_;
  int cells_;
  std::vector<std::array<int, 2>> interior_;
  std::vector<int> lookup_;
};

/// Nodal values of u on the interior nodes; exterior values are zero by construction.
struct SolutionField {
  std::shared_ptr<const Discretization> grid;
  double s = 0.5;
  Eigen::VectorXd values;

  int dim() const { return grid->dim(); }
  /// Value at lattice node (i, j), zero off the interior set.
  double at(int i, int j) const {
    const int k = grid->unknown_index(i, j);
    return k < 0 ? 0.0 : values(k);
  }
};

}  // namespace fraclap
