#pragma once

#include "fraclap/discretization.hpp"

#include <vector>

namespace fraclap {

/// Points and weights of a quadrature rule in the plane (1D rules use x only).
struct PointRule {
  std::vector<Point> points;
  std::vector<double> weights;

  double total() const;
  void append(const PointRule& other);
};

enum class CellKind { Outside, Regular, Special };

/// Outside: the closed cell misses the domain. Special: the cell is cut by the
/// boundary or lies within a few cells of it. Regular otherwise.
CellKind classify_cell(const Domain& d, const Point& lo, double h);

/// Rule for the integral over [p, q] intersected with the domain of F(y) * b(y)^beta,
/// where b is the domain's defining function. Weights include b^beta, so a rule
/// applied to a smooth F is accurate up to the boundary.
PointRule line_rule(const Domain& d, const Point& p, const Point& q, double beta, double rel_tol = 1e-12);

/// Rule for [p, q] lying inside the domain; left/right mark ends on the boundary,
/// where b^beta is factored into a Gauss-Jacobi weight.
void piece_rule(const Domain& d, const Point& p, const Point& q, double beta, bool left, bool right,
                PointRule& out, double rel_tol = 1e-12);

/// Same as line_rule on the cell [lo, lo + h]^n intersected with the domain.
PointRule cell_rule(const Domain& d, const Point& lo, double h, double beta, double rel_tol = 1e-11);

/// Tensor Gauss-Legendre rule with q points per axis on the cell, weights include b^beta.
PointRule gauss_cell_rule(const Domain& d, const Point& lo, double h, int q, double beta);

/// Quadrature over the whole domain assembled from per-cell rules of a grid.
class VolumeRule {
 public:
  VolumeRule(const Discretization& grid, double beta);

  const PointRule& rule() const { return rule_; }
  double beta() const { return beta_; }

  /// Integral of f(y) * b(y)^beta over the domain.
  template <typename F>
  double integrate(F&& f) const {
    double acc = 0;
    for (std::size_t q = 0; q < rule_.points.size(); ++q) acc += rule_.weights[q] * f(rule_.points[q]);
    return acc;
  }

 private:
  double beta_;
  PointRule rule_;
};

}  // namespace fraclap
