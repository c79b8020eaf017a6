#pragma once

#include "fraclap/field_model.hpp"

#include <Eigen/Core>

#include <memory>
#include <vector>

namespace fraclap {

/// Evaluates c_{n,sigma} PV-integral of (u(x) - u(y)) |x - y|^{-n-2 sigma} for fields
/// continued by a FieldModel, either as weights on the model's extended coefficients
/// (row mode) or as a value for given coefficients.
///
/// The integral is split into
///   - a ball |y - x| < r around x where u is replaced by a local quadratic model; the
///     symmetric difference u(x+z) + u(x-z) - 2u(x) is integrated with a Gauss-Jacobi
///     rule for the weight r^{1-2 sigma};
///   - the analytic tail u(x) * |S^{n-1}| r^{-2 sigma} / (2 sigma);
///   - the remaining integral of u(y) K(x - y) over the support, cell by cell:
///     polar coordinates around x for adjacent cells, a subdivided Gauss rule or the
///     cell's fine rule at moderate distance, a coarse or compressed rule far away.
class KernelEngine {
 public:
  KernelEngine(std::shared_ptr<const FieldModel> model, double sigma);

  const FieldModel& model() const { return *model_; }
  double sigma() const { return sigma_; }
  double constant() const { return c_; }

  /// Adds the row of the operator at x to acc (length ext_size).
  void row(const Point& x, Eigen::VectorXd& acc) const;
  /// Value of the operator at x for extended coefficients.
  double value(const Point& x, const Eigen::VectorXd& coeffs) const;

 private:
  struct SpecialRules {
    PointRule fine;
    std::vector<Point> far_points;           // compressed rule nodes (2D)
    Eigen::MatrixXd far_weights;             // stencil x nodes
  };
  template <typename Sink>
  void apply(const Point& x, Sink& sink) const;
  template <typename Sink>
  void near_cell(const Point& x, double r_ball, const CellInfo& cell, Sink& sink) const;
  template <typename Sink>
  void rule_cell(const Point& x, const CellInfo& cell, const std::vector<Point>& pts,
                 const double* wts, Sink& sink) const;
  template <typename Sink>
  void ball(const Point& x, double r_ball, Sink& sink) const;

  double kernel(double r2) const;
  /// Weight-folded radial rule for [a, b] along x + t e inside the support.
  void ray_rule(const Point& x, const Point& e, double a, double b, std::vector<double>& t,
                std::vector<double>& w) const;

  std::shared_ptr<const FieldModel> model_;
  double sigma_, c_;
  int n_;
  // Reference rules on the unit cell, weights scaled by h^n.
  std::vector<Point> coarse_ref_, mid_ref_;
  std::vector<double> coarse_w_, mid_w_;
  Eigen::MatrixXd coarse_basis_, mid_basis_;  // stencil x points
  std::vector<int> cell_slot_;                // per cell: index into weights or specials
  std::vector<std::vector<double>> coarse_rho_, mid_rho_;
  std::vector<SpecialRules> specials_;
};

}  // namespace fraclap
