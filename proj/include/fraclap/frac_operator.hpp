#pragma once

#include "fraclap/discretization.hpp"
#include "fraclap/field_model.hpp"

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fraclap {

class KernelEngine;

/// c_{n,s} = s 4^s Gamma(n/2 + s) / (pi^{n/2} Gamma(1 - s)), the constant for which the
/// operator has Fourier symbol |xi|^{2s}. Throws for n outside {1, 2} or s outside (0, 1).
template <typename Scalar = double>
Scalar normalization_constant(int n, Scalar s);

/// lambda_{n,s} = 4^s Gamma(1 + s) Gamma(n/2 + s) / Gamma(n/2): the operator maps
/// (1 - |x|^2)_+^s to this constant on the unit ball.
template <typename Scalar = double>
Scalar torsion_constant(int n, Scalar s);

struct AssemblyOptions {
  Scheme scheme = Scheme::Weighted;
  int threads = 0;  // 0: FRACLAP_THREADS or the OpenMP default
};

/// Dense discrete operator acting on interior nodal values.
class FracOperator {
 public:
  double s() const { return s_; }
  int dim() const { return grid_->dim(); }
  double constant() const { return c_; }
  Scheme scheme() const { return scheme_; }
  const Eigen::MatrixXd& matrix() const { return A_; }
  const Discretization& grid() const { return *grid_; }
  std::shared_ptr<const Discretization> grid_ptr() const { return grid_; }
  /// Field model matching the scheme (how nodal values continue between nodes).
  std::shared_ptr<const FieldModel> model() const { return model_; }
  /// Far-field treatment; the tail beyond the support is integrated analytically.
  std::string far_field() const { return "analytic tail"; }
  std::string scheme_name() const { return scheme_ == Scheme::Weighted ? "weighted" : "uniform"; }

  Eigen::VectorXd apply(const Eigen::VectorXd& u) const { return A_ * u; }

  FracOperator(std::shared_ptr<const Discretization> grid, double s, Scheme scheme, Eigen::MatrixXd A);

 private:
  std::shared_ptr<const Discretization> grid_;
  std::shared_ptr<const FieldModel> model_;
  double s_, c_;
  Scheme scheme_;
  Eigen::MatrixXd A_;
};

/// Assembles the operator of order s on the grid.
FracOperator assemble(std::shared_ptr<const Discretization> grid, double s, const AssemblyOptions& opts = {});

/// Worker count from FRACLAP_THREADS, or 0 when unset.
int thread_override();

struct OracleOptions {
  double abs_tol = 1e-8;
  int max_intervals = 4000;
};

struct OracleResult {
  double value = 0;
  double error = 0;
  bool converged = true;
};

/// Reference evaluation of c_{n,s} PV-integral (u(x) - u(y)) |x - y|^{-n-2s} dy for a
/// function u supported in the closure of d, by adaptive quadrature: second-order
/// symmetric subtraction on a ball around x, polar coordinates split at the boundary
/// outside it, analytic tail. x must lie inside d.
OracleResult apply_pointwise_oracle(const std::function<double(const Point&)>& u, const Domain& d, double s,
                                    const Point& x, const OracleOptions& opts = {});

/// Same for a discrete field continued by the weighted field model.
OracleResult apply_pointwise_oracle(const SolutionField& u, const Point& x, const OracleOptions& opts = {});

/// Whole-space field on a uniform grid (the padded box).
struct WholeSpaceField {
  int dim = 1;
  double h = 0;
  double half_width = 0;  // grid covers [-half_width, half_width)^n
  int points = 0;         // per axis
  Eigen::VectorXd values; // x-fastest
  double edge_ratio = 0;   // max |w| on the box edge / max |w|
  double image_error = 0;  // first neglected image multipole / max |w|
  bool contaminated = false;  // image_error above 1e-3
  std::vector<std::string> warnings;

  Point node(int i, int j) const { return Point(-half_width + i * h, dim == 2 ? -half_width + j * h : 0.0); }
  double at(int i, int j) const { return values(dim == 2 ? static_cast<Eigen::Index>(j) * points + i : i); }
  /// Linear (bilinear) interpolation; zero outside the grid.
  double value_at(const Point& x) const;
  /// Integral of w^2 over the grid (rectangle rule).
  double squared_norm() const;
};

/// (-Delta)^{s/2} u on a box pad times larger by FFT with multiplier |xi|^s.
/// Periodic images are corrected to quadrupole order. pad >= 2.
WholeSpaceField half_laplacian(const SolutionField& u, int pad = 4);

/// Pointwise (-Delta)^{s/2} u for a discrete field, by the same quadrature as the operator.
class PointwiseHalfLaplacian {
 public:
  PointwiseHalfLaplacian(const FracOperator& op, const Eigen::VectorXd& u);
  ~PointwiseHalfLaplacian();
  double operator()(const Point& x) const;
  /// Integral of u over the domain (monopole of the far field).
  double mass() const { return mass_; }
  double sigma() const { return sigma_; }

 private:
  std::unique_ptr<KernelEngine> engine_;
  Eigen::VectorXd coeffs_;
  double mass_ = 0, sigma_ = 0;
};

/// Binary operator cache keyed by (domain hash, h, L, s).
/// Layout: magic "FRLPOP01", u64 domain hash, f64 h, f64 L, f64 s, u32 scheme,
/// u64 rows, u64 cols, then the row-major matrix as little-endian f64.
class OperatorCache {
 public:
  explicit OperatorCache(std::string directory) : dir_(std::move(directory)) {}
  std::string path_for(const Discretization& grid, double s, Scheme scheme) const;
  std::optional<FracOperator> load(std::shared_ptr<const Discretization> grid, double s, Scheme scheme) const;
  void store(const FracOperator& op) const;

 private:
  std::string dir_;
};

}  // namespace fraclap
