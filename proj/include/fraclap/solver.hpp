#pragma once

#include "fraclap/frac_operator.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace fraclap {

/// Right-hand side f(u) with derivative and antiderivative F(u) = int_0^u f.
class Nonlinearity {
 public:
  enum class Kind { Constant, Linear, Power, Table };

  static Nonlinearity constant(double c);
  static Nonlinearity linear(double lambda);
  /// u -> |u|^{p-1} u, p >= 1.
  static Nonlinearity power(double p);
  /// Piecewise-linear f through sorted knots, extended linearly beyond them.
  static Nonlinearity table(std::vector<double> knots, std::vector<double> values);

  Kind kind() const { return kind_; }
  double parameter() const { return a_; }
  std::string describe() const;

  double f(double u) const;
  /// f in extended precision, for finite-difference checks.
  long double f_wide(long double u) const;
  double df(double u) const;
  double F(double u) const;

  Eigen::VectorXd f(const Eigen::VectorXd& u) const { return u.unaryExpr([this](double v) { return f(v); }); }
  Eigen::VectorXd df(const Eigen::VectorXd& u) const { return u.unaryExpr([this](double v) { return df(v); }); }
  Eigen::VectorXd F(const Eigen::VectorXd& u) const { return u.unaryExpr([this](double v) { return F(v); }); }

  /// Worst relative discrepancy between a central difference of F and f at the samples.
  double antiderivative_check(const std::vector<double>& samples) const;

 private:
  Nonlinearity(Kind k, double a) : kind_(k), a_(a) {}
  int segment(double u) const;
  template <typename T>
  T eval(T u) const;

  Kind kind_;
  double a_;
  std::vector<double> knots_, values_, cumulative_;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Direct solve of A u = rhs; ||A u - rhs|| <= 1e-10 ||rhs|| is enforced.
SolutionField solve_linear(const FracOperator& op, const Eigen::VectorXd& rhs);

enum class SolveOutcome { Nontrivial, Trivial, NonConverged };
std::string to_string(SolveOutcome o);

struct SolveOptions {
  int max_iterations = 50;
  double tolerance = 1e-9;  // relative to the residual scale of the initial guess
  double damping = 1.0;     // first trial step length
  double zero_scale = 0.0;  // norm the zero threshold is relative to (0: norm of u0)
  double zero_threshold = 1e-12;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double residual = 0;           // ||A u - f(u)||
  double residual_scale = 0;     // reference for the relative tolerance
  std::vector<double> residual_history;
  std::vector<double> damping_history;
  double solution_norm = 0;
  SolveOutcome outcome = SolveOutcome::NonConverged;
  std::string note;
};

/// Damped Newton iteration on G(u) = A u - f(u) with Jacobian A - diag f'(u).
/// A non-converged result is evidence only; it does not show that no solution exists.
std::pair<SolutionField, SolveReport> solve_semilinear(const FracOperator& op, const Nonlinearity& f,
                                                       const Eigen::VectorXd& u0, const SolveOptions& opts = {});

/// G(u) = A u - f(u).
Eigen::VectorXd residual(const FracOperator& op, const Nonlinearity& f, const Eigen::VectorXd& u);

/// t * torsion with t on a log grid over [1e-3, 1e3] minimizing ||G(t T)|| / (t ||T||).
Eigen::VectorXd scaled_torsion_seed(const FracOperator& op, const Nonlinearity& f, const Eigen::VectorXd& torsion,
                                    double* t_out = nullptr);

/// Worst relative error between the Jacobian action and A d minus a central
/// difference of f, along 10 random directions with step 1e-6 times the scale of u.
double jacobian_check(const FracOperator& op, const Nonlinearity& f, const Eigen::VectorXd& u,
                      unsigned seed = 12345);

}  // namespace fraclap
