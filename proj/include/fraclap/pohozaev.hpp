#pragma once

#include "fraclap/boundary_trace.hpp"
#include "fraclap/solver.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fraclap {

/// Terms of (2s - n) int u f(u) + 2n int F(u) = Gamma(1+s)^2 int_{boundary} (u/delta^s)^2 (x . nu).
/// Volume integrals are nodal sums h^n sum (midpoint rule over grid cells).
struct PohozaevReport {
  double A = 0;  // (2s - n) int u f(u)
  double B = 0;  // 2n int F(u)
  double R = 0;  // Gamma(1+s)^2 int q^2 (x . nu)
  double residual = 0;           // A + B - R
  double relative_residual = 0;  // residual / max(|A|, |B|, |R|), or the absolute value
  bool relative = true;          // false when all terms vanish and the absolute residual is reported
  Point origin = Point::Zero();
  int flagged_nodes = 0;
  std::vector<std::string> warnings;
};

PohozaevReport pohozaev_residual(const SolutionField& u, const Nonlinearity& f, const Domain& d,
                                 const BoundaryTrace& q, const Point& origin = Point::Zero());
/// Computes the trace with the given window first.
PohozaevReport pohozaev_residual(const SolutionField& u, const Nonlinearity& f, const Domain& d,
                                 const Point& origin = Point::Zero(), const TraceWindow& window = {});

/// Change of the boundary term when the origin moves by c: Gamma(1+s)^2 int q^2 (c . nu).
/// Vanishes for solutions.
double boundary_term_shift(const BoundaryTrace& q, const Point& c);

struct IbpReport {
  double lhs = 0;        // int (-Delta)^s u  v_{x_i}
  double volume = 0;     // -int u_{x_i} (-Delta)^s v
  double boundary = 0;   // Gamma(1+s)^2 int (u/delta^s)(v/delta^s) nu_i, nu outward
  double residual = 0;   // lhs - volume + boundary
  double magnitude = 0;  // sum of the absolute integrands of all three terms
  double relative_residual = 0;
};

using PointFunction = std::function<double(const Point&)>;

/// Integration-by-parts identity along axis i (0-based). Lu and Lv are the right
/// sides (-Delta)^s u and (-Delta)^s v as functions of position. The residual is
/// relative to the summed absolute integrands, so exact cancellation by parity
/// still yields a meaningful ratio.
IbpReport ibp_residual(const SolutionField& u, const SolutionField& v, const PointFunction& Lu,
                       const PointFunction& Lv, const Domain& d, int axis, const TraceWindow& window = {});
/// Right sides given as nonlinearities of the respective solutions.
IbpReport ibp_residual(const SolutionField& u, const SolutionField& v, const Nonlinearity& gu,
                       const Nonlinearity& hv, const Domain& d, int axis, const TraceWindow& window = {});

/// Continuous field of a solution (weighted model).
PointFunction continuous_field(const SolutionField& u);

enum class GapClass { SubcriticalViolating, Critical, Supercritical };
std::string to_string(GapClass c);

struct GapResult {
  double min_gap = 0;  // over samples with |u| above 1e-8 of the range; rounding-level gaps are 0
  GapClass classification = GapClass::Critical;
};

/// gap(u) = (n - 2s)/(2n) u f(u) - F(u). Samples within rounding of zero count as zero.
GapResult supercritical_gap(const Nonlinearity& f, int n, double s, const std::vector<double>& samples);
/// Uniform samples on [-M, M].
std::vector<double> gap_samples(double M = 10.0, int count = 2001);

struct ScalingOptions {
  std::vector<double> lambdas;  // empty: 1.001, 1.002, ..., 1.02
  std::optional<Point> origin;  // default: domain centroid
  int angles = 32;              // rays in 2D
  double table_step = 0.05;     // spacing of the log-distance table along each ray
  // Start of the log-distance table relative to the boundary radius; 0 selects 1e-7 in 1D
  // and 1e-5 in 2D, where cut-cell quadrature closer to the boundary costs minutes per point.
  double min_distance = 0;
  double far_factor = 4.0;      // table reach beyond the boundary, in boundary radii
  double rel_tol = 1e-11;
};

struct ScalingReport {
  std::vector<double> lambdas;
  std::vector<double> I;        // I_lambda
  std::vector<double> margins;  // I_1 - I_lambda
  double I1 = 0;
  double w_norm2 = 0;           // ||w||^2 by the same quadrature
  double derivative = 0;        // one-sided dI/dlambda at 1+
  double fit_residual = 0;      // RMS misfit of the linear fit of (I_lambda - I_1)/(lambda - 1)
  double target = 0;            // -Gamma(1+s)^2 int q^2 (x . nu)
  double relative_error = 0;    // |derivative - target| / |target|
  bool cauchy_schwarz_ok = true;  // I_lambda <= I_1 (1 + 1e-8) for every lambda
  Point origin = Point::Zero();
  std::vector<std::string> warnings;
};

/// I_lambda = int w(lambda x) w(x / lambda) dx with w = (-Delta)^{s/2} u evaluated pointwise by the
/// operator quadrature, tabulated along rays from the origin in log of the distance to the boundary.
/// Throws std::invalid_argument when the domain is not star-shaped about the origin.
ScalingReport scaling_diagnostics(const SolutionField& u, const FracOperator& op, const Domain& d,
                                  const ScalingOptions& opts = {}, const TraceWindow& window = {});

struct LhsCheck {
  double lhs = 0;  // int (x . grad u) (-Delta)^s u
  double rhs = 0;  // -n int F(u)
  double relative_error = 0;
};

LhsCheck scaling_lhs_check(const SolutionField& u, const FracOperator& op, const Nonlinearity& f, const Domain& d,
                           const Point& origin = Point::Zero());

struct ScanRow {
  double p = 0;
  double min_gap = 0;
  GapClass classification = GapClass::Critical;
  SolveOutcome outcome = SolveOutcome::NonConverged;
  int iterations = 0;
  double solver_residual = 0;
  double min_u = 0;
  double defect = 0;           // N(u) = A + B - R, for converged nontrivial solutions
  double relative_defect = 0;
  double tolerance = 0;        // 3 x the torsion calibration residual
  bool passes_identity = false;  // converged, nontrivial and |relative defect| <= tolerance
  bool consistent = true;        // no passing solution coexists with a strictly positive gap
};

struct ScanTable {
  double calibration_residual = 0;
  std::vector<ScanRow> rows;
  bool all_consistent() const;
};

/// For each p: gap classification, Newton from the scaled torsion seed, and the sign defect.
ScanTable nonexistence_scan(const FracOperator& op, const std::vector<double>& p_grid, const SolveOptions& opts = {},
                            double gap_range = 10.0, const Point& origin = Point::Zero());

}  // namespace fraclap
