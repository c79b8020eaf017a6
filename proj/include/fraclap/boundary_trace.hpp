#pragma once

#include "fraclap/frac_operator.hpp"

#include <string>
#include <vector>

namespace fraclap {

/// Fit window [k1, k2] sample steps along the inward normal. The step is h unless
/// k2 h would exceed max_fraction of the inscribed radius; then it shrinks to that
/// fraction over k2, so coarse grids still fit a quadratic over a short distance.
struct TraceWindow {
  int k1 = 4;
  int k2 = 20;
  double max_fraction = 0.1;
};

struct TraceNode {
  BoundaryNode node;
  double q = 0;         // extrapolated u / delta^s at the boundary point
  double residual = 0;  // max of the RMS misfit and |q - cubic-fit value at 0|
  int samples = 0;
  bool flagged = false;  // window left the domain; excluded from surface integrals
};

struct BoundaryTrace {
  double s = 0;
  TraceWindow window;
  double step = 0;  // sample spacing actually used
  std::vector<TraceNode> nodes;
  /// Hoelder exponent of q along the boundary from a log-log fit of its modulus of
  /// continuity. NaN when q is constant to rounding or the boundary has two points.
  double holder_alpha = 0;
  std::vector<std::string> warnings;

  int flagged_count() const;
  double max_residual() const;
};

/// u / delta^s sampled at z - t nu for t in the window, fitted by a quadratic in t,
/// evaluated at t = 0. The field is continued by the weighted model and delta is exact.
BoundaryTrace trace(const SolutionField& u, const Domain& d, const TraceWindow& window = {});

/// Sum over unflagged nodes of q^2 ((z - origin) . nu) times the surface weight.
double surface_functional(const BoundaryTrace& q, const Domain& d, const Point& origin = Point::Zero());

/// Sum over unflagged nodes of q_u q_v nu_i times the surface weight.
double mixed_surface_functional(const BoundaryTrace& qu, const BoundaryTrace& qv, int axis);

/// max over interior nodes with delta > 2h of |grad u| delta^{1-s}, centred differences.
double gradient_growth(const SolutionField& u, const Domain& d);

struct LogFitOptions {
  TraceWindow window{4, 20};
  int max_probes = 8;          // boundary nodes probed (evenly spaced)
  double max_condition = 1e8;  // of the least-squares design [log t, 1]
};

struct LogProbe {
  BoundaryNode node;
  double slope_inside = 0, slope_outside = 0;
  double intercept_inside = 0, intercept_outside = 0;
  double c1q = 0;        // common log coefficient c1 q(x*): mean of the two slopes
  double c2 = 0;         // (intercept inside - intercept outside) / c1q
  double jump = 0;       // intercept inside - intercept outside
  double remainder = 0;  // RMS misfit over both sides
};

struct LogFit {
  bool valid = true;
  double condition = 0;
  std::vector<LogProbe> probes;
  std::vector<std::string> warnings;

  /// Worst |inside - outside| / max(|inside|, |outside|) over probes (0 when both vanish).
  double slope_mismatch() const;
};

/// Fits w against {log delta, 1} separately inside and outside along normals at boundary nodes.
LogFit log_singularity_fit(const WholeSpaceField& w, const SolutionField& u, const Domain& d,
                           const LogFitOptions& opts = {});

}  // namespace fraclap
