#pragma once

#include "fraclap/pohozaev.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclap {

/// Invalid configuration; the message names the field and, when known, the line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitNonConvergence = 2, kExitTolerance = 3 };

/// Resolved run description. Sections and keys of the text format:
///   [domain]          kind = interval | disk | polar; a, b; radius; center = x y;
///                     cos = c0 c1 ...; sin = 0 s1 ...; boundary_nodes
///   [discretization]  cells or h; half_width; scheme = weighted | uniform; pad;
///                     max_unknowns; cache_dir
///   [problem]         s; n (optional check); nonlinearity = constant | linear | power | table;
///                     value; knots = ...; values = ...
///   [solver]          max_iterations; tolerance; damping; seed = auto | zero | torsion
///   [verify]          pohozaev_tol; scaling_tol; logfit_tol; trace_k1; trace_k2;
///                     trace_fraction; lambdas = ...; angles; origin = x y
///   [scan]            p = ...; gap_range
///   [output]          dir
struct RunConfig {
  DomainSpec domain;
  int n = 1;
  double s = 0.5;
  int cells = 256;
  double half_width = 0;  // 0: domain extent
  Scheme scheme = Scheme::Weighted;
  int pad = 4;
  int max_unknowns = Discretization::kDefaultCap;
  std::string cache_dir;

  std::string nonlinearity = "constant";
  double value = 1.0;
  std::vector<double> knots, values;

  SolveOptions solver;
  std::string seed = "auto";

  double pohozaev_tol = 1e-3;
  double scaling_tol = 0.1;
  double logfit_tol = 0.1;
  TraceWindow window;
  std::vector<double> lambdas;
  int angles = 32;
  std::optional<Point> origin;

  std::vector<double> p_grid;
  double gap_range = 10.0;

  std::string output_dir = "out";

  Nonlinearity make_nonlinearity() const;
  /// Canonical text of the resolved configuration in the input format.
  std::string resolved() const;
};

RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Each command writes its artifacts into config.output_dir and returns an ExitCode.
int cmd_solve(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_scan(const RunConfig& config, std::ostream& log);
int cmd_trace(const RunConfig& config, std::ostream& log);
int cmd_diagnostics(const RunConfig& config, std::ostream& log);

}  // namespace fraclap
