#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace fraclap {

/// Points live in the plane; one-dimensional problems use the first coordinate only.
using Point = Eigen::Vector2d;

enum class DomainKind { Interval, Disk, PolarStar };

struct BoundaryNode {
  Point z;
  Point normal;      // outward, unit length
  double weight;     // surface measure (1 per interval endpoint)
  double parameter;  // boundary parameter (angle, or 0/1 for interval ends)
};

struct Projection {
  double distance;
  Point nearest;
  double parameter;
};

/// Description accepted by make_domain.
struct DomainSpec {
  DomainKind kind = DomainKind::Interval;
  double a = -1.0, b = 1.0;         // interval
  double radius = 1.0;              // disk
  std::vector<double> cos_coeffs;   // polar-star: r = c0 + sum ck cos(k t) + sk sin(k t)
  std::vector<double> sin_coeffs;   // sin_coeffs[0] is ignored
  Point center = Point::Zero();
  int boundary_nodes = 256;
};

/// Crossing of a segment with the boundary at p0 + t (p1 - p0).
struct Crossing {
  double t;
  bool entering;  // true when the segment enters the domain at t
};

class Domain {
 public:
  DomainKind kind() const { return kind_; }
  int dim() const { return kind_ == DomainKind::Interval ? 1 : 2; }
  const std::vector<BoundaryNode>& boundary() const { return nodes_; }
  double boundary_measure() const;
  Point centroid() const { return center_; }
  const DomainSpec& spec() const { return spec_; }

  /// Half-width of the smallest origin-centred box containing the closure.
  double extent() const;
  /// Smallest distance from the centre to the boundary.
  double inner_radius() const { return r_min_; }

  bool contains(const Point& x) const;
  Projection project(const Point& x) const;
  /// Positive inside, negative outside.
  double signed_distance(const Point& x) const;

  /// Smooth function, positive inside, zero on the boundary, |grad| = 1 there for
  /// intervals and disks. Used as the weight b^s of the boundary-aware basis.
  double defining_function(const Point& x) const;
  Point defining_gradient(const Point& x) const;

  /// Boundary crossings of the closed segment [p0, p1], sorted by t in [0, 1].
  std::vector<Crossing> segment_crossings(const Point& p0, const Point& p1) const;

  /// Boundary radius along angle theta about the centre (disk and polar-star).
  double boundary_radius(double theta) const;

  Domain translated(const Point& shift) const;

  /// Canonical text description; equal domains give equal strings.
  std::string describe() const;
  std::uint64_t hash() const;

 private:
  friend Domain make_domain(const DomainSpec& spec);
  Domain() = default;

  void radius_derivatives(double theta, double& r, double& dr, double& ddr) const;
  Projection project_polar(const Point& x) const;
  double polar_blend_radius(double rho, double theta, double* d_rho, double* d_theta) const;

  DomainKind kind_ = DomainKind::Interval;
  DomainSpec spec_;
  Point center_ = Point::Zero();
  std::vector<BoundaryNode> nodes_;
  double r_min_ = 0.0, r_max_ = 0.0;
  std::vector<double> table_theta_;  // dense seeds for projection
  std::vector<Point> table_z_;
};

/// Validates the description and builds the boundary quadrature.
/// Throws std::invalid_argument on a degenerate interval, non-positive radius
/// or a radius function that is not strictly positive.
Domain make_domain(const DomainSpec& spec);

Domain make_interval(double a, double b);
Domain make_disk(double radius, const Point& center = Point::Zero(), int boundary_nodes = 256);
Domain make_polar_star(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs,
                       const Point& center = Point::Zero(), int boundary_nodes = 256);

/// min over boundary nodes of (z - origin) . nu.
double star_shapedness_margin(const Domain& d, const Point& origin = Point::Zero());

/// delta(x) = dist(x, boundary) and the nearest boundary point.
Projection distance_and_projection(const Domain& d, const Point& x);

/// Callable view of the distance function of a domain.
class DistanceField {
 public:
  explicit DistanceField(const Domain& d) : d_(&d) {}
  double operator()(const Point& x) const { return d_->project(x).distance; }
  Point nearest(const Point& x) const { return d_->project(x).nearest; }

 private:
  const Domain* d_;
};

}  // namespace fraclap
