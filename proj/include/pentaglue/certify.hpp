#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaglue/gluing.hpp"
#include "pentaglue/metric.hpp"

namespace pentaglue {

using Vec3 = Eigen::Vector3d;
using EdgePair = std::array<int, 2>;

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Approximate convex polyhedron: vertex i corresponds to cone point i.
/// Construction validates the structure and orients faces outward.
class Embedding {
 public:
  /// Edges are stored as (low, high) in the order given. Throws
  /// EmbeddingError on any structural or convexity violation.
  Embedding(std::vector<Vec3> vertices, std::vector<EdgePair> edges,
            std::vector<std::vector<int>> faces, double convex_tol = 1e-9);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<EdgePair>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const Vec3& vertex(int i) const { return vertices_[i]; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int degree(int v) const { return degrees_[v]; }
  std::vector<int> degrees() const { return degrees_; }
  int max_degree() const;
  double longest_edge() const;
  double edge_length(int e) const;
  /// Index of edge {a, b}, if present.
  std::optional<int> find_edge(int a, int b) const;
  /// The two faces containing edge e.
  std::array<int, 2> edge_faces(int e) const { return edge_faces_[e]; }
  /// True if all vertices lie on one plane.
  bool flat() const { return flat_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<EdgePair> edges_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> degrees_;
  std::vector<std::array<int, 2>> edge_faces_;
  bool flat_ = false;
};

/// Plane {x : normal . x = offset}; points with negative signed distance are
/// below it.
struct Plane {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;

  double signed_distance(const Vec3& x) const { return normal.dot(x) - offset; }
};

/// Line {x : normal . x = offset} in the plane.
struct Line2 {
  Vec2 normal = Vec2::UnitY();
  double offset = 0.0;

  double signed_distance(const Vec2& x) const { return normal.dot(x) - offset; }
};

class CertifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class InfeasibleError : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

/// Raised when D * gamma >= pi / 2.
class PreconditionError : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

struct EdgeDiscrepancy {
  int a = 0;
  int b = 0;
  double length = 0.0;
  double geodesic = 0.0;
  double value = 0.0;
};

/// Facial angle at `vertex` between its face neighbours `prev` and `next`.
struct AngleDiscrepancy {
  int face = 0;
  int vertex = 0;
  int prev = 0;
  int next = 0;
  double facial = 0.0;
  double surface = 0.0;
  double value = 0.0;
};

struct DiscrepancyReport {
  double mu = 0.0;
  double gamma = 0.0;
  std::vector<EdgeDiscrepancy> per_edge;
  std::vector<AngleDiscrepancy> per_angle;
};

/// Compares edge lengths with geodesic distances and facial angles with
/// surface angles. A mirror image of the embedding is equally valid, so
/// surface angles are read in whichever rotational sense fits better.
DiscrepancyReport measure_discrepancies(const Embedding& emb,
                                        const GeodesicTable& table);

/// r = E^2 L 2 sin(D gamma / 2) + E mu. Throws PreconditionError unless
/// D gamma < pi / 2, std::invalid_argument on negative inputs.
double displacement_radius(int edges, double length, int degree, double gamma,
                           double mu);

/// 2 l sin(theta / 2) + eps.
double segment_displacement_bound(double l, double eps, double theta);

/// Common tangent of the radius-rho disks at c1 and c2 that passes above the
/// first and below the second. "Above" is the side of the normal, which is
/// chosen to point to the left of c1 -> c2. Throws DegenerateError if the
/// disks are not disjoint (|c1 c2| <= 2 rho).
Line2 lowest_tangent_line(const Vec2& c1, const Vec2& c2, double rho);

/// True if u lies past c2 (seen from c1) and strictly below the lowest
/// tangent line; then no line meets both disks and passes through u.
bool no_transversal_line(const Vec2& c1, const Vec2& c2, double rho,
                         const Vec2& u);

/// Which side of the plane a ball must lie on.
enum class BallSide { above, below };

/// Plane tangent to the three radius-r balls, with ball k on the given side
/// (signed distance +r for above, -r for below). Among the two solutions the
/// one whose normal has positive component along `up` is returned; `up`
/// defaults to (c2 - c1) x (c3 - c1).
Plane tangent_plane(const Vec3& c1, const Vec3& c2, const Vec3& c3, double r,
                    const std::array<BallSide, 3>& sides,
                    const std::optional<Vec3>& up = std::nullopt);

enum class EdgeStatus { certified, inconclusive };

std::string to_string(EdgeStatus s);

struct CertifyAttempt {
  int a = 0;
  int b = 0;
  /// Smallest clearance of u_b below the three planes; NaN if the planes
  /// could not be built.
  double clearance = 0.0;
  std::string reason;
};

struct EdgeCertificate {
  int i = 0;
  int j = 0;
  EdgeStatus status = EdgeStatus::inconclusive;
  /// Best clearance over all attempts.
  double clearance = 0.0;
  std::string reason;
  std::vector<CertifyAttempt> attempts;
};

struct CertifyOptions {
  /// Clearance must exceed r by more than this.
  double clearance_margin = 1e-12;
  MetricOptions metric;
};

/// Tangent-plane test for edge (i, j) with displacement radius r.
EdgeCertificate certify_edge(const Embedding& emb, int i, int j, double r,
                             const CertifyOptions& options = {});

struct Certificate {
  double mu = 0.0;
  double gamma = 0.0;
  double r = 0.0;
  /// Empty unless the whole run was inconclusive (e.g. D gamma >= pi / 2).
  std::string reason;
  DiscrepancyReport discrepancies;
  std::vector<EdgeCertificate> edges;

  bool all_certified() const;
  int certified_count() const;
};

/// Metric, discrepancies, radius and per-edge tests, in edge order.
Certificate certify_all(const Gluing& g, const Embedding& emb,
                        const CertifyOptions& options = {});
Certificate certify_all(const GeodesicTable& table, const Embedding& emb,
                        const CertifyOptions& options = {});

/// `mu .. gamma .. r ..` header, then one `edge` line per edge.
void write_certificate(std::ostream& out, const Certificate& cert);

/// Max distance of the face's vertices from their best-fit plane <= tol.
bool verify_face_planarity(const Embedding& emb, std::span<const int> face,
                           double tol);

/// Opposite sides of quad (a, b, c, d) are equal vectors within tol.
bool verify_parallelogram(const Embedding& emb, std::span<const int> quad,
                          double tol);

/// Reflection through the plane permutes the vertices (within tol) and
/// maps edges to edges.
bool verify_mirror_symmetry(const Embedding& emb, const Plane& plane,
                            double tol);

/// Plane through three points, normalized.
Plane plane_through(const Vec3& a, const Vec3& b, const Vec3& c);

/// Least-squares plane through the points.
Plane fit_plane(std::span<const Vec3> points);

}  // namespace pentaglue
