#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "pentaglue/gluing.hpp"

namespace pentaglue {

using Vec2 = Eigen::Vector2d;

/// Corner k of the canonical unit-side pentagon: corner 0 at the origin,
/// side 0 along +x, counterclockwise.
Vec2 pentagon_corner(int k);

/// Planar isometry x -> linear * x + offset; linear may be a reflection.
struct Placement {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Vec2 offset = Vec2::Zero();

  Vec2 apply(const Vec2& x) const { return linear * x + offset; }
  Vec2 corner(int k) const { return apply(pentagon_corner(k)); }
  bool reflects() const { return linear.determinant() < 0.0; }
  Placement then(const Placement& outer) const;
  Placement inverse() const;
};

/// Placement of the pentagon across side `exit` of a pentagon placed at
/// `from`, so that the shared side coincides and the two pentagons lie on
/// opposite sides of it.
Placement place_across(const Gluing& g, EdgeSlot exit, const Placement& from);

/// A sequence of pentagons laid flat, each attached to its predecessor
/// across a glued side.
struct UnfoldedChain {
  std::vector<int> faces;
  /// crossings[k] is the side of faces[k] shared with faces[k + 1].
  std::vector<int> crossings;
  std::vector<Placement> placements;
};

class UnfoldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unfolds along the given faces, crossing the lowest shared side between
/// consecutive entries. The first face gets the canonical placement.
UnfoldedChain unfold_chain(const Gluing& g, std::span<const int> faces);

/// Unfolds from `first` across the listed sides.
UnfoldedChain unfold_route(const Gluing& g, int first,
                           std::span<const int> crossings,
                           const Placement& start = {});

struct MetricOptions {
  /// Longest strip of pentagons explored before giving up.
  int max_strip = 64;
  /// Lengths within this are ties.
  double tie_tolerance = 1e-12;
  /// Relative slack of the open angular windows.
  double window_tolerance = 1e-12;
};

class GeodesicSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A shortest path between two cone points, realized as a straight segment
/// across an unfolded chain. The chain is placed with the source corner at
/// the origin.
struct Geodesic {
  int from = 0;
  int to = 0;
  double length = 0.0;
  CornerSlot source_corner;
  CornerSlot target_corner;
  UnfoldedChain chain;
  Vec2 target_image = Vec2::Zero();
  /// Angular coordinates of the path at its two ends, measured in the
  /// unrolled cone around each endpoint.
  double depart = 0.0;
  double arrive = 0.0;
  /// Other shortest paths of equal length leaving in a different direction.
  int ties = 0;
};

class GeodesicTable {
 public:
  GeodesicTable(std::vector<VertexClass> classes,
                std::vector<Geodesic> witnesses);

  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexClass>& classes() const { return classes_; }
  double distance(int i, int j) const;
  /// The stored shortest path between i and j (i != j), oriented i < j.
  const Geodesic& witness(int i, int j) const;
  /// Angular coordinate at v of the witness towards w.
  double direction(int v, int w) const;
  double cone_angle(int v) const { return classes_[v].cone_angle(); }
  /// Smaller of the two angles at v between the witnesses to i and j.
  double angle(int v, int i, int j) const;
  /// Angle swept at v from the witness to `from` to the witness to `to`, in
  /// the direction of increasing angular coordinate, in [0, cone).
  double directed_angle(int v, int from, int to) const;

 private:
  int pair_index(int i, int j) const;

  std::vector<VertexClass> classes_;
  std::vector<Geodesic> witnesses_;
};

/// Shortest path between the cone points with class indices a and b (as
/// returned by corner_classes). Throws GeodesicSearchError if the strip cap
/// is reached before the search is exhausted.
Geodesic geodesic_distance(const Gluing& g, int a, int b,
                           const MetricOptions& options = {});

GeodesicTable all_pairs_geodesics(const Gluing& g,
                                  const MetricOptions& options = {});

/// Angle at cone point v between two witnesses that both end at v, in
/// [0, cone / 2]. Throws std::invalid_argument otherwise.
double angle_between(const Gluing& g, int v, const Geodesic& p1,
                     const Geodesic& p2);

/// `dist i j value` lines, then `angle v i j value` lines.
void write_geodesic_table(std::ostream& out, const GeodesicTable& table);

}  // namespace pentaglue
