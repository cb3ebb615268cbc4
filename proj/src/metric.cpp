#include "pentaglue/metric.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <queue>
#include <string>

namespace pentaglue {

namespace {

constexpr double kInteriorAngle = 3.0 * std::numbers::pi / 5.0;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

Vec2 pentagon_centroid() {
  Vec2 c = Vec2::Zero();
  for (int k = 0; k < kSides; ++k) c += pentagon_corner(k);
  return c / kSides;
}

// Isometry taking a -> a2 and b -> b2 (|ab| = |a2 b2|), optionally composed
// with the reflection across line ab.
Placement segment_isometry(const Vec2& a, const Vec2& b, const Vec2& a2,
                           const Vec2& b2, bool reflect) {
  const Vec2 u = b - a;
  const Vec2 v = b2 - a2;
  const double angle = std::atan2(v.y(), v.x()) - std::atan2(u.y(), u.x());
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  Eigen::Matrix2d lin = rot;
  if (reflect) {
    const Vec2 w = u.normalized();
    const Eigen::Matrix2d mirror = 2.0 * w * w.transpose() - Eigen::Matrix2d::Identity();
    lin = rot * mirror;
  }
  Placement p;
  p.linear = lin;
  p.offset = a2 - lin * a;
  return p;
}

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0) r += period;
  return r;
}

struct CornerFrame {
  int cls = -1;
  double offset = 0.0;
  int orient = 1;
};

std::vector<CornerFrame> corner_frames(const std::vector<VertexClass>& classes,
                                       int pentagons) {
  std::vector<CornerFrame> frames(static_cast<std::size_t>(kSides * pentagons));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    for (std::size_t k = 0; k < cls.corners.size(); ++k) {
      const auto& c = cls.corners[k];
      frames[kSides * c.pentagon + c.corner] = {
          static_cast<int>(i), static_cast<double>(k) * kInteriorAngle,
          cls.orientations[k]};
    }
  }
  return frames;
}

// Angle of a direction inside the corner sector, measured from the side
// where the walk around the cone point enters the corner.
double angle_in_corner(int corner, int orient, const Vec2& d) {
  const Vec2 at = pentagon_corner(corner);
  double a;
  if (orient > 0) {
    const Vec2 e = pentagon_corner(corner + 1) - at;
    a = std::atan2(cross(e, d), e.dot(d));
  } else {
    const Vec2 e = pentagon_corner(corner + kSides - 1) - at;
    a = std::atan2(cross(d, e), d.dot(e));
  }
  return std::clamp(a, 0.0, kInteriorAngle);
}

bool strip_less(const Geodesic& a, const Geodesic& b) {
  if (a.chain.faces != b.chain.faces) return a.chain.faces < b.chain.faces;
  if (a.chain.crossings != b.chain.crossings) {
    return a.chain.crossings < b.chain.crossings;
  }
  if (a.source_corner != b.source_corner) return a.source_corner < b.source_corner;
  return a.target_corner < b.target_corner;
}

// Exhaustive search over unfolded strips leaving one cone point. Every
// straight segment from the source that stays inside the strip and avoids
// other cone points is a candidate; strips are abandoned once their exit
// side is farther than the worst current best length.
class SourceSearch {
 public:
  SourceSearch(const Gluing& g, const std::vector<VertexClass>& classes,
               int source, const MetricOptions& options)
      : g_(g),
        classes_(classes),
        source_(source),
        options_(options),
        frames_(corner_frames(classes, g.pentagons())),
        best_(classes.size()),
        found_(classes.size(), false),
        upper_(edge_path_bounds()) {}

  std::vector<Geodesic> run() {
    for (const auto& corner : classes_[source_].corners) start_from(corner);
    for (std::size_t w = 0; w < classes_.size(); ++w) {
      if (static_cast<int>(w) != source_ && !found_[w]) {
        throw GeodesicSearchError("no shortest path found from cone point " +
                                  std::to_string(source_) + " to " +
                                  std::to_string(w));
      }
    }
    return best_;
  }

 private:
  // Dijkstra over pentagon sides and diagonals; an upper bound for pruning.
  std::vector<double> edge_path_bounds() const {
    const int n = g_.pentagons();
    const auto class_of = corner_class_index(classes_, n);
    const int count = static_cast<int>(classes_.size());
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::vector<std::pair<int, double>>> adj(count);
    for (int p = 0; p < n; ++p) {
      for (int i = 0; i < kSides; ++i) {
        for (int j = i + 1; j < kSides; ++j) {
          const int a = class_of[kSides * p + i];
          const int b = class_of[kSides * p + j];
          const double w = (j - i == 1 || j - i == 4) ? 1.0 : phi;
          adj[a].push_back({b, w});
          adj[b].push_back({a, w});
        }
      }
    }
    std::vector<double> dist(count, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source_] = 0.0;
    queue.push({0.0, source_});
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d > dist[v]) continue;
      for (const auto& [w, len] : adj[v]) {
        if (d + len < dist[w]) {
          dist[w] = d + len;
          queue.push({dist[w], w});
        }
      }
    }
    return dist;
  }

  double bound() const {
    double worst = 0.0;
    for (std::size_t w = 0; w < classes_.size(); ++w) {
      if (static_cast<int>(w) == source_) continue;
      worst = std::max(worst, found_[w] ? best_[w].length : upper_[w]);
    }
    return worst;
  }

  bool inside(const Vec2& x, const Vec2& right, const Vec2& left) const {
    const double tol = options_.window_tolerance * x.norm();
    return cross(right, x) > tol * right.norm() &&
           cross(x, left) > tol * left.norm();
  }

  void start_from(CornerSlot corner) {
    const int p = corner.pentagon;
    const int c = corner.corner;
    Placement place;
    place.offset = -pentagon_corner(c);
    source_corner_ = corner;
    faces_ = {p};
    crossings_.clear();
    placements_ = {place};

    for (int k = 0; k < kSides; ++k) {
      if (k != c) consider(k, place.corner(k));
    }
    const Vec2 right = place.corner(c + 1);
    const Vec2 left = place.corner(c + kSides - 1);
    for (int s = 0; s < kSides; ++s) {
      if (s == c || s == (c + kSides - 1) % kSides) continue;
      explore_exit(s, right, left, 1);
    }
  }

  void explore_exit(int side, const Vec2& right, const Vec2& left, int depth) {
    const Placement& place = placements_.back();
    Vec2 a = place.corner(side);
    Vec2 b = place.corner(side + 1);
    const double turn = cross(a, b);
    if (std::abs(turn) <= options_.window_tolerance * a.norm() * b.norm()) return;
    if (turn < 0) std::swap(a, b);
    const Vec2 r = cross(right, a) > 0 ? a : right;
    const Vec2 l = cross(b, left) > 0 ? b : left;
    if (cross(r, l) <= options_.window_tolerance * r.norm() * l.norm()) return;

    // Closest approach of the side segment to the source.
    const Vec2 ab = b - a;
    const double t = std::clamp(-a.dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    const double reach = (a + t * ab).norm();
    if (reach >= bound() + options_.tie_tolerance) return;

    if (depth >= options_.max_strip) {
      throw GeodesicSearchError(
          "strip cap of " + std::to_string(options_.max_strip) +
          " pentagons reached from cone point " + std::to_string(source_));
    }

    const EdgeSlot exit{faces_.back(), side};
    const EdgeSlot entry = *g_.partner(exit);
    faces_.push_back(entry.pentagon);
    crossings_.push_back(side);
    placements_.push_back(place_across(g_, exit, place));

    const Placement& here = placements_.back();
    for (int k = 0; k < kSides; ++k) {
      if (k == entry.side || k == (entry.side + 1) % kSides) continue;
      const Vec2 x = here.corner(k);
      if (inside(x, r, l)) consider(k, x);
    }
    for (int s = 0; s < kSides; ++s) {
      if (s != entry.side) explore_exit(s, r, l, depth + 1);
    }

    faces_.pop_back();
    crossings_.pop_back();
    placements_.pop_back();
  }

  void consider(int corner, const Vec2& image) {
    const CornerSlot target{faces_.back(), corner};
    const auto& frame = frames_[kSides * target.pentagon + target.corner];
    const int w = frame.cls;
    if (w == source_) return;
    const double length = image.norm();
    if (found_[w] && length > best_[w].length + options_.tie_tolerance) return;

    Geodesic cand;
    cand.from = source_;
    cand.to = w;
    cand.length = length;
    cand.source_corner = source_corner_;
    cand.target_corner = target;
    cand.chain = {faces_, crossings_, placements_};
    cand.target_image = image;

    const auto& sframe =
        frames_[kSides * source_corner_.pentagon + source_corner_.corner];
    cand.depart = sframe.offset +
                  angle_in_corner(source_corner_.corner, sframe.orient, image);
    const Vec2 back = placements_.back().linear.transpose() * (-image);
    cand.arrive = frame.offset + angle_in_corner(corner, frame.orient, back);

    if (!found_[w] || length < best_[w].length - options_.tie_tolerance) {
      best_[w] = std::move(cand);
      found_[w] = true;
      return;
    }
    // Equal length: count it as a tie if it leaves in another direction.
    Geodesic& cur = best_[w];
    const double cone = classes_[source_].cone_angle();
    const double gap = wrap(cand.depart - cur.depart, cone);
    const bool distinct = std::min(gap, cone - gap) > 1e-9;
    if (strip_less(cand, cur)) {
      const int ties = cur.ties + (distinct ? 1 : 0);
      cur = std::move(cand);
      cur.ties = ties;
    } else if (distinct) {
      ++cur.ties;
    }
  }

  const Gluing& g_;
  const std::vector<VertexClass>& classes_;
  int source_;
  MetricOptions options_;
  std::vector<CornerFrame> frames_;
  std::vector<Geodesic> best_;
  std::vector<bool> found_;
  std::vector<double> upper_;

  CornerSlot source_corner_;
  std::vector<int> faces_;
  std::vector<int> crossings_;
  std::vector<Placement> placements_;
};

void require_valid(const Gluing& g) {
  const auto check = check_alexandrov(g);
  if (!check) {
    throw GluingError("gluing fails Alexandrov's conditions (" +
                      to_string(*check.failure) + "): " + check.reason);
  }
}

}  // namespace

Vec2 pentagon_corner(int k) {
  k = ((k % kSides) + kSides) % kSides;
  Vec2 p = Vec2::Zero();
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * i / kSides;
    p += Vec2(std::cos(a), std::sin(a));
  }
  return p;
}

Placement Placement::then(const Placement& outer) const {
  Placement p;
  p.linear = outer.linear * linear;
  p.offset = outer.linear * offset + outer.offset;
  return p;
}

Placement Placement::inverse() const {
  Placement p;
  p.linear = linear.inverse();
  p.offset = -(p.linear * offset);
  return p;
}

Placement place_across(const Gluing& g, EdgeSlot exit, const Placement& from) {
  const auto other = g.partner(exit);
  if (!other) {
    throw UnfoldError("side " + std::to_string(exit.pentagon) + "." +
                      std::to_string(exit.side) + " is not glued");
  }
  const Vec2 a2 = from.corner(exit.side);
  const Vec2 b2 = from.corner(exit.side + 1);
  Vec2 a = pentagon_corner(other->side);
  Vec2 b = pentagon_corner(other->side + 1);
  if (g.orientation(exit) == Orientation::flip) std::swap(a, b);

  const Vec2 here = from.apply(pentagon_centroid());
  const Vec2 dir = b2 - a2;
  for (const bool reflect : {false, true}) {
    const Placement p = segment_isometry(a, b, a2, b2, reflect);
    const Vec2 there = p.apply(pentagon_centroid());
    if (cross(dir, there - a2) * cross(dir, here - a2) < 0) return p;
  }
  throw UnfoldError("could not place pentagon across side");
}

UnfoldedChain unfold_route(const Gluing& g, int first,
                           std::span<const int> crossings,
                           const Placement& start) {
  if (first < 0 || first >= g.pentagons()) {
    throw UnfoldError("face " + std::to_string(first) + " out of range");
  }
  UnfoldedChain chain;
  chain.faces = {first};
  chain.placements = {start};
  for (const int side : crossings) {
    const EdgeSlot exit{chain.faces.back(), side};
    const auto other = g.partner(exit);
    if (!other) throw UnfoldError("side is not glued");
    chain.placements.push_back(place_across(g, exit, chain.placements.back()));
    chain.crossings.push_back(side);
    chain.faces.push_back(other->pentagon);
  }
  return chain;
}

UnfoldedChain unfold_chain(const Gluing& g, std::span<const int> faces) {
  if (faces.empty()) throw UnfoldError("empty chain");
  std::vector<int> crossings;
  for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
    int found = -1;
    for (int s = 0; s < kSides && found < 0; ++s) {
      const auto other = g.partner({faces[k], s});
      if (other && other->pentagon == faces[k + 1]) found = s;
    }
    if (found < 0) {
      throw UnfoldError("faces at chain positions " + std::to_string(k) +
                        " and " + std::to_string(k + 1) +
                        " share no glued side");
    }
    crossings.push_back(found);
  }
  return unfold_route(g, faces.front(), crossings);
}

GeodesicTable::GeodesicTable(std::vector<VertexClass> classes,
                             std::vector<Geodesic> witnesses)
    : classes_(std::move(classes)), witnesses_(std::move(witnesses)) {}

int GeodesicTable::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  const int n = size();
  // Row-major upper triangle without the diagonal.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

double GeodesicTable::distance(int i, int j) const {
  if (i == j) return 0.0;
  return witnesses_[pair_index(i, j)].length;
}

const Geodesic& GeodesicTable::witness(int i, int j) const {
  if (i == j) throw std::invalid_argument("no witness from a point to itself");
  return witnesses_[pair_index(i, j)];
}

double GeodesicTable::direction(int v, int w) const {
  const Geodesic& p = witness(v, w);
  return p.from == v ? p.depart : p.arrive;
}

double GeodesicTable::angle(int v, int i, int j) const {
  if (i == j) return 0.0;
  const double cone = cone_angle(v);
  const double gap = wrap(direction(v, j) - direction(v, i), cone);
  return std::min(gap, cone - gap);
}

double GeodesicTable::directed_angle(int v, int from, int to) const {
  return wrap(direction(v, to) - direction(v, from), cone_angle(v));
}

Geodesic geodesic_distance(const Gluing& g, int a, int b,
                           const MetricOptions& options) {
  require_valid(g);
  const auto classes = corner_classes(g);
  const int count = static_cast<int>(classes.size());
  if (a < 0 || a >= count || b < 0 || b >= count) {
    throw std::out_of_range("cone point index out of range");
  }
  if (a == b) {
    Geodesic self;
    self.from = self.to = a;
    self.source_corner = self.target_corner = classes[a].corners.front();
    return self;
  }
  auto paths = SourceSearch(g, classes, a, options).run();
  return paths[b];
}

GeodesicTable all_pairs_geodesics(const Gluing& g, const MetricOptions& options) {
  require_valid(g);
  auto classes = corner_classes(g);
  const int count = static_cast<int>(classes.size());
  std::vector<Geodesic> witnesses;
  witnesses.reserve(static_cast<std::size_t>(count * (count - 1) / 2));
  for (int a = 0; a < count; ++a) {
    auto paths = SourceSearch(g, classes, a, options).run();
    for (int b = a + 1; b < count; ++b) witnesses.push_back(std::move(paths[b]));
  }
  return GeodesicTable(std::move(classes), std::move(witnesses));
}

double angle_between(const Gluing& g, int v, const Geodesic& p1,
                     const Geodesic& p2) {
  const auto classes = corner_classes(g);
  if (v < 0 || v >= static_cast<int>(classes.size())) {
    throw std::out_of_range("cone point index out of range");
  }
  auto end_at = [v](const Geodesic& p) {
    if (p.from == v) return p.depart;
    if (p.to == v) return p.arrive;
    throw std::invalid_argument("witness does not start at cone point " +
                                std::to_string(v));
  };
  const double cone = classes[v].cone_angle();
  const double gap = wrap(end_at(p2) - end_at(p1), cone);
  return std::min(gap, cone - gap);
}

void write_geodesic_table(std::ostream& out, const GeodesicTable& table) {
  const auto old = out.precision(17);
  const int n = table.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out << "dist " << i << ' ' << j << ' ' << table.distance(i, j) << '\n';
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (i == v || j == v) continue;
        out << "angle " << v << ' ' << i << ' ' << j << ' '
            << table.angle(v, i, j) << '\n';
      }
    }
  }
  out.precision(old);
}

}  // namespace pentaglue
