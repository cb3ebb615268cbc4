#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "pentaglue/metric.hpp"

namespace testing {

using namespace pentaglue;

// Shortest straight segment between cone points over every unfolding of at
// most `depth` crossings, found by brute force: a candidate is valid when it
// passes through the interior of each crossed side. Returns a distance
// matrix over corner classes.
class UnfoldingOracle {
 public:
  UnfoldingOracle(const Gluing& g, int depth)
      : g_(g),
        depth_(depth),
        classes_(corner_classes(g)),
        index_(corner_class_index(classes_, g.pentagons())) {
    const int v = static_cast<int>(classes_.size());
    dist_.assign(v, std::vector<double>(v, std::numeric_limits<double>::infinity()));
    for (int a = 0; a < v; ++a) {
      dist_[a][a] = 0.0;
      for (const auto& c : classes_[a].corners) {
        source_ = a;
        Placement start;
        origin_ = start.corner(c.corner);
        faces_ = {c.pentagon};
        placements_ = {start};
        sides_.clear();
        visit();
      }
    }
  }

  double distance(int a, int b) const { return dist_[a][b]; }
  int size() const { return static_cast<int>(classes_.size()); }

 private:
  static double cross(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
  }

  // Segment origin->t meets the open side [a, b] at an interior point.
  static bool crosses(const Vec2& o, const Vec2& t, const Vec2& a, const Vec2& b) {
    const Vec2 r = t - o;
    const Vec2 s = b - a;
    const double denom = cross(r, s);
    if (std::abs(denom) < 1e-14) return false;
    const Vec2 d = a - o;
    const double u = cross(d, r) / denom;
    const double w = cross(d, s) / denom;
    return u > 1e-9 && u < 1 - 1e-9 && w > 1e-12 && w <= 1 + 1e-12;
  }

  void visit() {
    const Placement here = placements_.back();
    for (int k = 0; k < kSides; ++k) {
      const int target = index_[kSides * faces_.back() + k];
      if (target == source_) continue;
      const Vec2 t = here.corner(k);
      bool ok = true;
      for (std::size_t m = 0; m < sides_.size() && ok; ++m) {
        ok = crosses(origin_, t, placements_[m].corner(sides_[m]),
                     placements_[m].corner(sides_[m] + 1));
      }
      if (ok) dist_[source_][target] = std::min(dist_[source_][target], (t - origin_).norm());
    }
    if (static_cast<int>(sides_.size()) == depth_) return;
    for (int s = 0; s < kSides; ++s) {
      const EdgeSlot exit{faces_.back(), s};
      const EdgeSlot other = *g_.partner(exit);
      if (!sides_.empty()) {
        const EdgeSlot entered = *g_.partner({faces_[faces_.size() - 2], sides_.back()});
        if (entered == exit) continue;
      }
      faces_.push_back(other.pentagon);
      placements_.push_back(place_across(g_, exit, here));
      sides_.push_back(s);
      visit();
      sides_.pop_back();
      placements_.pop_back();
      faces_.pop_back();
    }
  }

  const Gluing& g_;
  int depth_;
  std::vector<VertexClass> classes_;
  std::vector<int> index_;
  std::vector<std::vector<double>> dist_;
  int source_ = 0;
  Vec2 origin_;
  std::vector<int> faces_;
  std::vector<Placement> placements_;
  std::vector<int> sides_;
};

}  // namespace testing
