#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "pentaglue/certify.hpp"

namespace pentaglue {

namespace {

std::string pair_name(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

struct FitPlane {
  Vec3 centroid;
  Vec3 normal;
};

FitPlane best_fit(const std::vector<Vec3>& points) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : points) cov += (p - c) * (p - c).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  return {c, solver.eigenvectors().col(0)};
}

double max_deviation(const std::vector<Vec3>& points) {
  const auto fit = best_fit(points);
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, std::abs(fit.normal.dot(p - fit.centroid)));
  }
  return worst;
}

// True if some plane (or line, for planar sets) through v and other input
// points has every point on one side within tol.
bool on_hull(const std::vector<Vec3>& pts, int v, bool flat,
             const Vec3& flat_normal, double tol) {
  const int n = static_cast<int>(pts.size());
  auto one_side = [&](const Vec3& normal, const Vec3& at) {
    bool below = true, above = true;
    for (int k = 0; k < n; ++k) {
      const double d = normal.dot(pts[k] - at);
      below = below && d <= tol;
      above = above && d >= -tol;
    }
    return below || above;
  };
  for (int j = 0; j < n; ++j) {
    if (j == v) continue;
    if (flat) {
      const Vec3 dir = pts[j] - pts[v];
      if (dir.norm() <= tol) continue;
      if (one_side(flat_normal.cross(dir).normalized(), pts[v])) return true;
      continue;
    }
    for (int k = j + 1; k < n; ++k) {
      if (k == v) continue;
      const Vec3 normal = (pts[j] - pts[v]).cross(pts[k] - pts[v]);
      if (normal.norm() <= 1e-12) continue;
      if (one_side(normal.normalized(), pts[v])) return true;
    }
  }
  return false;
}

Vec3 newell_normal(const std::vector<Vec3>& pts, const std::vector<int>& face) {
  Vec3 n = Vec3::Zero();
  for (std::size_t k = 0; k < face.size(); ++k) {
    const Vec3& a = pts[face[k]];
    const Vec3& b = pts[face[(k + 1) % face.size()]];
    n += a.cross(b);
  }
  return n;
}

}  // namespace

Embedding::Embedding(std::vector<Vec3> vertices, std::vector<EdgePair> edges,
                     std::vector<std::vector<int>> faces, double convex_tol)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)) {
  const int n = vertex_count();
  if (n < 3) throw EmbeddingError("embedding needs at least 3 vertices");
  for (const auto& p : vertices_) {
    if (!p.allFinite()) throw EmbeddingError("vertex coordinate is not finite");
  }

  std::map<EdgePair, int> index;
  degrees_.assign(n, 0);
  for (auto& e : edges_) {
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) {
      throw EmbeddingError("edge " + pair_name(e[0], e[1]) +
                           " refers to a missing vertex");
    }
    if (e[0] == e[1]) throw EmbeddingError("edge " + pair_name(e[0], e[1]) + " is a loop");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (!index.emplace(e, static_cast<int>(index.size())).second) {
      throw EmbeddingError("edge " + pair_name(e[0], e[1]) + " listed twice");
    }
    ++degrees_[e[0]];
    ++degrees_[e[1]];
  }

  edge_faces_.assign(edges_.size(), {-1, -1});
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& face = faces_[f];
    if (face.size() < 3) throw EmbeddingError("face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) {
      throw EmbeddingError("face " + std::to_string(f) + " repeats a vertex");
    }
    for (std::size_t k = 0; k < face.size(); ++k) {
      int a = face[k], b = face[(k + 1) % face.size()];
      if (a < 0 || a >= n) {
        throw EmbeddingError("face " + std::to_string(f) + " refers to a missing vertex");
      }
      if (a > b) std::swap(a, b);
      const auto it = index.find({a, b});
      if (it == index.end()) {
        throw EmbeddingError("face " + std::to_string(f) + " uses " +
                             pair_name(a, b) + ", which is not an edge");
      }
      auto& slots = edge_faces_[it->second];
      if (slots[0] < 0) {
        slots[0] = static_cast<int>(f);
      } else if (slots[1] < 0) {
        slots[1] = static_cast<int>(f);
      } else {
        throw EmbeddingError("edge " + pair_name(a, b) + " lies in more than two faces");
      }
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edge_faces_[e][1] < 0) {
      throw EmbeddingError("edge " + pair_name(edges_[e][0], edges_[e][1]) +
                           " does not lie in two faces");
    }
  }
  if (n - edge_count() + face_count() != 2) {
    throw EmbeddingError("V - E + F = " +
                         std::to_string(n - edge_count() + face_count()) +
                         ", expected 2");
  }

  const auto fit = best_fit(vertices_);
  flat_ = max_deviation(vertices_) <= convex_tol;
  for (int v = 0; v < n; ++v) {
    if (!on_hull(vertices_, v, flat_, fit.normal, convex_tol)) {
      throw EmbeddingError("vertex " + std::to_string(v) +
                           " is not in convex position");
    }
  }

  if (!flat_) {
    for (auto& face : faces_) {
      Vec3 c = Vec3::Zero();
      for (const int v : face) c += vertices_[v];
      c /= static_cast<double>(face.size());
      if (newell_normal(vertices_, face).dot(c - fit.centroid) < 0) {
        std::reverse(face.begin() + 1, face.end());
      }
    }
  }
}

int Embedding::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

double Embedding::edge_length(int e) const {
  return (vertices_[edges_[e][0]] - vertices_[edges_[e][1]]).norm();
}

double Embedding::longest_edge() const {
  double longest = 0.0;
  for (int e = 0; e < edge_count(); ++e) longest = std::max(longest, edge_length(e));
  return longest;
}

std::optional<int> Embedding::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e][0] == a && edges_[e][1] == b) return e;
  }
  return std::nullopt;
}

bool verify_face_planarity(const Embedding& emb, std::span<const int> face,
                           double tol) {
  if (face.size() < 3) throw std::invalid_argument("face needs 3 vertices");
  std::vector<Vec3> pts;
  for (const int v : face) pts.push_back(emb.vertex(v));
  return max_deviation(pts) <= tol;
}

bool verify_parallelogram(const Embedding& emb, std::span<const int> quad,
                          double tol) {
  if (quad.size() != 4) throw std::invalid_argument("parallelogram test needs 4 vertices");
  const Vec3& a = emb.vertex(quad[0]);
  const Vec3& b = emb.vertex(quad[1]);
  const Vec3& c = emb.vertex(quad[2]);
  const Vec3& d = emb.vertex(quad[3]);
  return ((b - a) - (c - d)).norm() <= tol && ((d - a) - (c - b)).norm() <= tol;
}

bool verify_mirror_symmetry(const Embedding& emb, const Plane& plane,
                            double tol) {
  const int n = emb.vertex_count();
  const Vec3 unit = plane.normal.normalized();
  const double offset = plane.offset / plane.normal.norm();
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  for (int v = 0; v < n; ++v) {
    const Vec3& p = emb.vertex(v);
    const Vec3 q = p - 2.0 * (unit.dot(p) - offset) * unit;
    for (int w = 0; w < n; ++w) {
      if ((emb.vertex(w) - q).norm() <= tol) {
        if (image[v] >= 0 || taken[w]) return false;
        image[v] = w;
        taken[w] = true;
      }
    }
    if (image[v] < 0) return false;
  }
  for (const auto& e : emb.edges()) {
    if (!emb.find_edge(image[e[0]], image[e[1]])) return false;
  }
  return true;
}

Plane plane_through(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = (b - a).cross(c - a);
  if (n.norm() <= 1e-14 * (b - a).norm() * (c - a).norm() || n.norm() == 0.0) {
    throw DegenerateError("points are collinear");
  }
  Plane p;
  p.normal = n.normalized();
  p.offset = p.normal.dot(a);
  return p;
}

Plane fit_plane(std::span<const Vec3> points) {
  if (points.size() < 3) throw DegenerateError("need at least 3 points for a plane");
  const auto fit = best_fit(std::vector<Vec3>(points.begin(), points.end()));
  Plane p;
  p.normal = fit.normal;
  p.offset = p.normal.dot(fit.centroid);
  return p;
}

}  // namespace pentaglue
