#include "pentaglue/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace pentaglue {

namespace {

double facial_angle(const Vec3& at, const Vec3& prev, const Vec3& next) {
  const Vec3 a = prev - at;
  const Vec3 b = next - at;
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double sign_of(BallSide s) { return s == BallSide::above ? 1.0 : -1.0; }

Vec3 centroid_of(const Embedding& emb) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : emb.vertices()) c += p;
  return c / emb.vertex_count();
}

}  // namespace

DiscrepancyReport measure_discrepancies(const Embedding& emb,
                                        const GeodesicTable& table) {
  auto require = [&](int a, int b) {
    if (a >= table.size() || b >= table.size()) {
      throw CertifyError("geodesic table has no entry for vertices " +
                         std::to_string(a) + " and " + std::to_string(b));
    }
  };

  DiscrepancyReport report;
  for (const auto& e : emb.edges()) {
    require(e[0], e[1]);
    EdgeDiscrepancy d;
    d.a = e[0];
    d.b = e[1];
    d.length = (emb.vertex(e[0]) - emb.vertex(e[1])).norm();
    d.geodesic = table.distance(e[0], e[1]);
    d.value = std::abs(d.length - d.geodesic);
    report.mu = std::max(report.mu, d.value);
    report.per_edge.push_back(d);
  }

  // Faces run counterclockwise seen from outside, so the interior at v
  // sweeps from `next` round to `prev` in that sense. sense[0] reads the
  // surface coordinate the same way, sense[1] the opposite way.
  std::array<std::vector<AngleDiscrepancy>, 2> sense;
  std::array<double, 2> worst{0.0, 0.0};
  for (int f = 0; f < emb.face_count(); ++f) {
    const auto& face = emb.faces()[f];
    const int k = static_cast<int>(face.size());
    for (int idx = 0; idx < k; ++idx) {
      AngleDiscrepancy d;
      d.face = f;
      d.vertex = face[idx];
      d.prev = face[(idx + k - 1) % k];
      d.next = face[(idx + 1) % k];
      d.facial = facial_angle(emb.vertex(d.vertex), emb.vertex(d.prev),
                              emb.vertex(d.next));
      for (int s = 0; s < 2; ++s) {
        AngleDiscrepancy e = d;
        e.surface = s == 0 ? table.directed_angle(d.vertex, d.next, d.prev)
                           : table.directed_angle(d.vertex, d.prev, d.next);
        e.value = std::abs(e.facial - e.surface);
        worst[s] = std::max(worst[s], e.value);
        sense[s].push_back(e);
      }
    }
  }
  const int pick = worst[1] < worst[0] ? 1 : 0;
  report.gamma = worst[pick];
  report.per_angle = std::move(sense[pick]);
  return report;
}

double displacement_radius(int edges, double length, int degree, double gamma,
                           double mu) {
  if (edges < 0 || degree < 0 || length < 0 || gamma < 0 || mu < 0) {
    throw std::invalid_argument("displacement radius inputs must be non-negative");
  }
  if (degree * gamma >= std::numbers::pi / 2) {
    throw PreconditionError("D * gamma = " + std::to_string(degree * gamma) +
                            " is not below pi/2");
  }
  const double e = edges;
  return e * e * length * 2.0 * std::sin(degree * gamma / 2.0) + e * mu;
}

double segment_displacement_bound(double l, double eps, double theta) {
  if (eps < 0 || theta < 0 || theta >= std::numbers::pi / 2) {
    throw std::invalid_argument("need eps >= 0 and 0 <= theta < pi/2");
  }
  return 2.0 * l * std::sin(theta / 2.0) + eps;
}

Line2 lowest_tangent_line(const Vec2& c1, const Vec2& c2, double rho) {
  if (rho < 0) throw std::invalid_argument("negative radius");
  const Vec2 d = c2 - c1;
  const double len = d.norm();
  if (len <= 2.0 * rho || len == 0.0) {
    throw DegenerateError("disks are not disjoint; no separating tangent");
  }
  const Vec2 u = d / len;
  const Vec2 left(-u.y(), u.x());
  const double c = 2.0 * rho / len;
  Line2 line;
  line.normal = c * u + std::sqrt(1.0 - c * c) * left;
  line.offset = line.normal.dot(c1) + rho;
  return line;
}

bool no_transversal_line(const Vec2& c1, const Vec2& c2, double rho,
                         const Vec2& u) {
  const Line2 line = lowest_tangent_line(c1, c2, rho);
  return (u - c2).dot(c2 - c1) > 0 && line.signed_distance(u) < 0;
}

Plane tangent_plane(const Vec3& c1, const Vec3& c2, const Vec3& c3, double r,
                    const std::array<BallSide, 3>& sides,
                    const std::optional<Vec3>& up) {
  const Vec3 d2 = c2 - c1;
  const Vec3 d3 = c3 - c1;
  const Vec3 w = d2.cross(d3);
  if (w.norm() <= 1e-12 * d2.norm() * d3.norm() || w.norm() == 0.0) {
    throw DegenerateError("ball centers are collinear");
  }
  const double s1 = sign_of(sides[0]);
  Eigen::Matrix<double, 2, 3> a;
  a.row(0) = d2.transpose();
  a.row(1) = d3.transpose();
  const Eigen::Vector2d rhs((sign_of(sides[1]) - s1) * r,
                            (sign_of(sides[2]) - s1) * r);
  // Minimum-norm solution of the two difference equations, then the unit
  // normal is completed along w.
  const Vec3 n0 = a.transpose() * (a * a.transpose()).ldlt().solve(rhs);
  const double rest = 1.0 - n0.squaredNorm();
  if (rest < 0) throw InfeasibleError("no plane is tangent to the three balls");
  const Vec3 wu = w.normalized();
  Vec3 n = n0 + std::sqrt(rest) * wu;
  if (n.dot(up.value_or(w)) < 0) n = n0 - std::sqrt(rest) * wu;
  Plane p;
  p.normal = n.normalized();
  p.offset = p.normal.dot(c1) - s1 * r;
  return p;
}

std::string to_string(EdgeStatus s) {
  return s == EdgeStatus::certified ? "CERTIFIED" : "INCONCLUSIVE";
}

EdgeCertificate certify_edge(const Embedding& emb, int i, int j, double r,
                             const CertifyOptions& options) {
  EdgeCertificate cert;
  cert.i = std::min(i, j);
  cert.j = std::max(i, j);
  cert.clearance = -std::numeric_limits<double>::infinity();
  const auto e = emb.find_edge(i, j);
  if (!e) {
    throw CertifyError("no edge between vertices " + std::to_string(i) +
                       " and " + std::to_string(j));
  }
  if (emb.flat()) {
    cert.reason = "flat embedding";
    return cert;
  }

  const Vec3 center = centroid_of(emb);
  const Vec3& ui = emb.vertex(i);
  const Vec3& uj = emb.vertex(j);
  const auto faces = emb.edge_faces(*e);
  for (const auto& [fa, fb] : {std::pair{faces[0], faces[1]},
                               std::pair{faces[1], faces[0]}}) {
    for (const int a : emb.faces()[fa]) {
      if (a == i || a == j) continue;
      for (const int b : emb.faces()[fb]) {
        if (b == i || b == j || b == a) continue;
        CertifyAttempt attempt{a, b, std::numeric_limits<double>::quiet_NaN(), ""};
        const Vec3& ua = emb.vertex(a);
        const Vec3& ub = emb.vertex(b);
        try {
          Vec3 up = (ui - ua).cross(uj - ua);
          if (up.dot(center - ua) > 0) up = -up;
          using enum BallSide;
          const std::array<std::array<BallSide, 3>, 3> patterns{{
              {above, above, below},
              {above, below, below},
              {below, above, below},
          }};
          double clearance = std::numeric_limits<double>::infinity();
          for (const auto& sides : patterns) {
            const Plane p = tangent_plane(ui, uj, ua, r, sides, up);
            clearance = std::min(clearance, -p.signed_distance(ub));
          }
          attempt.clearance = clearance;
          if (clearance > cert.clearance) cert.clearance = clearance;
        } catch (const CertifyError& err) {
          attempt.reason = err.what();
        }
        cert.attempts.push_back(attempt);
      }
    }
  }
  if (cert.clearance > r + options.clearance_margin) {
    cert.status = EdgeStatus::certified;
  } else if (cert.attempts.empty()) {
    cert.reason = "no admissible opposite vertices";
  } else if (std::isinf(cert.clearance)) {
    cert.reason = cert.attempts.front().reason;
  } else {
    cert.reason = "clearance does not exceed r";
  }
  return cert;
}

bool Certificate::all_certified() const {
  return !edges.empty() && certified_count() == static_cast<int>(edges.size());
}

int Certificate::certified_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const auto& e) {
    return e.status == EdgeStatus::certified;
  }));
}

Certificate certify_all(const GeodesicTable& table, const Embedding& emb,
                        const CertifyOptions& options) {
  if (table.size() != emb.vertex_count()) {
    throw CertifyError("embedding has " + std::to_string(emb.vertex_count()) +
                       " vertices but the gluing has " +
                       std::to_string(table.size()) + " cone points");
  }
  Certificate cert;
  cert.discrepancies = measure_discrepancies(emb, table);
  cert.mu = cert.discrepancies.mu;
  cert.gamma = cert.discrepancies.gamma;
  try {
    cert.r = displacement_radius(emb.edge_count(), emb.longest_edge(),
                                 emb.max_degree(), cert.gamma, cert.mu);
  } catch (const PreconditionError& err) {
    cert.r = std::numeric_limits<double>::infinity();
    cert.reason = err.what();
    for (const auto& e : emb.edges()) {
      EdgeCertificate ec;
      ec.i = e[0];
      ec.j = e[1];
      ec.clearance = std::numeric_limits<double>::quiet_NaN();
      ec.reason = cert.reason;
      cert.edges.push_back(ec);
    }
    return cert;
  }
  for (const auto& e : emb.edges()) {
    cert.edges.push_back(certify_edge(emb, e[0], e[1], cert.r, options));
  }
  return cert;
}

Certificate certify_all(const Gluing& g, const Embedding& emb,
                        const CertifyOptions& options) {
  return certify_all(all_pairs_geodesics(g, options.metric), emb, options);
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  const auto old = out.precision(17);
  out << "mu " << cert.mu << " gamma " << cert.gamma << " r " << cert.r << '\n';
  for (const auto& e : cert.edges) {
    out << "edge " << e.i << ' ' << e.j << ' ' << to_string(e.status) << ' '
        << e.clearance << '\n';
  }
  out.precision(old);
}

}  // namespace pentaglue
