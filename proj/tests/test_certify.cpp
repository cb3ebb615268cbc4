#include <doctest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "helpers.hpp"

using namespace pentaglue;
using testing::cube;
using testing::tetrahedron;

namespace {

constexpr double kPi = std::numbers::pi;

// True if some sampled plane meets every radius-r ball around the points.
// A plane with unit normal n meets ball c iff |n.c - t| <= r, so a common
// offset t exists iff the spread of n.c is at most 2r.
bool sampled_transversal(const std::vector<Vec3>& centers, double r, int samples,
                         std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  for (int s = 0; s < samples; ++s) {
    Vec3 n(gauss(rng), gauss(rng), gauss(rng));
    n.normalize();
    double lo = 1e300, hi = -1e300;
    for (const auto& c : centers) {
      lo = std::min(lo, n.dot(c));
      hi = std::max(hi, n.dot(c));
    }
    if (hi - lo <= 2 * r) return true;
  }
  return false;
}

// True if a sampled line through u meets both radius-rho disks.
bool sampled_line_through(const Vec2& c1, const Vec2& c2, double rho, const Vec2& u,
                          int samples) {
  for (int s = 0; s < samples; ++s) {
    const double t = kPi * s / samples;
    const Vec2 n(-std::sin(t), std::cos(t));
    if (std::abs(n.dot(c1 - u)) <= rho && std::abs(n.dot(c2 - u)) <= rho) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("displacement radius") {
  const double expected = 27.0 * 27.0 * 2.5 * 2.0 * std::sin(3e-6) + 27.0 * 1e-7;
  const double r = displacement_radius(27, 2.5, 6, 1e-6, 1e-7);
  CHECK(std::abs(r - expected) <= 1e-6 * expected);
  CHECK(std::abs(r - 1.09377e-2) <= 1e-6 * 1.09377e-2);
  CHECK(displacement_radius(27, 2.5, 6, 0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(displacement_radius(27, 2.5, 6, 0.3, 0.0), PreconditionError);
  CHECK_THROWS_AS(displacement_radius(27, 2.5, 6, kPi / 12, 0.0), PreconditionError);
  CHECK_THROWS_AS(displacement_radius(27, 2.5, 6, 1e-6, -1.0), std::invalid_argument);
}

TEST_CASE("displacement radius is monotone in every argument") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ei(1, 60), di(1, 8);
  std::uniform_real_distribution<double> lu(0.1, 4.0), gu(0.0, 0.02), mu(0.0, 1e-3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int e = ei(rng), d = di(rng);
    const double l = lu(rng), g = gu(rng), m = mu(rng);
    const double r = displacement_radius(e, l, d, g, m);
    CHECK(displacement_radius(e + 1, l, d, g, m) >= r);
    CHECK(displacement_radius(e, l * 1.1, d, g, m) >= r);
    CHECK(displacement_radius(e, l, d + 1, g, m) >= r);
    CHECK(displacement_radius(e, l, d, g * 1.1, m) >= r);
    CHECK(displacement_radius(e, l, d, g, m + 1e-6) >= r);
  }
}

TEST_CASE("segment displacement bound") {
  CHECK(segment_displacement_bound(3.0, 0.25, 0.0) == 0.25);
  CHECK(segment_displacement_bound(1.0, 0.0, kPi / 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(segment_displacement_bound(1.0, -1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(segment_displacement_bound(1.0, 0.0, kPi / 2), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int violations = 0;
  for (int s = 0; s < 10000; ++s) {
    const Vec2 p(4 * u01(rng) - 2, 4 * u01(rng) - 2);
    const double l = 0.1 + 3 * u01(rng);
    const double eps = 0.1 * l * u01(rng);
    const double theta = (kPi / 2) * u01(rng) * 0.999;
    const double base = 2 * kPi * u01(rng);
    const double turn = theta * (2 * u01(rng) - 1);
    const double lp = l - eps + 2 * eps * u01(rng);
    const Vec2 q = p + l * Vec2(std::cos(base), std::sin(base));
    const Vec2 q2 = p + lp * Vec2(std::cos(base + turn), std::sin(base + turn));
    if ((q - q2).norm() - segment_displacement_bound(l, eps, theta) > 1e-12) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("lowest tangent line") {
  const Line2 flat = lowest_tangent_line({-6, 0}, {6, 0}, 0.0);
  CHECK(std::abs(flat.signed_distance({0, 0})) < 1e-15);
  CHECK(std::abs(flat.signed_distance({17, 0})) < 1e-12);

  const Line2 line = lowest_tangent_line({-6, 0}, {6, 0}, 2.0);
  CHECK(line.normal.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(line.offset) < 1e-12);
  // Slope of the line is -n.x / n.y.
  CHECK(-line.normal.x() / line.normal.y() == doctest::Approx(-1 / (2 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(line.signed_distance({-6, 0}) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(line.signed_distance({6, 0}) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(no_transversal_line({-6, 0}, {6, 0}, 2.0, {10, -4}));
  CHECK_FALSE(no_transversal_line({-6, 0}, {6, 0}, 2.0, {10, 5}));
  CHECK_THROWS_AS(lowest_tangent_line({0, 0}, {3, 0}, 2.0), DegenerateError);
}

TEST_CASE("no_transversal_line agrees with sampled lines") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-10, 10), ru(0.05, 1.5);
  int decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Vec2 c1(u(rng), u(rng)), c2(u(rng), u(rng));
    const double rho = ru(rng);
    if ((c1 - c2).norm() <= 2 * rho + 0.1) continue;
    const Vec2 p(u(rng) * 2, u(rng) * 2);
    if (!no_transversal_line(c1, c2, rho, p)) continue;
    ++decided;
    CHECK_FALSE(sampled_line_through(c1, c2, rho, p, 20000));
  }
  CHECK(decided > 20);
}

TEST_CASE("tangent plane") {
  using enum BallSide;
  SUBCASE("zero radius is the plane through the points") {
    const Plane p = tangent_plane({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0.0, {below, below, below});
    CHECK(std::abs(std::abs(p.normal.z()) - 1) < 1e-12);
    CHECK(std::abs(p.offset) < 1e-12);
  }
  SUBCASE("example residuals") {
    const Plane p = tangent_plane({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0.1, {below, below, above});
    CHECK(std::abs(p.signed_distance({0, 0, 0}) + 0.1) < 1e-12);
    CHECK(std::abs(p.signed_distance({1, 0, 0}) + 0.1) < 1e-12);
    CHECK(std::abs(p.signed_distance({0, 1, 0}) - 0.1) < 1e-12);
  }
  SUBCASE("random residuals") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-2, 2), ru(0.0, 0.2);
    std::bernoulli_distribution coin(0.5);
    int solved = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Vec3 c1(u(rng), u(rng), u(rng)), c2(u(rng), u(rng), u(rng)), c3(u(rng), u(rng), u(rng));
      const double r = ru(rng);
      const std::array<BallSide, 3> sides{coin(rng) ? above : below, coin(rng) ? above : below,
                                          coin(rng) ? above : below};
      try {
        const Plane p = tangent_plane(c1, c2, c3, r, sides);
        ++solved;
        CHECK(std::abs(p.normal.norm() - 1) <= 1e-12);
        const std::array<Vec3, 3> c{c1, c2, c3};
        for (int k = 0; k < 3; ++k) {
          const double want = sides[k] == above ? r : -r;
          CHECK(std::abs(p.signed_distance(c[k]) - want) <= 1e-10);
        }
        const Vec3 up = (c2 - c1).cross(c3 - c1);
        CHECK(p.normal.dot(up) >= 0);
      } catch (const InfeasibleError&) {
      }
    }
    CHECK(solved > 1800);
  }
  SUBCASE("failures") {
    CHECK_THROWS_AS(tangent_plane({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, 0.1, {below, below, above}),
                    DegenerateError);
    // Separating two balls 0.1 apart by radius 1 is impossible.
    CHECK_THROWS_AS(tangent_plane({0, 0, 0}, {0.1, 0, 0}, {0, 0.1, 0}, 1.0, {below, above, above}),
                    InfeasibleError);
  }
}

TEST_CASE("tetrahedron soundness against sampled planes") {
  const Embedding t = tetrahedron();
  std::mt19937 rng(123);
  // A plane meets all four balls once 2r reaches the width of the
  // tetrahedron, the distance 1/sqrt(2) between opposite edges.
  const double critical = 1 / (2 * std::sqrt(2.0));
  for (const double r : {0.01, 0.3, 0.36, 1.0}) {
    CAPTURE(r);
    const bool transversal = sampled_transversal(t.vertices(), r, 100000, rng);
    CHECK(transversal == (r > critical));
    for (const auto& e : t.edges()) {
      const EdgeCertificate c = certify_edge(t, e[0], e[1], r);
      if (transversal) CHECK(c.status == EdgeStatus::inconclusive);
      if (r == 0.01) CHECK(c.status == EdgeStatus::certified);
    }
  }
}

TEST_CASE("tetrahedron certification stops exactly at the critical radius") {
  const Embedding t = tetrahedron();
  const double critical = 1 / (2 * std::sqrt(2.0));
  for (const auto& e : t.edges()) {
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 60; ++k) {
      const double mid = (lo + hi) / 2;
      (certify_edge(t, e[0], e[1], mid).status == EdgeStatus::certified ? lo : hi) = mid;
    }
    CHECK(std::abs(lo - critical) < 1e-9);
  }
}

TEST_CASE("certify_edge details") {
  const Embedding t = tetrahedron();
  const EdgeCertificate c = certify_edge(t, 0, 1, 0.0);
  CHECK(c.status == EdgeStatus::certified);
  // At r = 0 the clearance is the height of the tetrahedron.
  CHECK(c.clearance == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(c.attempts.size() == 2);
  CHECK_THROWS_AS(certify_edge(cube(), 0, 3, 0.01), CertifyError);
  // Square faces offer two opposite vertices on each side.
  const EdgeCertificate q = certify_edge(cube(), 0, 1, 0.01);
  CHECK(q.attempts.size() == 8);
}

TEST_CASE("flat embeddings are never certified") {
  const auto& entry = catalog_entry("P2,1");
  REQUIRE(entry.embedding.flat());
  for (const auto& e : entry.embedding.edges()) {
    for (const double r : {0.0, 1e-9, 0.1}) {
      CHECK(certify_edge(entry.embedding, e[0], e[1], r).status == EdgeStatus::inconclusive);
    }
  }
  const Certificate cert = certify_all(entry.gluing, entry.embedding);
  CHECK(cert.certified_count() == 0);
  CHECK_FALSE(cert.all_certified());
}

TEST_CASE("exact dodecahedron certifies with vanishing discrepancies") {
  const auto& g = catalog_entry("P12").gluing;
  const Certificate cert = certify_all(g, exact_dodecahedron());
  CHECK(cert.mu < 1e-12);
  CHECK(cert.gamma < 1e-12);
  CHECK(cert.all_certified());
  CHECK(cert.certified_count() == 30);
}

TEST_CASE("collinear perturbation shows up exactly in mu") {
  const auto& g = catalog_entry("P12").gluing;
  const Embedding exact = exact_dodecahedron();
  const GeodesicTable table = all_pairs_geodesics(g);
  const auto [v, w] = exact.edges().front();
  std::vector<Vec3> moved = exact.vertices();
  const double delta = 1e-3;
  moved[v] += delta * (moved[v] - moved[w]).normalized();
  const Embedding perturbed(moved, exact.edges(), exact.faces());
  const DiscrepancyReport rep = measure_discrepancies(perturbed, table);
  CHECK(std::abs(rep.mu - delta) <= 1e-9);
  const DiscrepancyReport base = measure_discrepancies(exact, table);
  CHECK(base.mu < 1e-12);
}

TEST_CASE("discrepancies need every pair in the table") {
  const GeodesicTable small = all_pairs_geodesics(testing::doubly_covered());
  CHECK_THROWS_AS(measure_discrepancies(exact_dodecahedron(), small), CertifyError);
  CHECK_THROWS_AS(certify_all(small, exact_dodecahedron()), CertifyError);
}

TEST_CASE("certificate output") {
  const auto& entry = catalog_entry("P2,2");
  const Certificate cert = certify_all(entry.gluing, entry.embedding);
  CHECK(cert.mu < 1e-5);
  CHECK(cert.gamma < 1e-4);
  for (const auto& a : cert.discrepancies.per_angle) {
    CHECK(std::abs(a.facial - a.surface) <= cert.gamma);
  }
  std::ostringstream out;
  write_certificate(out, cert);
  std::istringstream in(out.str());
  int edges = 0;
  std::string first;
  in >> first;
  CHECK(first == "mu");
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("edge ", 0) == 0) {
      ++edges;
      CHECK(line.find("CERTIFIED") != std::string::npos);
    }
  }
  CHECK(edges == 9);
}

TEST_CASE("planarity, parallelograms and mirrors") {
  const Embedding c = cube();
  for (const auto& f : c.faces()) {
    CHECK(verify_face_planarity(c, f, 1e-12));
    CHECK(verify_parallelogram(c, f, 1e-12));
  }
  const Embedding t = tetrahedron();
  CHECK(verify_face_planarity(t, t.faces()[0], 1e-12));
  CHECK_FALSE(verify_face_planarity(t, std::vector<int>{0, 1, 2, 3}, 1e-5));

  for (int axis = 0; axis < 3; ++axis) {
    Plane p;
    p.normal = Vec3::Unit(axis);
    p.offset = 0.5;
    CHECK(verify_mirror_symmetry(c, p, 1e-12));
  }
  Plane diagonal;
  diagonal.normal = Vec3(1, -1, 0).normalized();
  diagonal.offset = 0.0;
  CHECK(verify_mirror_symmetry(c, diagonal, 1e-12));
  Plane tilted;
  tilted.normal = Vec3(1, 2, 0).normalized();
  tilted.offset = tilted.normal.dot(Vec3(0.5, 0.5, 0.5));
  CHECK_FALSE(verify_mirror_symmetry(c, tilted, 1e-6));

  const Embedding bumpy = cube(0.01);
  Plane mid;
  mid.normal = Vec3::UnitX();
  mid.offset = 0.5;
  CHECK_FALSE(verify_mirror_symmetry(bumpy, mid, 1e-5));

  // Isosceles trapezoid: parallel sides 2 and 1.
  std::vector<Vec3> v{{0, 0, 0}, {2, 0, 0}, {1.5, 1, 0}, {0.5, 1, 0},
                      {0, 0, 1}, {2, 0, 1}, {1.5, 1, 1}, {0.5, 1, 1}};
  std::vector<std::vector<int>> f{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                  {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  std::vector<EdgePair> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                          {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  const Embedding prism(v, e, f);
  CHECK(verify_face_planarity(prism, std::vector<int>{0, 1, 2, 3}, 1e-12));
  CHECK_FALSE(verify_parallelogram(prism, std::vector<int>{0, 1, 2, 3}, 1e-5));
  CHECK(verify_parallelogram(prism, std::vector<int>{0, 1, 5, 4}, 1e-12));
}

TEST_CASE("embedding validation") {
  const Embedding t = tetrahedron();
  CHECK(t.vertex_count() == 4);
  CHECK(t.max_degree() == 3);
  CHECK(t.longest_edge() == doctest::Approx(1.0));
  CHECK(t.find_edge(3, 2).has_value());
  CHECK_FALSE(t.flat());
  // Faces come back outward-oriented whatever order they were given in.
  for (const auto& f : t.faces()) {
    const Vec3 n = (t.vertex(f[1]) - t.vertex(f[0])).cross(t.vertex(f[2]) - t.vertex(f[0]));
    Vec3 centroid = Vec3::Zero();
    for (const auto& p : t.vertices()) centroid += p / 4;
    CHECK(n.dot(t.vertex(f[0]) - centroid) > 0);
  }

  std::vector<Vec3> v = t.vertices();
  SUBCASE("interior vertex") {
    // Bipyramid whose lower apex sits inside the upper tetrahedron.
    const Vec3 c(0.5, std::sqrt(3.0) / 6, 0.0);
    std::vector<Vec3> w{v[0], v[1], v[2], c + Vec3(0, 0, 0.8), c + Vec3(0, 0, 0.1)};
    std::vector<std::vector<int>> f{{0, 1, 3}, {1, 2, 3}, {2, 0, 3},
                                    {0, 4, 1}, {1, 4, 2}, {2, 4, 0}};
    std::vector<EdgePair> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                            {2, 3}, {0, 4}, {1, 4}, {2, 4}};
    CHECK_THROWS_AS(Embedding(w, e, f), EmbeddingError);
    w[4] = c - Vec3(0, 0, 0.1);
    CHECK_NOTHROW(Embedding(w, e, f));
  }
  SUBCASE("euler characteristic") {
    std::vector<std::vector<int>> f{{0, 2, 1}, {0, 1, 3}, {1, 2, 3}};
    std::vector<EdgePair> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK_THROWS_AS(Embedding(v, e, f), EmbeddingError);
  }
  SUBCASE("edge not used by a face") {
    std::vector<std::vector<int>> f{{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
    std::vector<EdgePair> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK_THROWS_AS(Embedding(v, e, f), EmbeddingError);
  }
}
