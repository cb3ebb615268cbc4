#include "pentaglue/models.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catalog_data.hpp"

namespace pentaglue {

namespace {

std::vector<EdgePair> edges_of(const std::vector<std::vector<int>>& faces) {
  std::set<EdgePair> edges;
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int a = f[k], b = f[(k + 1) % f.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {edges.begin(), edges.end()};
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw EmbeddingError("line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& tok, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail_at(line, "bad number '" + tok + "'");
  }
  return v;
}

int to_index(const std::string& tok, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    fail_at(line, "bad index '" + tok + "'");
  }
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Embedding doubly_covered_pentagon(const Gluing& g) {
  const auto classes = corner_classes(g);
  const auto index = corner_class_index(classes, g.pentagons());
  std::vector<Vec3> vertices(classes.size());
  std::vector<int> face;
  for (int c = 0; c < kSides; ++c) {
    const Vec2 p = pentagon_corner(c);
    vertices[index[c]] = Vec3(p.x(), p.y(), 0.0);
    face.push_back(index[c]);
  }
  std::vector<int> back(face.rbegin(), face.rend());
  std::vector<std::vector<int>> faces{face, back};
  auto edges = edges_of(faces);
  return Embedding(std::move(vertices), std::move(edges), std::move(faces));
}

CatalogEntry make_entry(std::string name, const char* gluing,
                        Embedding embedding, ExpectedStructure expected,
                        std::map<char, int> labels = {}) {
  Gluing g = parse_gluing_text(gluing);
  const int n = g.pentagons();
  return {std::move(name), n, std::move(g), std::move(embedding),
          std::move(expected), std::move(labels)};
}

std::vector<CatalogEntry> build_catalog() {
  using namespace detail;
  std::vector<CatalogEntry> out;
  const Gluing p21 = parse_gluing_text(kP21Gluing);
  out.push_back(make_entry("P2,1", kP21Gluing, doubly_covered_pentagon(p21),
                           {5, 5, 2, {{2, 5}}, {{5, 2}}, true}));
  out.push_back(make_entry("P2,2", kP22Gluing, parse_embedding_text(kP22Embedding),
                           {5, 9, 6, {{3, 2}, {4, 3}}, {{3, 6}}}));
  out.push_back(make_entry("P4,1", kP41Gluing, parse_embedding_text(kP41Embedding),
                           {8, 18, 12, {{4, 4}, {5, 4}}, {{3, 12}}}));
  out.push_back(make_entry(
      "P4,2", kP42Gluing, parse_embedding_text(kP42Embedding),
      {8, 14, 8, {{3, 4}, {4, 4}}, {{3, 4}, {4, 4}}},
      {{'A', 1}, {'B', 5}, {'C', 7}, {'D', 3}, {'E', 0}, {'F', 4}, {'G', 2}, {'H', 6}}));
  out.push_back(make_entry(
      "P4,3", kP43Gluing, parse_embedding_text(kP43Embedding),
      {8, 12, 6, {{3, 8}}, {{4, 6}}},
      {{'A', 0}, {'B', 4}, {'C', 7}, {'D', 5}, {'E', 1}, {'F', 3}, {'G', 6}, {'H', 2}}));
  out.push_back(make_entry("P6", kP6Gluing, parse_embedding_text(kP6Embedding),
                           {11, 27, 18, {{4, 6}, {6, 5}}, {{3, 18}}}));
  out.push_back(make_entry("P8", kP8Gluing, parse_embedding_text(kP8Embedding),
                           {14, 36, 24, {{5, 12}, {6, 2}}, {{3, 24}}}));
  out.push_back(make_entry("P12", kP12Gluing, exact_dodecahedron(),
                           {20, 30, 12, {{3, 20}}, {{5, 12}}}));
  return out;
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

bool ExpectedStructure::simplicial() const {
  return face_sizes.size() == 1 && face_sizes.begin()->first == 3;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown catalogue entry '" + name + "'");
}

Embedding exact_dodecahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> points;
  for (const double x : {1.0, -1.0}) {
    for (const double y : {1.0, -1.0}) {
      for (const double z : {1.0, -1.0}) points.emplace_back(x, y, z);
    }
  }
  for (const double a : {1.0, -1.0}) {
    for (const double b : {1.0, -1.0}) {
      points.emplace_back(0.0, a * phi, b / phi);
      points.emplace_back(a / phi, 0.0, b * phi);
      points.emplace_back(a * phi, b / phi, 0.0);
    }
  }
  std::vector<Vec3> vertices;
  for (const int k : detail::kP12Points) vertices.push_back(points[k] * (phi / 2.0));
  std::vector<std::vector<int>> faces;
  for (const auto& f : detail::kP12Faces) faces.emplace_back(std::begin(f), std::end(f));
  auto edges = edges_of(faces);
  return Embedding(std::move(vertices), std::move(edges), std::move(faces));
}

Embedding parse_embedding(std::istream& in) {
  std::map<int, Vec3> vertices;
  std::vector<EdgePair> edges;
  std::vector<std::vector<int>> faces;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "vertex") {
      if (t.size() != 5) fail_at(number, "expected 'vertex i x y z'");
      const int i = to_index(t[1], number);
      const Vec3 p(to_double(t[2], number), to_double(t[3], number),
                   to_double(t[4], number));
      if (!vertices.emplace(i, p).second) {
        fail_at(number, "vertex " + t[1] + " defined twice");
      }
    } else if (t[0] == "edge") {
      if (t.size() != 3) fail_at(number, "expected 'edge i j'");
      edges.push_back({to_index(t[1], number), to_index(t[2], number)});
    } else if (t[0] == "face") {
      if (t.size() < 4) fail_at(number, "a face needs at least 3 vertices");
      std::vector<int> f;
      for (std::size_t k = 1; k < t.size(); ++k) f.push_back(to_index(t[k], number));
      faces.push_back(std::move(f));
    } else {
      fail_at(number, "unknown record '" + t[0] + "'");
    }
  }
  std::vector<Vec3> dense;
  for (const auto& [i, p] : vertices) {
    if (i != static_cast<int>(dense.size())) {
      throw EmbeddingError("vertex indices are not dense from 0 (missing " +
                           std::to_string(dense.size()) + ")");
    }
    dense.push_back(p);
  }
  return Embedding(std::move(dense), std::move(edges), std::move(faces));
}

Embedding parse_embedding_text(const std::string& text) {
  std::istringstream in(text);
  return parse_embedding(in);
}

Embedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EmbeddingError("cannot open " + path);
  return parse_embedding(in);
}

void write_embedding(std::ostream& out, const Embedding& emb) {
  const auto old = out.precision(17);
  for (int i = 0; i < emb.vertex_count(); ++i) {
    const auto& p = emb.vertex(i);
    out << "vertex " << i << ' ' << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  }
  for (const auto& e : emb.edges()) out << "edge " << e[0] << ' ' << e[1] << '\n';
  for (const auto& f : emb.faces()) {
    out << "face";
    for (const int v : f) out << ' ' << v;
    out << '\n';
  }
  out.precision(old);
}

std::string export_obj(const Embedding& emb) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& p : emb.vertices()) {
    out << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  }
  for (const auto& f : emb.faces()) {
    out << 'f';
    for (const int v : f) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Embedding import_obj(std::istream& in) {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "v") {
      if (t.size() < 4) fail_at(number, "expected 'v x y z'");
      vertices.emplace_back(to_double(t[1], number), to_double(t[2], number),
                            to_double(t[3], number));
    } else if (t[0] == "f") {
      std::vector<int> f;
      for (std::size_t k = 1; k < t.size(); ++k) {
        const int v = to_index(t[k].substr(0, t[k].find('/')), number);
        if (v < 1) fail_at(number, "face indices are 1-based");
        f.push_back(v - 1);
      }
      faces.push_back(std::move(f));
    }
  }
  auto edges = edges_of(faces);
  return Embedding(std::move(vertices), std::move(edges), std::move(faces));
}

std::vector<Crease> crease_chords(const GeodesicTable& table,
                                  std::span<const EdgePair> edges) {
  std::vector<Crease> out;
  for (const auto& e : edges) {
    const Geodesic& w = table.witness(e[0], e[1]);
    for (std::size_t k = 0; k < w.chain.faces.size(); ++k) {
      const Placement back = w.chain.placements[k].inverse();
      const Vec2 a = back.apply(Vec2::Zero());
      const Vec2 b = back.apply(w.target_image);
      // Clip a + t (b - a) to the pentagon.
      double t0 = 0.0, t1 = 1.0;
      for (int s = 0; s < kSides; ++s) {
        const Vec2 c = pentagon_corner(s);
        const Vec2 side = pentagon_corner(s + 1) - c;
        const double at = cross2(side, a - c);
        const double slope = cross2(side, b - a);
        if (std::abs(slope) < 1e-15) {
          if (at < -1e-12) t1 = -1.0;
          continue;
        }
        const double t = -at / slope;
        if (slope > 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
      }
      if (t1 - t0 <= 1e-12) continue;
      const Vec2 from = a + t0 * (b - a);
      const Vec2 to = a + t1 * (b - a);
      bool on_side = false;
      for (int s = 0; s < kSides && !on_side; ++s) {
        const Vec2 c = pentagon_corner(s);
        const Vec2 side = (pentagon_corner(s + 1) - c).normalized();
        on_side = std::abs(cross2(side, from - c)) < 1e-9 &&
                  std::abs(cross2(side, to - c)) < 1e-9;
      }
      if (!on_side) out.push_back({w.chain.faces[k], from, to});
    }
  }
  return out;
}

void check_creases(std::span<const Crease> creases) {
  constexpr double eps = 1e-9;
  for (std::size_t i = 0; i < creases.size(); ++i) {
    for (std::size_t j = i + 1; j < creases.size(); ++j) {
      const Crease& p = creases[i];
      const Crease& q = creases[j];
      if (p.pentagon != q.pentagon) continue;
      const Vec2 r = p.to - p.from;
      const Vec2 s = q.to - q.from;
      const double denom = cross2(r, s);
      const Vec2 d = q.from - p.from;
      if (std::abs(denom) < eps * r.norm() * s.norm()) {
        // Parallel: only overlapping collinear pieces conflict.
        if (std::abs(cross2(r, d)) > eps * r.norm()) continue;
        const double rr = r.squaredNorm();
        const double u0 = d.dot(r) / rr;
        const double u1 = (q.to - p.from).dot(r) / rr;
        if (std::min(std::max(u0, u1), 1.0) - std::max(std::min(u0, u1), 0.0) > eps) {
          throw NetError("creases overlap in pentagon " + std::to_string(p.pentagon));
        }
        continue;
      }
      const double t = cross2(d, s) / denom;
      const double u = cross2(d, r) / denom;
      if (t > eps && t < 1 - eps && u > eps && u < 1 - eps) {
        throw NetError("creases cross in pentagon " + std::to_string(p.pentagon));
      }
    }
  }
}

std::string export_net_svg(const Gluing& g, std::span<const Crease> creases) {
  check_creases(creases);
  const int n = g.pentagons();
  std::vector<Placement> placed(n);
  std::vector<bool> seen(n, false);
  std::set<std::pair<int, int>> tree;  // (pentagon, side) of tree sides
  std::queue<int> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop();
    for (int s = 0; s < kSides; ++s) {
      const auto other = g.partner({p, s});
      if (!other) throw NetError("gluing has unmatched sides");
      if (seen[other->pentagon]) continue;
      seen[other->pentagon] = true;
      placed[other->pentagon] = place_across(g, {p, s}, placed[p]);
      tree.insert({p, s});
      tree.insert({other->pentagon, other->side});
      queue.push(other->pentagon);
    }
  }
  for (int p = 0; p < n; ++p) {
    if (!seen[p]) throw NetError("gluing is not connected");
  }

  constexpr double scale = 60.0;
  constexpr double margin = 20.0;
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (int p = 0; p < n; ++p) {
    for (int k = 0; k < kSides; ++k) {
      const Vec2 c = placed[p].corner(k);
      min_x = std::min(min_x, c.x());
      max_x = std::max(max_x, c.x());
      min_y = std::min(min_y, c.y());
      max_y = std::max(max_y, c.y());
    }
  }
  auto sx = [&](double x) { return margin + scale * (x - min_x); };
  auto sy = [&](double y) { return margin + scale * (max_y - y); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  const double width = 2 * margin + scale * (max_x - min_x);
  const double height = 2 * margin + scale * (max_y - min_y);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<style>.pentagon{fill:#f4f1e8;stroke:none}"
         ".cut{stroke:#3060c0;stroke-width:1.5}"
         ".glued{stroke:#3060c0;stroke-width:1;stroke-dasharray:4 3}"
         ".crease{stroke:#000;stroke-width:1.5}"
         "text{font:12px sans-serif;text-anchor:middle}</style>\n";
  for (int p = 0; p < n; ++p) {
    out << "<polygon class=\"pentagon\" points=\"";
    for (int k = 0; k < kSides; ++k) {
      const Vec2 c = placed[p].corner(k);
      out << (k ? " " : "") << sx(c.x()) << ',' << sy(c.y());
    }
    out << "\"/>\n";
  }
  for (int p = 0; p < n; ++p) {
    for (int s = 0; s < kSides; ++s) {
      const bool glued = tree.count({p, s}) > 0;
      // Each tree side is shared by two placed pentagons; draw it once.
      if (glued && g.partner({p, s})->pentagon < p) continue;
      const Vec2 a = placed[p].corner(s);
      const Vec2 b = placed[p].corner(s + 1);
      out << "<line class=\"" << (glued ? "glued" : "cut") << "\" x1=\""
          << sx(a.x()) << "\" y1=\"" << sy(a.y()) << "\" x2=\"" << sx(b.x())
          << "\" y2=\"" << sy(b.y()) << "\"/>\n";
    }
  }
  for (const auto& c : creases) {
    if (c.pentagon < 0 || c.pentagon >= n) throw NetError("crease in unknown pentagon");
    const Vec2 a = placed[c.pentagon].apply(c.from);
    const Vec2 b = placed[c.pentagon].apply(c.to);
    out << "<line class=\"crease\" x1=\"" << sx(a.x()) << "\" y1=\"" << sy(a.y())
        << "\" x2=\"" << sx(b.x()) << "\" y2=\"" << sy(b.y()) << "\"/>\n";
  }
  for (int p = 0; p < n; ++p) {
    Vec2 c = Vec2::Zero();
    for (int k = 0; k < kSides; ++k) c += placed[p].corner(k);
    c /= kSides;
    out << "<text x=\"" << sx(c.x()) << "\" y=\"" << sy(c.y()) << "\">" << p
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pentaglue
