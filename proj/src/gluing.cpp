#include "pentaglue/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "walk.hpp"

namespace pentaglue {

double PiFifths::radians() const { return fifths * std::numbers::pi / 5.0; }

double VertexClass::cone_angle() const {
  return degree() * 3.0 * std::numbers::pi / 5.0;
}

Gluing::Gluing(int pentagons)
    : n_(pentagons),
      partner_(static_cast<std::size_t>(kSides * std::max(pentagons, 0)), -1),
      orientation_(partner_.size(), Orientation::flip) {
  if (pentagons < 1) throw GluingError("gluing needs at least one pentagon");
}

int Gluing::index(EdgeSlot s) const { return kSides * s.pentagon + s.side; }

void Gluing::check(EdgeSlot s) const {
  if (s.pentagon < 0 || s.pentagon >= n_ || s.side < 0 || s.side >= kSides) {
    throw GluingError("edge slot " + std::to_string(s.pentagon) + "." +
                      std::to_string(s.side) + " out of range");
  }
}

void Gluing::glue(EdgeSlot a, EdgeSlot b, Orientation orientation) {
  check(a);
  check(b);
  if (a == b) throw GluingError("a side cannot be glued to itself");
  const int ia = index(a);
  const int ib = index(b);
  if (partner_[ia] >= 0 || partner_[ib] >= 0) {
    throw GluingError("side " + std::to_string(a.pentagon) + "." +
                      std::to_string(a.side) + " or " +
                      std::to_string(b.pentagon) + "." +
                      std::to_string(b.side) + " is already glued");
  }
  partner_[ia] = ib;
  partner_[ib] = ia;
  orientation_[ia] = orientation;
  orientation_[ib] = orientation;
}

std::optional<EdgeSlot> Gluing::partner(EdgeSlot s) const {
  check(s);
  const int p = partner_[index(s)];
  if (p < 0) return std::nullopt;
  return EdgeSlot{p / kSides, p % kSides};
}

Orientation Gluing::orientation(EdgeSlot s) const {
  check(s);
  return orientation_[index(s)];
}

bool Gluing::is_matched(EdgeSlot s) const {
  check(s);
  return partner_[index(s)] >= 0;
}

bool Gluing::is_perfect() const {
  return std::none_of(partner_.begin(), partner_.end(),
                      [](int p) { return p < 0; });
}

std::vector<Glue> Gluing::pairs() const {
  std::vector<Glue> out;
  for (int i = 0; i < slot_count(); ++i) {
    const int j = partner_[i];
    if (j > i) {
      out.push_back({{i / kSides, i % kSides},
                     {j / kSides, j % kSides},
                     orientation_[i]});
    }
  }
  return out;
}

namespace detail {

WalkStep step_around_corner(const Gluing& g, CornerSlot at, int orient) {
  const int k = at.corner;
  const int exit_side = orient > 0 ? (k + kSides - 1) % kSides : k;
  const EdgeSlot exit{at.pentagon, exit_side};
  const auto other = g.partner(exit);
  if (!other) throw GluingError("matching is not perfect");
  const bool flip = g.orientation(exit) == Orientation::flip;
  const bool at_head = orient > 0;  // our corner is exit_side + 1
  int next_corner;
  if (at_head) {
    next_corner = flip ? other->side : (other->side + 1) % kSides;
  } else {
    next_corner = flip ? (other->side + 1) % kSides : other->side;
  }
  return {{other->pentagon, next_corner}, flip ? orient : -orient};
}

}  // namespace detail

namespace {

// Two-colors the pentagons so that flip pairs join equal colors and keep
// pairs join opposite colors; nullopt if the surface is not orientable.
std::optional<std::vector<int>> orientation_signs(const Gluing& g) {
  const int n = g.pentagons();
  std::vector<int> sign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (int s = 0; s < kSides; ++s) {
        const EdgeSlot here{p, s};
        const int q = g.partner(here)->pentagon;
        const int want =
            g.orientation(here) == Orientation::flip ? sign[p] : -sign[p];
        if (sign[q] == 0) {
          sign[q] = want;
          stack.push_back(q);
        } else if (sign[q] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

}  // namespace

std::vector<VertexClass> corner_classes(const Gluing& g) {
  if (!g.is_perfect()) throw GluingError("matching is not perfect");
  const int n = g.pentagons();
  std::vector<bool> seen(static_cast<std::size_t>(kSides * n), false);
  std::vector<VertexClass> classes;
  // Walk every cone point in the same rotational sense when possible.
  const auto signs = orientation_signs(g);
  for (int p = 0; p < n; ++p) {
    for (int c = 0; c < kSides; ++c) {
      if (seen[kSides * p + c]) continue;
      VertexClass cls;
      CornerSlot at{p, c};
      int orient = signs ? (*signs)[p] : 1;
      while (true) {
        const int idx = kSides * at.pentagon + at.corner;
        if (seen[idx]) break;
        seen[idx] = true;
        cls.corners.push_back(at);
        cls.orientations.push_back(orient);
        const auto next = detail::step_around_corner(g, at, orient);
        at = next.corner;
        orient = next.orientation;
      }
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::vector<int> corner_class_index(const std::vector<VertexClass>& classes,
                                    int pentagons) {
  std::vector<int> out(static_cast<std::size_t>(kSides * pentagons), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& c : classes[i].corners) {
      out[kSides * c.pentagon + c.corner] = static_cast<int>(i);
    }
  }
  return out;
}

std::string to_string(AlexandrovFailure f) {
  switch (f) {
    case AlexandrovFailure::disconnected:
      return "disconnected";
    case AlexandrovFailure::angle_excess:
      return "angle-excess";
    case AlexandrovFailure::not_sphere:
      return "not-sphere";
  }
  return "unknown";
}

namespace {

bool is_connected(const Gluing& g) {
  const int n = g.pentagons();
  std::vector<bool> reached(n, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (int s = 0; s < kSides; ++s) {
      const int q = g.partner({p, s})->pentagon;
      if (!reached[q]) {
        reached[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == n;
}

}  // namespace

AlexandrovResult check_alexandrov(const Gluing& g) {
  if (!g.is_perfect()) throw GluingError("matching is not perfect");
  if (!is_connected(g)) {
    return {AlexandrovFailure::disconnected,
            "pentagon adjacency is not connected"};
  }
  const auto classes = corner_classes(g);
  for (const auto& cls : classes) {
    if (!cls.valid()) {
      const auto& c = cls.corners.front();
      return {AlexandrovFailure::angle_excess,
              "cone point at corner " + std::to_string(c.pentagon) + "." +
                  std::to_string(c.corner) + " has " +
                  std::to_string(cls.degree()) + " corners"};
    }
  }
  const int n = g.pentagons();
  // V - E + F with E = 5n/2, doubled to stay integral.
  const int twice_euler = 2 * static_cast<int>(classes.size()) - 5 * n + 2 * n;
  if (twice_euler != 4) {
    return {AlexandrovFailure::not_sphere,
            "Euler characteristic is " + std::to_string(twice_euler / 2)};
  }
  if (!orientation_signs(g)) {
    return {AlexandrovFailure::not_sphere, "surface is not orientable"};
  }
  return {};
}

PiFifths gauss_bonnet_total(const Gluing& g) {
  PiFifths total;
  for (const auto& cls : corner_classes(g)) total.fifths += cls.curvature().fifths;
  return total;
}

std::vector<VertexCensus> vertex_census_solutions(int n) {
  std::vector<VertexCensus> out;
  if (n < 1) return out;
  for (int x = 0; 7 * x <= 20; ++x) {
    for (int y = 0; 7 * x + 4 * y <= 20; ++y) {
      const int z = 20 - 7 * x - 4 * y;
      if (x + 2 * y + 3 * z == 5 * n) out.push_back({x, y, z, n});
    }
  }
  return out;
}

VertexCensus census_of(const Gluing& g) {
  VertexCensus c;
  c.n = g.pentagons();
  for (const auto& cls : corner_classes(g)) {
    switch (cls.degree()) {
      case 1:
        ++c.x;
        break;
      case 2:
        ++c.y;
        break;
      case 3:
        ++c.z;
        break;
      default:
        break;
    }
  }
  return c;
}

namespace {

EdgeSlot parse_slot(const std::string& token, int line) {
  const auto dot = token.find('.');
  if (dot == std::string::npos) {
    throw GluingError("line " + std::to_string(line) + ": bad slot '" + token +
                      "'");
  }
  try {
    std::size_t used_p = 0;
    std::size_t used_s = 0;
    const std::string ps = token.substr(0, dot);
    const std::string ss = token.substr(dot + 1);
    const int p = std::stoi(ps, &used_p);
    const int s = std::stoi(ss, &used_s);
    if (used_p != ps.size() || used_s != ss.size()) throw std::invalid_argument("");
    return {p, s};
  } catch (const std::logic_error&) {
    throw GluingError("line " + std::to_string(line) + ": bad slot '" + token +
                      "'");
  }
}

}  // namespace

Gluing parse_gluing(std::istream& in) {
  std::optional<Gluing> g;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword) || keyword.front() == '#') continue;
    if (keyword == "pentagons") {
      int n = 0;
      if (g || !(ls >> n)) {
        throw GluingError("line " + std::to_string(line) +
                          ": expected a single 'pentagons <n>'");
      }
      g.emplace(n);
    } else if (keyword == "glue") {
      if (!g) {
        throw GluingError("line " + std::to_string(line) +
                          ": 'glue' before 'pentagons'");
      }
      std::string a, b, mode;
      if (!(ls >> a >> b >> mode)) {
        throw GluingError("line " + std::to_string(line) +
                          ": expected 'glue <p>.<s> <q>.<t> <flip|keep>'");
      }
      Orientation o;
      if (mode == "flip") {
        o = Orientation::flip;
      } else if (mode == "keep") {
        o = Orientation::keep;
      } else {
        throw GluingError("line " + std::to_string(line) +
                          ": unknown orientation '" + mode + "'");
      }
      try {
        g->glue(parse_slot(a, line), parse_slot(b, line), o);
      } catch (const GluingError& e) {
        throw GluingError("line " + std::to_string(line) + ": " + e.what());
      }
    } else {
      throw GluingError("line " + std::to_string(line) + ": unknown keyword '" +
                        keyword + "'");
    }
    std::string extra;
    if (ls >> extra) {
      throw GluingError("line " + std::to_string(line) + ": trailing text '" +
                        extra + "'");
    }
  }
  if (!g) throw GluingError("missing 'pentagons <n>' line");
  return *g;
}

Gluing parse_gluing_text(const std::string& text) {
  std::istringstream in(text);
  return parse_gluing(in);
}

void write_gluing(std::ostream& out, const Gluing& g) {
  out << "pentagons " << g.pentagons() << '\n';
  for (const auto& p : g.pairs()) {
    out << "glue " << p.a.pentagon << '.' << p.a.side << ' ' << p.b.pentagon
        << '.' << p.b.side << ' '
        << (p.orientation == Orientation::flip ? "flip" : "keep") << '\n';
  }
}

std::string gluing_text(const Gluing& g) {
  std::ostringstream out;
  write_gluing(out, g);
  return out.str();
}

}  // namespace pentaglue
