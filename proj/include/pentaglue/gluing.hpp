#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentaglue {

inline constexpr int kSides = 5;

/// A side of one pentagon. Side i joins corner i to corner (i + 1) mod 5,
/// sides and corners counted counterclockwise.
struct EdgeSlot {
  int pentagon = 0;
  int side = 0;

  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

struct CornerSlot {
  int pentagon = 0;
  int corner = 0;

  friend bool operator==(const CornerSlot&, const CornerSlot&) = default;
  friend auto operator<=>(const CornerSlot&, const CornerSlot&) = default;
};

/// How two matched sides are identified. With both pentagons read
/// counterclockwise, `flip` joins head to tail (corner s of one side meets
/// corner j + 1 of the other) and is the orientation-preserving choice;
/// `keep` joins head to head.
enum class Orientation : std::uint8_t { flip, keep };

struct Glue {
  EdgeSlot a;
  EdgeSlot b;
  Orientation orientation = Orientation::flip;
};

class GluingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curvature as an exact integer multiple of pi/5.
struct PiFifths {
  int fifths = 0;

  double radians() const;
  friend bool operator==(const PiFifths&, const PiFifths&) = default;
};

/// n regular unit-side pentagons plus a matching on their 5n sides.
class Gluing {
 public:
  explicit Gluing(int pentagons);

  int pentagons() const { return n_; }
  int slot_count() const { return kSides * n_; }

  /// Identifies two free sides. Throws GluingError if a slot is out of
  /// range, already used, or both slots are the same side.
  void glue(EdgeSlot a, EdgeSlot b, Orientation orientation);

  std::optional<EdgeSlot> partner(EdgeSlot s) const;
  Orientation orientation(EdgeSlot s) const;
  bool is_matched(EdgeSlot s) const;
  bool is_perfect() const;

  /// Every matched pair once, ordered by its lower slot.
  std::vector<Glue> pairs() const;

  friend bool operator==(const Gluing&, const Gluing&) = default;

 private:
  int index(EdgeSlot s) const;
  void check(EdgeSlot s) const;

  int n_;
  std::vector<int> partner_;  // -1 when free
  std::vector<Orientation> orientation_;
};

/// One cone point: an equivalence class of pentagon corners.
struct VertexClass {
  /// Corners in cyclic order around the point, starting from the
  /// smallest slot.
  std::vector<CornerSlot> corners;
  /// Per corner: +1 if the walk crosses it counterclockwise in that
  /// pentagon's own frame, -1 otherwise.
  std::vector<int> orientations;

  int degree() const { return static_cast<int>(corners.size()); }
  PiFifths curvature() const { return {10 - 3 * degree()}; }
  /// Total angle around the point, degree * 3pi/5.
  double cone_angle() const;
  /// False once the angle sum exceeds 2pi.
  bool valid() const { return degree() <= 3; }
};

/// Partitions all corners into cone points by walking around each one
/// through the matched sides. Throws GluingError if the matching is not
/// perfect.
std::vector<VertexClass> corner_classes(const Gluing& g);

/// Index of the class containing each corner, laid out as 5 * pentagon +
/// corner.
std::vector<int> corner_class_index(const std::vector<VertexClass>& classes,
                                    int pentagons);

enum class AlexandrovFailure { disconnected, angle_excess, not_sphere };

struct AlexandrovResult {
  std::optional<AlexandrovFailure> failure;
  std::string reason;

  bool pass() const { return !failure.has_value(); }
  explicit operator bool() const { return pass(); }
};

std::string to_string(AlexandrovFailure f);

/// Sphere topology (connected, orientable, Euler characteristic 2) and at
/// most three corners at every cone point.
AlexandrovResult check_alexandrov(const Gluing& g);

/// Sum of cone-point curvatures, exactly.
PiFifths gauss_bonnet_total(const Gluing& g);

struct VertexCensus {
  int x = 0;  // curvature 7pi/5, one corner
  int y = 0;  // curvature 4pi/5, two corners
  int z = 0;  // curvature pi/5, three corners
  int n = 0;

  friend bool operator==(const VertexCensus&, const VertexCensus&) = default;
};

/// Non-negative integer solutions of 7x + 4y + z = 20, x + 2y + 3z = 5n,
/// in lexicographic order of (x, y, z).
std::vector<VertexCensus> vertex_census_solutions(int n);

/// Census of the cone points of g; g must have a perfect matching.
VertexCensus census_of(const Gluing& g);

/// Canonical text code, equal for two gluings iff one is obtained from the
/// other by relabeling pentagons, rotating or reflecting any pentagon.
std::string canonical_code(const Gluing& g);

struct EnumerateOptions {
  /// Search above twelve pentagons instead of returning nothing.
  bool no_bound = false;
};

/// All pairwise non-isomorphic gluings of n pentagons satisfying
/// Alexandrov's conditions, sorted by canonical code.
std::vector<Gluing> enumerate_gluings(int n, EnumerateOptions options = {});

/// Text format: `pentagons <n>` then `glue <p>.<s> <q>.<t> <flip|keep>`.
Gluing parse_gluing(std::istream& in);
Gluing parse_gluing_text(const std::string& text);
void write_gluing(std::ostream& out, const Gluing& g);
std::string gluing_text(const Gluing& g);

}  // namespace pentaglue
