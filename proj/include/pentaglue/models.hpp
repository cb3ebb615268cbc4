#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pentaglue/certify.hpp"
#include "pentaglue/gluing.hpp"
#include "pentaglue/metric.hpp"

namespace pentaglue {

/// Graph structure of a catalogue polyhedron, stored as data.
struct ExpectedStructure {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  /// degree -> number of vertices with that degree
  std::map<int, int> degrees;
  /// face size -> number of faces of that size
  std::map<int, int> face_sizes;
  bool flat = false;

  bool simplicial() const;
};

struct CatalogEntry {
  std::string name;
  int pentagons = 0;
  Gluing gluing;
  Embedding embedding;
  ExpectedStructure expected;
  /// Vertex names used in the geometric arguments (P4,2 and P4,3 only).
  std::map<char, int> labels;

  int label(char c) const { return labels.at(c); }
};

/// The eight polyhedra glued from regular pentagons, in size order:
/// P2,1 P2,2 P4,1 P4,2 P4,3 P6 P8 P12.
const std::vector<CatalogEntry>& catalog();

/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

/// Regular dodecahedron with unit edges from golden-ratio coordinates,
/// vertex i at cone point i of the P12 gluing.
Embedding exact_dodecahedron();

/// `vertex i x y z`, `edge i j`, `face i j k ...` lines; `#` starts a
/// comment. Throws EmbeddingError with the line number on parse errors and
/// on validation failures.
Embedding parse_embedding(std::istream& in);
Embedding parse_embedding_text(const std::string& text);
Embedding load_embedding(const std::string& path);
void write_embedding(std::ostream& out, const Embedding& emb);

/// `v` and `f` lines, 1-based, 17 significant digits.
std::string export_obj(const Embedding& emb);
/// Edges are taken from the faces, sorted.
Embedding import_obj(std::istream& in);

/// A straight fold line inside one pentagon, in that pentagon's canonical
/// frame.
struct Crease {
  int pentagon = 0;
  Vec2 from = Vec2::Zero();
  Vec2 to = Vec2::Zero();
};

class NetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pieces of the geodesics realizing the given polyhedron edges, one per
/// pentagon they cross. Edges running along pentagon sides give none.
std::vector<Crease> crease_chords(const GeodesicTable& table,
                                  std::span<const EdgePair> edges);

/// Throws NetError if two creases in one pentagon cross away from their
/// endpoints.
void check_creases(std::span<const Crease> creases);

/// Pentagons laid out along a breadth-first spanning tree from pentagon 0.
/// Tree sides are drawn as glued borders, the rest as cut borders.
std::string export_net_svg(const Gluing& g, std::span<const Crease> creases);

}  // namespace pentaglue
