#ifndef FLATLAND_TRIANGULATION_HPP_
#define FLATLAND_TRIANGULATION_HPP_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatland/graph.hpp"

namespace flatland {

/// A triangle; stored with its vertices in increasing order.
using Face = std::array<Vertex, 3>;

/// Raised by build_triangulation when the input is not a connected closed
/// combinatorial 2-manifold. `simplex()` names the offending vertex, edge or
/// face.
class TriangulationError : public std::runtime_error {
 public:
  enum class Kind { kNotAManifold, kDisconnected };

  TriangulationError(Kind kind, std::vector<Vertex> simplex,
                     const std::string& what)
      : std::runtime_error(what), kind_(kind), simplex_(std::move(simplex)) {}

  Kind kind() const { return kind_; }
  const std::vector<Vertex>& simplex() const { return simplex_; }

 private:
  Kind kind_;
  std::vector<Vertex> simplex_;
};

/// A connected closed combinatorial surface on the vertices 0..n-1.
///
/// Instances only come out of build_triangulation, so every edge lies in
/// exactly two faces, every vertex link is one cycle and the face adjacency
/// graph is connected. Faces are kept sorted lexicographically.
class Triangulation {
 public:
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  /// Flags (vertex, edge, face) incident triples: 6 per face.
  int flag_count() const { return 6 * face_count(); }

  std::span<const Face> faces() const { return faces_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Index of the face sharing the edge opposite `corner` of face `f`.
  int adjacent_face(int f, int corner) const { return adjacency_[f][corner]; }
  /// Index into faces() or -1.
  int find_face(Vertex a, Vertex b, Vertex c) const;
  bool has_face(Vertex a, Vertex b, Vertex c) const {
    return find_face(a, b, c) >= 0;
  }
  bool has_edge(Vertex a, Vertex b) const;
  /// Indices of the faces containing v, ascending.
  std::span<const int> incident_faces(Vertex v) const { return star_[v]; }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  friend Triangulation build_triangulation(int n, std::span<const Face> faces);

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> adjacency_;
  std::vector<std::vector<int>> star_;
};

/// Cyclic vertex sequence compared up to rotation and reflection. The stored
/// representative starts at the smallest label and continues toward the
/// smaller of its two cycle neighbours.
class Cycle {
 public:
  explicit Cycle(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  /// `C_6(1,3,2,6,4,5)`; `offset` is added to each label (1 for 1-based output).
  std::string to_string(int offset = 0) const;

  bool operator==(const Cycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SurfaceType {
  enum class Kind {
    kSphere,
    kTorus,
    kKleinBottle,
    kOrientableGenus,
    kNonOrientableGenus,
    kInvalid
  };
  Kind kind = Kind::kInvalid;
  /// Orientable genus g, or non-orientable genus k (number of cross-caps).
  int genus = 0;

  /// `sphere`, `torus`, `klein_bottle`, `orientable_genus_3`, ...
  std::string to_string() const;
  bool operator==(const SurfaceType&) const = default;

  static SurfaceType from_euler(int euler, bool orientable);
};

struct DegreeProfile {
  std::vector<int> degrees;
  std::optional<int> regular_degree;
};

struct ManifoldReport {
  bool ok = false;
  int euler = 0;
  std::vector<int> degrees;
  std::optional<int> regular_degree;
  bool orientable = false;
  SurfaceType surface;
  std::vector<std::string> diagnostics;
};

/// Validates and normalises a face list. Throws std::invalid_argument when
/// n < 1 or a label is out of range, TriangulationError otherwise.
Triangulation build_triangulation(int n, std::span<const Face> faces);

/// Non-throwing variant used for reporting: collects every violation instead
/// of stopping at the first. Out-of-range labels are reported as diagnostics.
ManifoldReport analyze_faces(int n, std::span<const Face> faces);
ManifoldReport analyze(const Triangulation& t);

/// Neighbours of v in rotation order around v.
Cycle link_cycle(const Triangulation& t, Vertex v);

int euler_characteristic(const Triangulation& t);
DegreeProfile degree_profile(const Triangulation& t);
/// Coherent-orientation propagation across shared edges.
bool is_orientable(const Triangulation& t);
SurfaceType surface_type(const Triangulation& t);

/// EG(T) when `complement` is false, NEG(T) otherwise.
SimpleGraph skeleton_graph(const Triangulation& t, bool complement = false);

/// Image of t under v -> perm[v]; perm must be a permutation of 0..n-1.
Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm);

/// True iff perm maps the face set of `from` exactly onto that of `to`.
bool is_isomorphism(const Triangulation& from, const Triangulation& to,
                    std::span<const Vertex> perm);

}  // namespace flatland

#endif  // FLATLAND_TRIANGULATION_HPP_
