#ifndef FLATLAND_SYMMETRY_HPP_
#define FLATLAND_SYMMETRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "flatland/triangulation.hpp"

namespace flatland {

/// Vertex bijection stored as perm[v] = image of v.
using Permutation = std::vector<Vertex>;

/// Incident triple (vertex, edge, face): the edge is {vertex, along} and the
/// face is {vertex, along, apex}.
struct Flag {
  Vertex vertex = 0;
  Vertex along = 0;
  Vertex apex = 0;

  auto operator<=>(const Flag&) const = default;
};

/// Relabelling-invariant encoding of a triangulation.
///
/// The code is the lexicographically smallest sequence produced by a
/// breadth-first walk over the faces started from every flag: the start flag
/// gets labels 0,1,2, every other vertex is labelled on first sight, and each
/// face is emitted as it leaves the queue. Two triangulations are isomorphic
/// iff their codes agree.
struct CanonicalForm {
  std::vector<int> code;
  /// relabeling[v] = canonical label of input vertex v.
  Permutation relabeling;
};

CanonicalForm canonical_form(const Triangulation& t);

/// The input relabelled by its canonical form.
Triangulation canonical_triangulation(const Triangulation& t);

struct SymmetryGroup {
  /// All automorphisms, sorted lexicographically (identity first).
  std::vector<Permutation> elements;
  std::vector<std::vector<Vertex>> vertex_orbits;
  /// Faces given by their index in Triangulation::faces().
  std::vector<std::vector<int>> face_orbits;
  std::vector<std::vector<Flag>> flag_orbits;

  int order() const { return static_cast<int>(elements.size()); }
};

SymmetryGroup automorphism_group(const Triangulation& t);

struct Regularity {
  bool weakly_regular = false;           // vertex-transitive
  bool combinatorially_regular = false;  // flag-transitive
};

Regularity regularity_flags(const Triangulation& t);
Regularity regularity_flags(const SymmetryGroup& group);

/// Outcome of find_isomorphism: either a verified map or the first invariant
/// that tells the two complexes apart.
struct IsomorphismVerdict {
  std::optional<Permutation> map;
  /// Empty when isomorphic. One of "vertex count", "face count",
  /// "orientability", "G_<c> shape", "G_<c> meet EG shape", "canonical code".
  std::string invariant;
  std::string value_a;
  std::string value_b;

  bool isomorphic() const { return map.has_value(); }
};

IsomorphismVerdict find_isomorphism(const Triangulation& a, const Triangulation& b);

/// All flags of t in a fixed order: faces in index order, then the six
/// orderings of each face.
std::vector<Flag> all_flags(const Triangulation& t);

/// Composition (p * q)[v] = p[q[v]].
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

}  // namespace flatland

#endif  // FLATLAND_SYMMETRY_HPP_
