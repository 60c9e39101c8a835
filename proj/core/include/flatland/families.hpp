#ifndef FLATLAND_FAMILIES_HPP_
#define FLATLAND_FAMILIES_HPP_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flatland/triangulation.hpp"

namespace flatland {

/// Parametric degree-6 triangulations of the torus (T*) and Klein bottle
/// (B, K, Q).
enum class FamilyTag { kT1, kT2, kTM, kB, kK, kQ };

class BadParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters in display order:
///   T1: T_{a,1,b}       (n, k)
///   T2: T_{a,2,b}       (n, k)
///   TM: T_{a,b,c}       (n, m, k)   m rows of n vertices, twist k
///   B:  B_{a,b}         (m, n)
///   K:  K_{a,b}         (m, 2n)     b is the even row count
///   Q:  Q_{a,b}         (2m+1, n)
struct FamilySpec {
  FamilyTag tag = FamilyTag::kT1;
  int a = 0;
  int b = 0;
  int c = 0;

  static FamilySpec T1(int n, int k) { return {FamilyTag::kT1, n, k, 0}; }
  static FamilySpec T2(int n, int k) { return {FamilyTag::kT2, n, k, 0}; }
  static FamilySpec TM(int n, int m, int k) { return {FamilyTag::kTM, n, m, k}; }
  static FamilySpec B(int m, int n) { return {FamilyTag::kB, m, n, 0}; }
  static FamilySpec K(int m, int two_n) { return {FamilyTag::kK, m, two_n, 0}; }
  static FamilySpec Q(int two_m_plus_1, int n) {
    return {FamilyTag::kQ, two_m_plus_1, n, 0};
  }

  int vertex_count() const;
  int face_count() const;
  bool orientable() const { return tag <= FamilyTag::kTM; }
  /// Display name, e.g. `T_{12,1,3}`, `K_{3,4}`.
  std::string name() const;
  /// Argument form, e.g. `T(12,1,3)`, `K(3,4)`.
  std::string cli_name() const;

  auto operator<=>(const FamilySpec&) const = default;
};

/// Description of the violated constraint, or nullopt when in range.
std::optional<std::string> range_violation(const FamilySpec& spec);

/// Accepts `T(n,1,k)`, `T(n,2,k)`, `T(n,m,k)`, `B(m,n)`, `K(m,2n)`,
/// `Q(2m+1,n)` and the display form `T_{n,1,k}`. Syntax errors throw
/// std::invalid_argument; the returned spec is not range-checked.
FamilySpec parse_family(std::string_view text);

struct NamedTriangulation {
  std::string name;
  FamilySpec spec;
  Triangulation complex;
  /// label_table[v] is the published label of internal vertex v.
  std::vector<std::string> label_table;
};

/// Builds the family member from its face formula. Throws BadParameters when
/// the spec is out of range.
NamedTriangulation construct_family(const FamilySpec& spec);

/// Every in-range spec on n vertices, ordered by (tag, parameters).
std::vector<FamilySpec> catalog_specs(int n);
/// catalog_specs(n), constructed. Isomorphic duplicates are kept.
std::vector<NamedTriangulation> known_catalog(int n);

/// The general Q_{2m+1,n} face list (u/v grid with the twisted seam), valid
/// for every n >= 2. construct_family uses it for n >= 3; for n = 2 the
/// cyclic construction on 4m+2 labels is used instead.
std::vector<Face> q_grid_faces(int two_m_plus_1, int n);

}  // namespace flatland

#endif  // FLATLAND_FAMILIES_HPP_
