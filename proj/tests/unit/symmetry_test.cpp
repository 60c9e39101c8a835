#include <gtest/gtest.h>

#include <random>

#include "flatland/symmetry.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace flatland {
namespace {

using testing::make;

Triangulation tetrahedron() {
  const std::vector<Face> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return build_triangulation(4, faces);
}

TEST(CanonicalForm, InvariantUnderShuffles) {
  std::mt19937 rng(1);
  for (const char* name : {"T(12,1,3)", "B(4,3)", "Q(5,3)", "T(6,2,2)", "K(3,6)"}) {
    const Triangulation t = make(name);
    const CanonicalForm base = canonical_form(t);
    for (int trial = 0; trial < 10; ++trial) {
      const Triangulation u = testing::shuffled(t, rng);
      const CanonicalForm other = canonical_form(u);
      EXPECT_EQ(other.code, base.code) << name;
      EXPECT_EQ(relabel(u, other.relabeling), relabel(t, base.relabeling)) << name;
    }
  }
}

TEST(CanonicalForm, SeparatesAndJoinsTorusTwists) {
  EXPECT_EQ(canonical_form(make("T(13,1,2)")).code, canonical_form(make("T(13,1,4)")).code);
  EXPECT_NE(canonical_form(make("T(12,1,2)")).code, canonical_form(make("T(12,1,3)")).code);
}

TEST(FindIsomorphism, ReturnsVerifiedMaps) {
  const IsomorphismVerdict v = find_isomorphism(make("T(13,1,2)"), make("T(13,1,4)"));
  ASSERT_TRUE(v.isomorphic());
  EXPECT_TRUE(is_isomorphism(make("T(13,1,2)"), make("T(13,1,4)"), *v.map));
  EXPECT_TRUE(is_isomorphism(make("T(13,1,2)"), make("T(13,1,4)"), oracle::multiplier_map(13, 4)));
  EXPECT_TRUE(find_isomorphism(make("T(4,4,2)"), make("T(8,2,2)")).isomorphic());
}

TEST(FindIsomorphism, EighteenVertexTwistsFourAndSevenAgree) {
  const Triangulation a = make("T(18,1,4)");
  const Triangulation b = make("T(18,1,7)");
  EXPECT_TRUE(is_isomorphism(a, b, oracle::multiplier_map(18, 7)));
  EXPECT_TRUE(is_isomorphism(a, b, oracle::multiplier_map(18, 11)));
  EXPECT_TRUE(find_isomorphism(a, b).isomorphic());
}

TEST(FindIsomorphism, NamesTheDistinguishingInvariant) {
  const IsomorphismVerdict v = find_isomorphism(make("T(6,2,2)"), make("T(12,1,4)"));
  EXPECT_FALSE(v.isomorphic());
  EXPECT_FALSE(v.invariant.empty());

  EXPECT_EQ(find_isomorphism(make("T(7,1,2)"), make("T(8,1,2)")).invariant, "vertex count");
  EXPECT_EQ(find_isomorphism(make("T(12,1,2)"), make("B(3,4)")).invariant, "orientability");
  const IsomorphismVerdict g = find_isomorphism(make("T(12,1,2)"), make("T(12,1,4)"));
  EXPECT_EQ(g.invariant.rfind("G_", 0), 0u) << g.invariant;
  EXPECT_NE(g.value_a, g.value_b);
}

TEST(AutomorphismGroup, KnownOrders) {
  EXPECT_EQ(automorphism_group(make("T(10,1,2)")).order(), 20);
  EXPECT_EQ(automorphism_group(make("T(12,1,4)")).order(), 48);
  EXPECT_EQ(automorphism_group(make("T(7,1,2)")).order(), 42);
  const SymmetryGroup tet = automorphism_group(tetrahedron());
  EXPECT_EQ(tet.order(), 24);
  const Regularity r = regularity_flags(tet);
  EXPECT_TRUE(r.weakly_regular);
  EXPECT_TRUE(r.combinatorially_regular);
}

TEST(AutomorphismGroup, IdentityFirstAndClosedUnderComposition) {
  const SymmetryGroup g = automorphism_group(make("T(15,1,3)"));
  ASSERT_FALSE(g.elements.empty());
  Permutation id(15);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(g.elements.front(), id);
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      EXPECT_TRUE(std::binary_search(g.elements.begin(), g.elements.end(), compose(a, b)));
    }
  }
}

TEST(AutomorphismGroup, OrbitPartitions) {
  const SymmetryGroup g = automorphism_group(make("Q(5,3)"));
  std::size_t vertices = 0, faces = 0, flags = 0;
  for (const auto& o : g.vertex_orbits) vertices += o.size();
  for (const auto& o : g.face_orbits) faces += o.size();
  for (const auto& o : g.flag_orbits) flags += o.size();
  EXPECT_EQ(vertices, 15u);
  EXPECT_EQ(faces, 30u);
  EXPECT_EQ(flags, 180u);
  // The flag action is free, so every flag orbit has |Aut| elements.
  for (const auto& o : g.flag_orbits) EXPECT_EQ(static_cast<int>(o.size()), g.order());
}

TEST(Regularity, KnownCases) {
  const Regularity three = regularity_flags(make("T(3,3,0)"));
  EXPECT_TRUE(three.weakly_regular);
  EXPECT_TRUE(three.combinatorially_regular);
  EXPECT_TRUE(regularity_flags(make("T(6,2,2)")).combinatorially_regular);
  const Regularity q53 = regularity_flags(make("Q(5,3)"));
  EXPECT_FALSE(q53.weakly_regular);
  EXPECT_FALSE(q53.combinatorially_regular);
  EXPECT_TRUE(regularity_flags(make("Q(9,2)")).weakly_regular);
}

TEST(AutomorphismGroup, OrderDividesFlagCount) {
  for (const auto& member : testing::catalog_up_to(30)) {
    const int order = automorphism_group(member.complex).order();
    EXPECT_EQ(member.complex.flag_count() % order, 0) << member.name;
  }
}

TEST(AutomorphismGroup, MatchesPermutationFilterOnSmallComplexes) {
  std::mt19937 rng(17);
  std::vector<Triangulation> small{tetrahedron()};
  for (const auto& m : testing::catalog_up_to(9)) small.push_back(m.complex);
  for (const Triangulation& t : small) {
    const Triangulation u = testing::shuffled(t, rng);
    EXPECT_EQ(automorphism_group(u).elements, oracle::automorphisms_by_filter(u));
  }
}

}  // namespace
}  // namespace flatland
