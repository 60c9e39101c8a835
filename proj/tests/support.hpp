#ifndef FLATLAND_TESTS_SUPPORT_HPP_
#define FLATLAND_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "flatland/families.hpp"
#include "flatland/symmetry.hpp"
#include "flatland/triangulation.hpp"

namespace flatland::testing {

inline Triangulation make(const std::string& name) {
  return construct_family(parse_family(name)).complex;
}

inline std::string t1(int n, int k) {
  return "T(" + std::to_string(n) + ",1," + std::to_string(k) + ")";
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Triangulation shuffled(const Triangulation& t, std::mt19937& rng) {
  return relabel(t, random_permutation(t.vertex_count(), rng));
}

// Every family member on at most max_vertices vertices.
inline std::vector<NamedTriangulation> catalog_up_to(int max_vertices) {
  std::vector<NamedTriangulation> out;
  for (int n = 1; n <= max_vertices; ++n) {
    for (auto& member : known_catalog(n)) out.push_back(std::move(member));
  }
  return out;
}

}  // namespace flatland::testing

#endif  // FLATLAND_TESTS_SUPPORT_HPP_
