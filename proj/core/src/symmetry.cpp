#include "flatland/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "flatland/graph.hpp"

namespace flatland {

namespace {

constexpr std::array<std::array<int, 3>, 6> kOrderings{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Runs the first-visit traversal from every start flag and keeps the
// lexicographically smallest code together with every start that attains it.
class FlagTraversal {
 public:
  explicit FlagTraversal(const Triangulation& t)
      : t_(t),
        n_(t.vertex_count()),
        faces_(t.face_count()),
        labels_(static_cast<std::size_t>(n_)),
        visited_(static_cast<std::size_t>(faces_)),
        queue_(static_cast<std::size_t>(faces_)) {}

  void run() {
    best_.clear();
    best_starts_.clear();
    for (int f = 0; f < faces_; ++f) {
      for (const auto& ord : kOrderings) {
        const Face& face = t_.faces()[f];
        traverse(f, face[ord[0]], face[ord[1]], face[ord[2]]);
      }
    }
  }

  const std::vector<int>& best_code() const { return best_; }
  const std::vector<Permutation>& best_labelings() const { return best_starts_; }

 private:
  enum class Cmp { kEqual, kLess, kGreater };

  // Appends one code entry, comparing against the incumbent as it goes.
  bool emit(int value, std::size_t pos, Cmp& cmp) {
    if (cmp == Cmp::kEqual && !best_.empty()) {
      if (value < best_[pos]) {
        cmp = Cmp::kLess;
      } else if (value > best_[pos]) {
        cmp = Cmp::kGreater;
        return false;
      }
    }
    candidate_[pos] = value;
    return true;
  }

  void traverse(int f0, Vertex a, Vertex b, Vertex c) {
    std::fill(labels_.begin(), labels_.end(), -1);
    std::fill(visited_.begin(), visited_.end(), 0);
    candidate_.resize(2 + 3 * static_cast<std::size_t>(faces_));
    Cmp cmp = best_.empty() ? Cmp::kLess : Cmp::kEqual;
    std::size_t pos = 0;
    if (!emit(n_, pos++, cmp) || !emit(faces_, pos++, cmp)) return;

    int next_label = 0;
    labels_[a] = next_label++;
    labels_[b] = next_label++;
    labels_[c] = next_label++;
    visited_[f0] = 1;
    std::size_t head = 0, tail = 0;
    queue_[tail++] = {f0, a, b, c};
    while (head < tail) {
      const auto [f, x, y, z] = queue_[head++];
      if (!emit(labels_[x], pos++, cmp) || !emit(labels_[y], pos++, cmp) ||
          !emit(labels_[z], pos++, cmp)) {
        return;
      }
      const Face& face = t_.faces()[f];
      // Edges (x,y), (y,z), (z,x); each neighbour inherits the opposite
      // direction of the shared edge.
      const std::array<std::array<Vertex, 3>, 3> sides{{{x, y, z}, {y, z, x}, {z, x, y}}};
      for (const auto& [p, q, opposite] : sides) {
        const int corner = static_cast<int>(
            std::find(face.begin(), face.end(), opposite) - face.begin());
        const int g = t_.adjacent_face(f, corner);
        if (visited_[g]) continue;
        visited_[g] = 1;
        const Face& other = t_.faces()[g];
        const Vertex w = other[0] + other[1] + other[2] - p - q;
        if (labels_[w] < 0) labels_[w] = next_label++;
        queue_[tail++] = {g, q, p, w};
      }
    }
    if (cmp == Cmp::kLess) {
      best_.swap(candidate_);
      best_starts_.clear();
    }
    best_starts_.emplace_back(labels_.begin(), labels_.end());
  }

  struct Entry {
    int face;
    Vertex x, y, z;
  };

  const Triangulation& t_;
  int n_;
  int faces_;
  std::vector<int> labels_;
  std::vector<char> visited_;
  std::vector<Entry> queue_;
  std::vector<int> candidate_;
  std::vector<int> best_;
  std::vector<Permutation> best_starts_;
};

template <typename T>
std::vector<std::vector<T>> orbits_of(const std::vector<T>& items,
                                      const std::vector<Permutation>& group,
                                      auto&& act) {
  std::map<T, int> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], static_cast<int>(i));
  std::vector<char> seen(items.size(), 0);
  std::vector<std::vector<T>> orbits;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (seen[i]) continue;
    std::vector<T> orbit;
    for (const Permutation& g : group) {
      const int j = index.at(act(g, items[i]));
      if (!seen[j]) {
        seen[j] = 1;
        orbit.push_back(items[j]);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t v = 0; v < q.size(); ++v) out[v] = p[q[v]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<Vertex>(v);
  return out;
}

std::vector<Flag> all_flags(const Triangulation& t) {
  std::vector<Flag> flags;
  flags.reserve(static_cast<std::size_t>(t.flag_count()));
  for (const Face& f : t.faces()) {
    for (const auto& ord : kOrderings) flags.push_back({f[ord[0]], f[ord[1]], f[ord[2]]});
  }
  return flags;
}

CanonicalForm canonical_form(const Triangulation& t) {
  FlagTraversal walk(t);
  walk.run();
  return CanonicalForm{walk.best_code(), walk.best_labelings().front()};
}

Triangulation canonical_triangulation(const Triangulation& t) {
  return relabel(t, canonical_form(t).relabeling);
}

SymmetryGroup automorphism_group(const Triangulation& t) {
  FlagTraversal walk(t);
  walk.run();
  const auto& labelings = walk.best_labelings();
  const Permutation back = inverse(labelings.front());
  SymmetryGroup group;
  group.elements.reserve(labelings.size());
  for (const Permutation& l : labelings) {
    Permutation sigma = compose(back, l);
    if (!is_isomorphism(t, t, sigma)) {
      throw std::logic_error("canonical traversal produced a non-automorphism");
    }
    group.elements.push_back(std::move(sigma));
  }
  std::sort(group.elements.begin(), group.elements.end());

  std::vector<Vertex> vertices(static_cast<std::size_t>(t.vertex_count()));
  std::iota(vertices.begin(), vertices.end(), 0);
  group.vertex_orbits = orbits_of(vertices, group.elements,
                                  [](const Permutation& g, Vertex v) { return g[v]; });

  std::vector<int> face_ids(static_cast<std::size_t>(t.face_count()));
  std::iota(face_ids.begin(), face_ids.end(), 0);
  group.face_orbits = orbits_of(face_ids, group.elements, [&t](const Permutation& g, int f) {
    const Face& face = t.faces()[f];
    return t.find_face(g[face[0]], g[face[1]], g[face[2]]);
  });

  group.flag_orbits = orbits_of(all_flags(t), group.elements,
                                [](const Permutation& g, const Flag& fl) {
                                  return Flag{g[fl.vertex], g[fl.along], g[fl.apex]};
                                });
  return group;
}

Regularity regularity_flags(const SymmetryGroup& group) {
  return Regularity{group.vertex_orbits.size() == 1, group.flag_orbits.size() == 1};
}

Regularity regularity_flags(const Triangulation& t) {
  return regularity_flags(automorphism_group(t));
}

IsomorphismVerdict find_isomorphism(const Triangulation& a, const Triangulation& b) {
  IsomorphismVerdict verdict;
  auto differ = [&verdict](std::string name, std::string va, std::string vb) {
    verdict.invariant = std::move(name);
    verdict.value_a = std::move(va);
    verdict.value_b = std::move(vb);
    return verdict;
  };
  if (a.vertex_count() != b.vertex_count()) {
    return differ("vertex count", std::to_string(a.vertex_count()),
                  std::to_string(b.vertex_count()));
  }
  if (a.face_count() != b.face_count()) {
    return differ("face count", std::to_string(a.face_count()),
                  std::to_string(b.face_count()));
  }
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.code == cb.code) {
    Permutation map = compose(inverse(cb.relabeling), ca.relabeling);
    if (!is_isomorphism(a, b, map)) {
      throw std::logic_error("equal canonical codes but the induced map is not an isomorphism");
    }
    verdict.map = std::move(map);
    return verdict;
  }
  const bool oa = is_orientable(a), ob = is_orientable(b);
  if (oa != ob) {
    return differ("orientability", oa ? "orientable" : "non-orientable",
                  ob ? "orientable" : "non-orientable");
  }
  const SimpleGraph ea = skeleton_graph(a), eb = skeleton_graph(b);
  std::array<SimpleGraph, 7> ga, gb;
  for (int c = 0; c <= 6; ++c) {
    ga[c] = common_neighbor_graph(ea, c);
    gb[c] = common_neighbor_graph(eb, c);
    const std::string sa = graph_shape(ga[c]).to_string();
    const std::string sb = graph_shape(gb[c]).to_string();
    if (sa != sb) return differ("G_" + std::to_string(c) + " shape", sa, sb);
  }
  for (int c = 0; c <= 6; ++c) {
    const std::string sa = graph_shape(ga[c].intersection(ea)).to_string();
    const std::string sb = graph_shape(gb[c].intersection(eb)).to_string();
    if (sa != sb) return differ("G_" + std::to_string(c) + " meet EG shape", sa, sb);
  }
  return differ("canonical code", "", "");
}

}  // namespace flatland
