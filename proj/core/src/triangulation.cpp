#include "flatland/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flatland {

namespace {

using Kind = TriangulationError::Kind;

struct Violation {
  Kind kind;
  std::vector<Vertex> simplex;
  std::string message;
};

std::string simplex_string(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

struct Structure {
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> adjacency;
  std::vector<std::vector<int>> star;
};

// Shared checker behind build_triangulation and analyze_faces. Faces must
// already be in range. With stop_at_first the first violation ends the scan.
std::vector<Violation> check_manifold(int n, std::span<const Face> input,
                                      bool stop_at_first, Structure& out) {
  std::vector<Violation> violations;
  auto report = [&](Kind kind, std::vector<Vertex> simplex, std::string msg) {
    violations.push_back({kind, std::move(simplex), std::move(msg)});
    return stop_at_first;
  };

  out.faces.clear();
  out.faces.reserve(input.size());
  for (const Face& raw : input) {
    Face f = sorted_face(raw);
    if (f[0] == f[1] || f[1] == f[2]) {
      if (report(Kind::kNotAManifold, {raw.begin(), raw.end()},
                 "face " + simplex_string(raw) + " repeats a vertex")) {
        return violations;
      }
      continue;
    }
    out.faces.push_back(f);
  }
  std::sort(out.faces.begin(), out.faces.end());
  out.faces.erase(std::unique(out.faces.begin(), out.faces.end()),
                  out.faces.end());
  const int face_count = static_cast<int>(out.faces.size());

  // (edge, face index) incidences grouped by edge.
  std::vector<std::pair<Edge, int>> incidences;
  incidences.reserve(out.faces.size() * 3);
  for (int f = 0; f < face_count; ++f) {
    const Face& t = out.faces[f];
    incidences.push_back({{t[0], t[1]}, f});
    incidences.push_back({{t[0], t[2]}, f});
    incidences.push_back({{t[1], t[2]}, f});
  }
  std::sort(incidences.begin(), incidences.end());

  out.adjacency.assign(out.faces.size(), {-1, -1, -1});
  out.edges.clear();
  std::vector<int> face_root(out.faces.size());
  std::iota(face_root.begin(), face_root.end(), 0);
  auto find_root = [&face_root](int x) {
    while (face_root[x] != x) x = face_root[x] = face_root[face_root[x]];
    return x;
  };
  bool edges_ok = true;
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j].first == incidences[i].first) ++j;
    const Edge e = incidences[i].first;
    out.edges.push_back(e);
    for (std::size_t k = i + 1; k < j; ++k) {
      face_root[find_root(incidences[k].second)] = find_root(incidences[i].second);
    }
    if (j - i != 2) {
      edges_ok = false;
      if (report(Kind::kNotAManifold, {e[0], e[1]},
                 "edge " + simplex_string(e) + " lies in " +
                     std::to_string(j - i) + " face(s), expected 2")) {
        return violations;
      }
    } else {
      const int f = incidences[i].second;
      const int g = incidences[i + 1].second;
      const Face& tf = out.faces[f];
      const Face& tg = out.faces[g];
      for (int c = 0; c < 3; ++c) {
        if (tf[c] != e[0] && tf[c] != e[1]) out.adjacency[f][c] = g;
        if (tg[c] != e[0] && tg[c] != e[1]) out.adjacency[g][c] = f;
      }
    }
    i = j;
  }

  out.star.assign(static_cast<std::size_t>(n), {});
  for (int f = 0; f < face_count; ++f) {
    for (Vertex v : out.faces[f]) out.star[v].push_back(f);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.star[v].empty()) {
      if (report(Kind::kNotAManifold, {v},
                 "vertex " + std::to_string(v) + " lies in no face")) {
        return violations;
      }
      continue;
    }
    // The link must be a connected 2-regular graph.
    std::vector<Edge> link;
    for (int f : out.star[v]) {
      const Face& t = out.faces[f];
      Edge e{-1, -1};
      int k = 0;
      for (Vertex x : t) {
        if (x != v) e[k++] = x;
      }
      link.push_back(e);
    }
    std::vector<Vertex> members;
    for (const Edge& e : link) {
      members.push_back(e[0]);
      members.push_back(e[1]);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    bool single_cycle = members.size() == link.size();
    if (single_cycle) {
      for (Vertex m : members) {
        int d = 0;
        for (const Edge& e : link) d += (e[0] == m) + (e[1] == m);
        single_cycle = single_cycle && d == 2;
      }
    }
    if (single_cycle) {
      // Walk the cycle from members[0]; it must visit every link vertex.
      Vertex prev = -1, cur = members[0];
      std::size_t steps = 0;
      do {
        Vertex next = -1;
        for (const Edge& e : link) {
          Vertex other = e[0] == cur ? e[1] : (e[1] == cur ? e[0] : -1);
          if (other >= 0 && other != prev) {
            next = other;
            break;
          }
        }
        prev = cur;
        cur = next;
        ++steps;
      } while (cur != members[0] && cur >= 0 && steps <= members.size());
      single_cycle = cur == members[0] && steps == members.size();
    }
    if (!single_cycle) {
      if (report(Kind::kNotAManifold, {v},
                 "link of vertex " + std::to_string(v) +
                     " is not a single cycle")) {
        return violations;
      }
    }
  }

  if (edges_ok && face_count > 0) {
    const int root = find_root(0);
    for (int f = 1; f < face_count; ++f) {
      if (find_root(f) != root) {
        const Face& t = out.faces[f];
        report(Kind::kDisconnected, {t[0], t[1], t[2]},
               "face " + simplex_string(t) +
                   " is not connected to face " + simplex_string(out.faces[0]));
        break;
      }
    }
  }
  return violations;
}

void check_labels(int n, std::span<const Face> faces) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (Vertex v : faces[i]) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("face " + std::to_string(i) + " " +
                                    simplex_string(faces[i]) +
                                    " has a label outside 0.." +
                                    std::to_string(n - 1));
      }
    }
  }
}

}  // namespace

int Triangulation::find_face(Vertex a, Vertex b, Vertex c) const {
  const Face f = sorted_face({a, b, c});
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) return -1;
  return static_cast<int>(it - faces_.begin());
}

bool Triangulation::has_edge(Vertex a, Vertex b) const {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("a cycle needs at least 3 vertices");
  }
  auto smallest = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), smallest, vertices_.end());
  if (vertices_.back() < vertices_[1]) {
    std::reverse(vertices_.begin() + 1, vertices_.end());
  }
}

std::string Cycle::to_string(int offset) const {
  std::string out = "C_" + std::to_string(vertices_.size()) + "(";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i] + offset);
  }
  return out + ")";
}

SurfaceType SurfaceType::from_euler(int euler, bool orientable) {
  SurfaceType s;
  if (orientable) {
    if (euler > 2 || (2 - euler) % 2 != 0) return s;
    s.genus = (2 - euler) / 2;
    s.kind = s.genus == 0   ? Kind::kSphere
             : s.genus == 1 ? Kind::kTorus
                            : Kind::kOrientableGenus;
  } else {
    if (euler > 1) return s;
    s.genus = 2 - euler;
    s.kind = s.genus == 2 ? Kind::kKleinBottle : Kind::kNonOrientableGenus;
  }
  return s;
}

std::string SurfaceType::to_string() const {
  switch (kind) {
    case Kind::kSphere:
      return "sphere";
    case Kind::kTorus:
      return "torus";
    case Kind::kKleinBottle:
      return "klein_bottle";
    case Kind::kOrientableGenus:
      return "orientable_genus_" + std::to_string(genus);
    case Kind::kNonOrientableGenus:
      return "nonorientable_genus_" + std::to_string(genus);
    case Kind::kInvalid:
      break;
  }
  return "invalid";
}

Triangulation build_triangulation(int n, std::span<const Face> faces) {
  check_labels(n, faces);
  Structure s;
  auto violations = check_manifold(n, faces, /*stop_at_first=*/true, s);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    const char* prefix =
        v.kind == Kind::kDisconnected ? "Disconnected: " : "NotAManifold: ";
    throw TriangulationError(v.kind, v.simplex, prefix + v.message);
  }
  Triangulation t;
  t.n_ = n;
  t.faces_ = std::move(s.faces);
  t.edges_ = std::move(s.edges);
  t.adjacency_ = std::move(s.adjacency);
  t.star_ = std::move(s.star);
  return t;
}

ManifoldReport analyze_faces(int n, std::span<const Face> faces) {
  ManifoldReport report;
  if (n < 1) {
    report.diagnostics.push_back("vertex count must be at least 1");
    return report;
  }
  std::vector<Face> in_range;
  for (const Face& f : faces) {
    if (std::all_of(f.begin(), f.end(), [n](Vertex v) { return v >= 0 && v < n; })) {
      in_range.push_back(f);
    } else {
      report.diagnostics.push_back("face " + simplex_string(f) +
                                   " has a label outside 0.." +
                                   std::to_string(n - 1));
    }
  }
  Structure s;
  for (const Violation& v : check_manifold(n, in_range, false, s)) {
    report.diagnostics.push_back(
        (v.kind == Kind::kDisconnected ? "Disconnected: " : "NotAManifold: ") +
        v.message);
  }
  report.degrees.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : s.edges) {
    ++report.degrees[e[0]];
    ++report.degrees[e[1]];
  }
  report.euler = n - static_cast<int>(s.edges.size()) +
                 static_cast<int>(s.faces.size());
  if (!report.diagnostics.empty()) return report;
  return analyze(build_triangulation(n, in_range));
}

ManifoldReport analyze(const Triangulation& t) {
  ManifoldReport report;
  report.ok = true;
  report.euler = euler_characteristic(t);
  DegreeProfile profile = degree_profile(t);
  report.degrees = std::move(profile.degrees);
  report.regular_degree = profile.regular_degree;
  report.orientable = is_orientable(t);
  report.surface = SurfaceType::from_euler(report.euler, report.orientable);
  return report;
}

Cycle link_cycle(const Triangulation& t, Vertex v) {
  if (v < 0 || v >= t.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  // Link edges keyed by either endpoint; each link vertex has exactly two.
  std::vector<Edge> link;
  for (int f : t.incident_faces(v)) {
    const Face& face = t.faces()[f];
    Edge e{-1, -1};
    int k = 0;
    for (Vertex x : face) {
      if (x != v) e[k++] = x;
    }
    link.push_back(e);
  }
  std::vector<Vertex> order{link.front()[0]};
  Vertex prev = -1, cur = link.front()[0];
  while (order.size() < link.size()) {
    Vertex next = -1;
    for (const Edge& e : link) {
      Vertex other = e[0] == cur ? e[1] : (e[1] == cur ? e[0] : -1);
      if (other >= 0 && other != prev) {
        next = other;
        break;
      }
    }
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return Cycle(std::move(order));
}

int euler_characteristic(const Triangulation& t) {
  return t.vertex_count() - t.edge_count() + t.face_count();
}

DegreeProfile degree_profile(const Triangulation& t) {
  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(t.vertex_count()), 0);
  for (const Edge& e : t.edges()) {
    ++p.degrees[e[0]];
    ++p.degrees[e[1]];
  }
  if (std::adjacent_find(p.degrees.begin(), p.degrees.end(),
                         std::not_equal_to<>()) == p.degrees.end()) {
    p.regular_degree = p.degrees.front();
  }
  return p;
}

bool is_orientable(const Triangulation& t) {
  // sign[f] = +1 orients face (a,b,c) as a->b->c, -1 as the reverse. An edge
  // {x,y} with x<y runs x->y in a +1 face when it is (a,b) or (b,c).
  const int f_count = t.face_count();
  auto direction = [&t](int f, int sign, Vertex x, Vertex y) {
    const Face& face = t.faces()[f];
    const bool forward = !(x == face[0] && y == face[2]);
    return forward ? sign : -sign;
  };
  std::vector<int> sign(static_cast<std::size_t>(f_count), 0);
  std::vector<int> queue{0};
  sign[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int f = queue[head];
    const Face& face = t.faces()[f];
    for (int c = 0; c < 3; ++c) {
      const int g = t.adjacent_face(f, c);
      Vertex x = face[(c + 1) % 3], y = face[(c + 2) % 3];
      if (x > y) std::swap(x, y);
      const int want = -direction(f, sign[f], x, y);
      if (sign[g] == 0) {
        sign[g] = direction(g, 1, x, y) == want ? 1 : -1;
        queue.push_back(g);
      } else if (direction(g, sign[g], x, y) != want) {
        return false;
      }
    }
  }
  return true;
}

SurfaceType surface_type(const Triangulation& t) {
  return SurfaceType::from_euler(euler_characteristic(t), is_orientable(t));
}

SimpleGraph skeleton_graph(const Triangulation& t, bool complement) {
  SimpleGraph g(t.vertex_count(), t.edges());
  return complement ? g.complement() : g;
}

Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm) {
  std::vector<Face> faces;
  faces.reserve(t.faces().size());
  for (const Face& f : t.faces()) faces.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
  return build_triangulation(t.vertex_count(), faces);
}

bool is_isomorphism(const Triangulation& from, const Triangulation& to,
                    std::span<const Vertex> perm) {
  const int n = from.vertex_count();
  if (n != to.vertex_count() || from.face_count() != to.face_count() ||
      static_cast<int>(perm.size()) != n) {
    return false;
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  // Injective on vertices and faces counts agree, so containment suffices.
  for (const Face& f : from.faces()) {
    if (!to.has_face(perm[f[0]], perm[f[1]], perm[f[2]])) return false;
  }
  return true;
}

}  // namespace flatland
