#include "flatland/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace flatland {

SimpleGraph::SimpleGraph(int n)
    : n_(n),
      matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e[0], e[1]);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::intersection(const SimpleGraph& other) const {
  if (other.n_ != n_) throw std::invalid_argument("vertex counts differ");
  SimpleGraph out(n_);
  for (const Edge& e : edges()) {
    if (other.adjacent(e[0], e[1])) out.add_edge(e[0], e[1]);
  }
  return out;
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (other.n_ != n_) return false;
  for (const Edge& e : edges()) {
    if (!other.adjacent(e[0], e[1])) return false;
  }
  return true;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation size differs from vertex count");
  }
  SimpleGraph out(n_);
  for (const Edge& e : edges()) out.add_edge(perm[e[0]], perm[e[1]]);
  return out;
}

SimpleGraph common_neighbor_graph(const SimpleGraph& g, int c) {
  if (c < 0) throw std::invalid_argument("common-neighbour count must be >= 0");
  const int n = g.vertex_count();
  SimpleGraph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      int common = 0;
      for (Vertex w : g.neighbors(u)) {
        if (g.adjacent(v, w)) ++common;
      }
      if (common == c) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

ComponentShape classify_component(const SimpleGraph& g,
                                  const std::vector<Vertex>& members) {
  ComponentShape shape;
  const int v = static_cast<int>(members.size());
  int twice_edges = 0;
  int max_degree = 0;
  bool all_two = true;
  std::vector<int> degrees;
  degrees.reserve(members.size());
  for (Vertex x : members) {
    const int d = g.degree(x);
    twice_edges += d;
    max_degree = std::max(max_degree, d);
    all_two = all_two && d == 2;
    degrees.push_back(d);
  }
  const int e = twice_edges / 2;
  shape.vertices = v;
  shape.edges = e;
  using Kind = ComponentShape::Kind;
  if (v == 1) {
    shape.kind = Kind::kIsolated;
  } else if (all_two && e == v) {
    // K_3 lands here and is reported as C_3.
    shape.kind = Kind::kCycle;
  } else if (e == v * (v - 1) / 2) {
    shape.kind = Kind::kComplete;
  } else if (e == v - 1 && max_degree <= 2) {
    shape.kind = Kind::kPath;
  } else {
    shape.kind = Kind::kOther;
    std::sort(degrees.begin(), degrees.end());
    shape.degrees = std::move(degrees);
  }
  return shape;
}

std::string render_component(const ComponentShape& c) {
  using Kind = ComponentShape::Kind;
  switch (c.kind) {
    case Kind::kCycle:
      return "C_" + std::to_string(c.vertices);
    case Kind::kComplete:
      return "K_" + std::to_string(c.vertices);
    case Kind::kPath:
      return "P_" + std::to_string(c.vertices);
    case Kind::kIsolated:
      return "null_1";
    case Kind::kOther: {
      std::string s = "G(" + std::to_string(c.vertices) + "," +
                      std::to_string(c.edges) + ";";
      for (std::size_t i = 0; i < c.degrees.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.degrees[i]);
      }
      return s + ")";
    }
  }
  return {};
}

}  // namespace

GraphShape graph_shape(const SimpleGraph& g) {
  const int n = g.vertex_count();
  GraphShape shape;
  shape.vertex_count = n;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    shape.components.push_back(classify_component(g, members));
  }
  std::sort(shape.components.begin(), shape.components.end());
  return shape;
}

int GraphShape::count(ComponentShape::Kind kind) const {
  return static_cast<int>(std::count_if(
      components.begin(), components.end(),
      [kind](const ComponentShape& c) { return c.kind == kind; }));
}

std::string GraphShape::to_string() const {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += '+';
    out += term;
  };
  int isolated = 0;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    const int mult = static_cast<int>(j - i);
    if (components[i].kind == ComponentShape::Kind::kIsolated) {
      isolated += mult;
    } else {
      append((mult > 1 ? std::to_string(mult) : std::string()) +
             render_component(components[i]));
    }
    i = j;
  }
  if (isolated > 0 || out.empty()) append("null_" + std::to_string(isolated));
  return out;
}

namespace {

// One round of colour refinement run jointly on both graphs so that colour
// ids are comparable. Returns false when the colour histograms diverge.
bool refine_jointly(const SimpleGraph& g, const SimpleGraph& h,
                    std::vector<int>& cg, std::vector<int>& ch) {
  using Signature = std::pair<int, std::vector<int>>;
  auto signatures = [](const SimpleGraph& x, const std::vector<int>& colors) {
    std::vector<Signature> sigs(colors.size());
    for (Vertex v = 0; v < x.vertex_count(); ++v) {
      sigs[v].first = colors[v];
      for (Vertex w : x.neighbors(v)) sigs[v].second.push_back(colors[w]);
      std::sort(sigs[v].second.begin(), sigs[v].second.end());
    }
    return sigs;
  };
  std::size_t classes = 0;
  for (;;) {
    auto sg = signatures(g, cg);
    auto sh = signatures(h, ch);
    std::map<Signature, int> ids;
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> hist_g(ids.size(), 0), hist_h(ids.size(), 0);
    for (std::size_t v = 0; v < sg.size(); ++v) ++hist_g[cg[v] = ids[sg[v]]];
    for (std::size_t v = 0; v < sh.size(); ++v) ++hist_h[ch[v] = ids[sh[v]]];
    if (hist_g != hist_h) return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

class GraphMatcher {
 public:
  GraphMatcher(const SimpleGraph& g, const SimpleGraph& h,
               std::vector<int> cg, std::vector<int> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)) {
    const int n = g.vertex_count();
    image_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    // Search order: breadth-first within components, roots taken from the
    // rarest colour class first.
    std::vector<int> class_size(static_cast<std::size_t>(n) + 1, 0);
    for (int c : cg_) ++class_size[c];
    std::vector<Vertex> roots(static_cast<std::size_t>(n));
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) {
      return class_size[cg_[a]] < class_size[cg_[b]];
    });
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex r : roots) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order_.size();
      order_.push_back(r);
      while (head < order_.size()) {
        Vertex x = order_[head++];
        for (Vertex y : g.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            order_.push_back(y);
          }
        }
      }
    }
    position_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
  }

  bool run() { return extend(0); }

 private:
  bool consistent(Vertex u, Vertex candidate, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex x = order_[i];
      if (g_.adjacent(u, x) != h_.adjacent(candidate, image_[x])) return false;
    }
    return true;
  }

  bool try_candidate(Vertex u, Vertex c, std::size_t depth) {
    if (used_[c] || ch_[c] != cg_[u] || !consistent(u, c, depth)) return false;
    image_[u] = c;
    used_[c] = 1;
    if (extend(depth + 1)) return true;
    used_[c] = 0;
    image_[u] = -1;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex u = order_[depth];
    Vertex anchor = -1;
    for (Vertex w : g_.neighbors(u)) {
      if (position_[w] < static_cast<int>(depth)) {
        anchor = w;
        break;
      }
    }
    if (anchor >= 0) {
      for (Vertex c : h_.neighbors(image_[anchor])) {
        if (try_candidate(u, c, depth)) return true;
      }
      return false;
    }
    for (Vertex c = 0; c < h_.vertex_count(); ++c) {
      if (try_candidate(u, c, depth)) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  std::vector<int> cg_, ch_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

bool graphs_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return false;
  }
  std::vector<int> cg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> ch(static_cast<std::size_t>(h.vertex_count()), 0);
  if (!refine_jointly(g, h, cg, ch)) return false;
  return GraphMatcher(g, h, std::move(cg), std::move(ch)).run();
}

}  // namespace flatland
