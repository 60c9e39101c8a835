#include "flatland/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "flatland/families.hpp"
#include "flatland/symmetry.hpp"

namespace flatland {

namespace {

constexpr int kMaxVertices = 32;
constexpr int kDegree = 6;

using Code = std::vector<int>;
using Found = std::map<Code, Triangulation>;

// Partial complex during the search. Every vertex link is a disjoint union of
// paths (or a closed 6-cycle once the vertex is finished).
class SearchState {
 public:
  explicit SearchState(int n) : n_(n) {
    for (auto& row : count_) row.fill(0);
    deg_.fill(0);
    open_.fill(0);
  }

  int vertex_budget() const { return n_; }
  int used() const { return used_; }
  int open_vertices() const { return open_vertices_; }
  const std::vector<Face>& faces() const { return faces_; }

  void add_face(Vertex a, Vertex b, Vertex c) {
    used_history_.push_back(used_);
    used_ = std::max(used_, std::max({a, b, c}) + 1);
    faces_.push_back({a, b, c});
    attach(a, b, c);
    attach(b, c, a);
    attach(a, c, b);
  }

  void remove_last_face() {
    const Face f = faces_.back();
    faces_.pop_back();
    detach(f[0], f[2], f[1]);
    detach(f[1], f[2], f[0]);
    detach(f[0], f[1], f[2]);
    used_ = used_history_.back();
    used_history_.pop_back();
  }

  // The open vertex with the most neighbours (ties: smallest label).
  Vertex pick_vertex() const {
    Vertex best = -1;
    for (Vertex v = 0; v < used_; ++v) {
      if (open_[v] > 0 && (best < 0 || deg_[v] > deg_[best])) best = v;
    }
    return best;
  }

  Vertex first_endpoint(Vertex v) const {
    for (Vertex w = 0; w < used_; ++w) {
      if (count_[v][w] == 1) return w;
    }
    return -1;
  }

  Vertex single_opposite(Vertex v, Vertex w) const { return opposite_[v][w][0]; }
  int degree(Vertex v) const { return deg_[v]; }
  int edge_faces(Vertex v, Vertex w) const { return count_[v][w]; }

  // Whether face {a,b,x} can be added, given that edge ab has one face.
  bool can_add(Vertex a, Vertex b, Vertex x) const {
    return link_accepts(a, b, x) && link_accepts(b, a, x) && link_accepts(x, a, b);
  }

 private:
  // Adds link edge {p,q} of vertex v for a new face; caller checked validity.
  void attach(Vertex p, Vertex q, Vertex third) {
    const int k = count_[p][q];
    opposite_[p][q][k] = third;
    opposite_[q][p][k] = third;
    count_[p][q] = count_[q][p] = static_cast<std::uint8_t>(k + 1);
    for (Vertex v : {p, q}) {
      if (k == 0) {
        ++deg_[v];
        bump_open(v, +1);
      } else {
        bump_open(v, -1);
      }
    }
  }

  void detach(Vertex p, Vertex q, Vertex /*third*/) {
    const int k = count_[p][q] - 1;
    count_[p][q] = count_[q][p] = static_cast<std::uint8_t>(k);
    for (Vertex v : {p, q}) {
      if (k == 0) {
        --deg_[v];
        bump_open(v, -1);
      } else {
        bump_open(v, +1);
      }
    }
  }

  void bump_open(Vertex v, int delta) {
    const bool was = open_[v] > 0;
    open_[v] += delta;
    const bool is = open_[v] > 0;
    open_vertices_ += static_cast<int>(is) - static_cast<int>(was);
  }

  // Other end of the link path of v that starts at endpoint p.
  Vertex path_end(Vertex v, Vertex p) const {
    Vertex prev = p;
    Vertex cur = opposite_[v][p][0];
    while (count_[v][cur] == 2) {
      const Vertex next = opposite_[v][cur][0] == prev ? opposite_[v][cur][1]
                                                        : opposite_[v][cur][0];
      prev = cur;
      cur = next;
    }
    return cur;
  }

  // Adding link edge {p,q} to lk(v) keeps it a union of paths, or closes it
  // into a single 6-cycle.
  bool link_accepts(Vertex v, Vertex p, Vertex q) const {
    const int cp = count_[v][p];
    const int cq = count_[v][q];
    if (cp == 2 || cq == 2) return false;
    if (deg_[v] + (cp == 0) + (cq == 0) > kDegree) return false;
    if (cp == 1 && cq == 1 && path_end(v, p) == q) {
      return deg_[v] == kDegree && open_[v] == 2;
    }
    return true;
  }

  int n_;
  int used_ = 0;
  int open_vertices_ = 0;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> count_;
  std::array<std::array<std::array<Vertex, 2>, kMaxVertices>, kMaxVertices> opposite_{};
  std::array<int, kMaxVertices> deg_;
  // Link path endpoints per vertex (twice the number of open paths).
  std::array<int, kMaxVertices> open_;
  std::vector<Face> faces_;
  std::vector<int> used_history_;
};

struct SharedBudget {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;
  std::atomic<std::uint64_t> node_count{0};
  std::atomic<bool> exceeded{false};
  std::string reason;
  std::mutex reason_mutex;

  void fail(const std::string& why) {
    std::lock_guard<std::mutex> lock(reason_mutex);
    if (!exceeded.exchange(true)) reason = why;
  }
};

class Searcher {
 public:
  Searcher(int n, SharedBudget& budget) : n_(n), budget_(budget) {}

  // Runs from `state`; nodes at `split_depth` go to `frontier` instead of
  // being expanded (split_depth < 0 disables splitting).
  void run(SearchState& state, int split_depth,
           std::vector<std::vector<Face>>* frontier, std::size_t base_faces) {
    split_depth_ = split_depth;
    frontier_ = frontier;
    base_faces_ = base_faces;
    dfs(state, 0);
  }

  Found& found() { return found_; }
  std::uint64_t completions() const { return completions_; }

 private:
  bool tick() {
    if (budget_.exceeded.load(std::memory_order_relaxed)) return false;
    const std::uint64_t count = budget_.node_count.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.nodes && count > *budget_.nodes) {
      budget_.fail("node budget of " + std::to_string(*budget_.nodes) + " exceeded");
      return false;
    }
    if (budget_.seconds && (local_ticks_++ & 0xFFF) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - budget_.start;
      if (elapsed.count() > *budget_.seconds) {
        budget_.fail("time budget of " + std::to_string(*budget_.seconds) +
                     " s exceeded");
        return false;
      }
    }
    return true;
  }

  void record(const SearchState& state) {
    ++completions_;
    Triangulation t = build_triangulation(n_, state.faces());
    CanonicalForm form = canonical_form(t);
    if (found_.count(form.code)) return;
    Triangulation canonical = relabel(t, form.relabeling);
    found_.emplace(std::move(form.code), std::move(canonical));
  }

  void dfs(SearchState& s, int depth) {
    if (!tick()) return;
    if (s.open_vertices() == 0) {
      if (s.used() == n_) record(s);
      return;
    }
    if (split_depth_ >= 0 && depth == split_depth_) {
      frontier_->emplace_back(s.faces().begin() + static_cast<std::ptrdiff_t>(base_faces_),
                              s.faces().end());
      return;
    }
    const Vertex a = s.pick_vertex();
    const Vertex b = s.first_endpoint(a);
    const Vertex c = s.single_opposite(a, b);
    const bool saturated = s.degree(a) == kDegree;
    const Vertex limit = s.used() < n_ ? s.used() + 1 : s.used();
    for (Vertex x = 0; x < limit; ++x) {
      if (x == a || x == b || x == c) continue;
      if (saturated && s.edge_faces(a, x) != 1) continue;
      if (!s.can_add(a, b, x)) continue;
      s.add_face(a, b, x);
      dfs(s, depth + 1);
      s.remove_last_face();
      if (budget_.exceeded.load(std::memory_order_relaxed)) return;
    }
  }

  int n_;
  SharedBudget& budget_;
  int split_depth_ = -1;
  std::vector<std::vector<Face>>* frontier_ = nullptr;
  std::size_t base_faces_ = 0;
  std::uint64_t local_ticks_ = 0;
  std::uint64_t completions_ = 0;
  Found found_;
};

// lk(0) = C_6(1,...,6).
SearchState root_state(int n) {
  SearchState s(n);
  for (Vertex i = 1; i <= 6; ++i) s.add_face(0, i, i % 6 + 1);
  return s;
}

void merge_into(Found& into, Found& from) {
  for (auto& [code, t] : from) into.emplace(code, std::move(t));
}

}  // namespace

std::optional<double> default_time_budget(int n) {
  if (n <= 12) return std::nullopt;
  return 7200.0;
}

std::vector<Triangulation> enumerate_degree_regular(int n, const CensusOptions& options,
                                                    CensusStats* stats) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (n > kMaxVertices) {
    throw std::invalid_argument("enumeration supports at most " +
                                std::to_string(kMaxVertices) + " vertices");
  }
  if (n <= kDegree) {
    if (stats) *stats = {};
    return {};
  }
  SharedBudget budget;
  budget.seconds = options.time_budget_seconds;
  budget.nodes = options.node_budget;

  Found found;
  std::uint64_t completions = 0;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    SearchState state = root_state(n);
    Searcher searcher(n, budget);
    searcher.run(state, -1, nullptr, 0);
    found.swap(searcher.found());
    completions = searcher.completions();
  } else {
    // Split the tree at the shallowest depth that yields enough subtrees.
    std::vector<std::vector<Face>> frontier;
    Found shallow;
    std::uint64_t shallow_completions = 0;
    const std::size_t base = root_state(n).faces().size();
    for (int depth = 1;; ++depth) {
      frontier.clear();
      SearchState state = root_state(n);
      Searcher splitter(n, budget);
      splitter.run(state, depth, &frontier, base);
      shallow.swap(splitter.found());
      shallow_completions = splitter.completions();
      if (frontier.size() >= static_cast<std::size_t>(8 * jobs) || frontier.empty() ||
          depth >= 4 * n || budget.exceeded) {
        break;
      }
    }
    std::atomic<std::size_t> next{0};
    std::vector<Found> partial(static_cast<std::size_t>(jobs));
    std::vector<std::uint64_t> partial_completions(static_cast<std::size_t>(jobs), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          Searcher searcher(n, budget);
          for (std::size_t i = next++; i < frontier.size(); i = next++) {
            SearchState state = root_state(n);
            for (const Face& f : frontier[i]) state.add_face(f[0], f[1], f[2]);
            searcher.run(state, -1, nullptr, 0);
            if (budget.exceeded) break;
          }
          partial[w].swap(searcher.found());
          partial_completions[w] = searcher.completions();
        } catch (...) {
          errors[w] = std::current_exception();
          budget.fail("worker failed");
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    found.swap(shallow);
    completions = shallow_completions;
    for (int w = 0; w < jobs; ++w) {
      merge_into(found, partial[w]);
      completions += partial_completions[w];
    }
  }
  if (budget.exceeded) {
    throw ResourceLimit("enumeration of " + std::to_string(n) +
                        "-vertex triangulations stopped: " + budget.reason);
  }
  if (stats) {
    stats->nodes = budget.node_count.load();
    stats->completions = completions;
  }
  std::vector<Triangulation> out;
  out.reserve(found.size());
  for (auto& [code, t] : found) out.push_back(std::move(t));
  return out;
}

CensusReport classify_items(int n, std::vector<Triangulation> items) {
  CensusReport report;
  report.n = n;
  std::map<Code, std::vector<std::string>> names_by_code;
  for (const NamedTriangulation& member : known_catalog(n)) {
    names_by_code[canonical_form(member.complex).code].push_back(member.name);
  }
  for (Triangulation& t : items) {
    CensusItem item{std::move(t), {}, false, false, 0, {}};
    const SymmetryGroup group = automorphism_group(item.complex);
    const Regularity reg = regularity_flags(group);
    item.surface = surface_type(item.complex);
    item.weakly_regular = reg.weakly_regular;
    item.combinatorially_regular = reg.combinatorially_regular;
    item.automorphism_order = group.order();
    auto it = names_by_code.find(canonical_form(item.complex).code);
    if (it != names_by_code.end()) item.matched_family_names = it->second;
    ++report.total;
    report.torus += item.surface.kind == SurfaceType::Kind::kTorus;
    report.klein_bottle += item.surface.kind == SurfaceType::Kind::kKleinBottle;
    report.weakly_regular += item.weakly_regular;
    report.items.push_back(std::move(item));
  }
  return report;
}

CensusReport classify_census(int n, const CensusOptions& options) {
  return classify_items(n, enumerate_degree_regular(n, options));
}

}  // namespace flatland
