#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flatland/census.hpp"
#include "flatland/families.hpp"
#include "flatland/graph.hpp"
#include "flatland/symmetry.hpp"
#include "flatland/tri_io.hpp"
#include "json.hpp"

namespace flatland::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Usage or I/O failure: reported on stderr, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A complex that is well-formed text but not a valid triangulation: exit 1.
struct InvalidComplex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  FaceList faces;
  // Published labels when the input named a family member.
  std::vector<std::string> labels;
  std::string family_name;

  std::string label(Vertex v) const {
    return labels.empty() ? std::to_string(v) : labels[static_cast<std::size_t>(v)];
  }
};

FaceList faces_from_json(const std::string& text, const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  FaceList out;
  try {
    out.n = j.at("n").get<int>();
    for (const auto& f : j.at("faces")) {
      if (f.size() != 3) throw UsageError(path + ": every face needs three vertices");
      Face face{f[0].get<int>(), f[1].get<int>(), f[2].get<int>()};
      for (Vertex v : face) {
        if (v < 0 || v >= out.n) {
          throw UsageError(path + ": vertex " + std::to_string(v) + " out of range");
        }
      }
      std::sort(face.begin(), face.end());
      if (face[0] == face[1] || face[1] == face[2]) {
        throw UsageError(path + ": face repeats a vertex");
      }
      out.faces.push_back(face);
    }
  } catch (const ordered_json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (out.n < 1) throw UsageError(path + ": vertex count must be positive");
  return out;
}

// A path to a `.tri` or `.json` file, or a family name such as T(13,1,2).
Input load(const std::string& source) {
  Input in;
  std::error_code ec;
  if (!fs::exists(source, ec)) {
    FamilySpec spec;
    try {
      spec = parse_family(source);
    } catch (const std::invalid_argument&) {
      throw UsageError(source + ": no such file");
    }
    try {
      NamedTriangulation member = construct_family(spec);
      in.faces = {member.complex.vertex_count(),
                  {member.complex.faces().begin(), member.complex.faces().end()}};
      in.labels = std::move(member.label_table);
      in.family_name = member.name;
    } catch (const BadParameters& e) {
      throw UsageError(e.what());
    }
    return in;
  }
  std::ifstream file(source, std::ios::binary);
  if (!file) throw UsageError(source + ": cannot open");
  std::stringstream buffer;
  buffer << file.rdbuf();
  if (fs::path(source).extension() == ".json") {
    in.faces = faces_from_json(buffer.str(), source);
    return in;
  }
  try {
    in.faces = parse_tri(buffer);
  } catch (const ParseError& e) {
    throw UsageError(source + ":" + std::to_string(e.line()) + ": " +
                     std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
  return in;
}

Triangulation build(const Input& in) {
  try {
    return build_triangulation(in.faces.n, in.faces.faces);
  } catch (const TriangulationError& e) {
    throw InvalidComplex(e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidComplex(e.what());
  }
}

ordered_json faces_json(const Triangulation& t) {
  ordered_json faces = ordered_json::array();
  for (const Face& f : t.faces()) faces.push_back({f[0], f[1], f[2]});
  return faces;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Pretty-prints with two-space indents but keeps arrays of scalars on one
// line, so face lists stay readable.
void dump_json(std::ostream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << ordered_json(key).dump() << ": ";
      dump_json(out, value, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << close << '}';
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      dump_json(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << close << ']';
  } else if (j.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << ']';
  } else {
    out << j.dump();
  }
}

void write_json(std::ostream& out, const ordered_json& j) {
  dump_json(out, j, 0);
  out << '\n';
}

// "6^12" style run-length rendering of a sorted degree list.
std::string degree_summary(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  std::string out;
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(degrees[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::optional<double> resolve_budget(int n, std::optional<double> flag) {
  if (flag) return *flag > 0 ? flag : std::nullopt;
  if (const char* env = std::getenv("FLATLAND_BUDGET_SECS"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw UsageError(std::string("FLATLAND_BUDGET_SECS: not a number: ") + env);
    }
    return v > 0 ? std::optional<double>(v) : std::nullopt;
  }
  return default_time_budget(n);
}

ordered_json report_json(const CensusReport& report) {
  ordered_json items = ordered_json::array();
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    const CensusItem& item = report.items[i];
    items.push_back({{"index", i},
                     {"surface", item.surface.to_string()},
                     {"automorphism_order", item.automorphism_order},
                     {"weakly_regular", item.weakly_regular},
                     {"combinatorially_regular", item.combinatorially_regular},
                     {"families", item.matched_family_names},
                     {"faces", faces_json(item.complex)}});
  }
  return {{"n", report.n},
          {"total", report.total},
          {"torus", report.torus},
          {"klein_bottle", report.klein_bottle},
          {"weakly_regular", report.weakly_regular},
          {"items", items}};
}

void print_report(std::ostream& out, const CensusReport& report) {
  out << "n = " << report.n << ": total " << report.total << ", torus " << report.torus
      << ", klein_bottle " << report.klein_bottle << ", weakly_regular "
      << report.weakly_regular << '\n';
  if (report.items.empty()) return;
  out << std::left << std::setw(7) << "index" << std::setw(14) << "surface" << std::setw(7)
      << "|Aut|" << std::setw(16) << "weakly_regular" << "families" << '\n';
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    const CensusItem& item = report.items[i];
    std::string names;
    for (const auto& name : item.matched_family_names) {
      names += (names.empty() ? "" : " ") + name;
    }
    out << std::setw(7) << i << std::setw(14) << item.surface.to_string() << std::setw(7)
        << item.automorphism_order << std::setw(16) << yes_no(item.weakly_regular)
        << (names.empty() ? "-" : names) << '\n';
  }
}

int cmd_family(const std::string& name, const std::string& out_path, bool json,
               std::ostream& out) {
  FamilySpec spec;
  try {
    spec = parse_family(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  NamedTriangulation member;
  try {
    member = construct_family(spec);
  } catch (const BadParameters& e) {
    throw UsageError(e.what());
  }
  std::ostringstream text;
  if (json) {
    write_json(text, {{"name", member.name},
                      {"n", member.complex.vertex_count()},
                      {"faces", faces_json(member.complex)},
                      {"labels", member.label_table}});
  } else {
    text << "# " << member.name << '\n';
    text << "# labels:";
    for (const auto& l : member.label_table) text << ' ' << l;
    text << '\n';
    write_tri(text, member.complex);
  }
  if (out_path.empty()) {
    out << text.str();
    return kSuccess;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text.str())) throw UsageError(out_path + ": cannot write");
  return kSuccess;
}

int cmd_check(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const Input in = load(path);
  const ManifoldReport r = analyze_faces(in.faces.n, in.faces.faces);
  int edges = 0;
  {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Face& f : in.faces.faces) {
      seen.insert({f[0], f[1]});
      seen.insert({f[0], f[2]});
      seen.insert({f[1], f[2]});
    }
    edges = static_cast<int>(seen.size());
  }
  const std::set<Face> distinct(in.faces.faces.begin(), in.faces.faces.end());
  if (json) {
    ordered_json j{{"valid", r.ok},
                   {"vertices", in.faces.n},
                   {"edges", edges},
                   {"faces", distinct.size()}};
    if (r.ok) {
      j["surface"] = r.surface.to_string();
      j["euler_characteristic"] = r.euler;
      j["orientable"] = r.orientable;
      j["degrees"] = r.degrees;
      j["regular_degree"] = r.regular_degree ? ordered_json(*r.regular_degree) : nullptr;
    }
    j["diagnostics"] = r.diagnostics;
    write_json(out, j);
  } else {
    out << "valid: " << yes_no(r.ok) << '\n';
    out << "vertices: " << in.faces.n << "  edges: " << edges
        << "  faces: " << distinct.size() << '\n';
    if (r.ok) {
      out << "surface: " << r.surface.to_string() << '\n';
      out << "euler_characteristic: " << r.euler << '\n';
      out << "orientable: " << yes_no(r.orientable) << '\n';
      out << "degrees: " << degree_summary(r.degrees) << '\n';
    }
  }
  for (const auto& d : r.diagnostics) err << d << '\n';
  return r.ok ? kSuccess : kNegative;
}

int cmd_invariant(const std::string& path, int c, bool json, std::ostream& out) {
  if (c < 0) throw UsageError("--g must be non-negative");
  const Input in = load(path);
  const Triangulation t = build(in);
  const std::string shape = graph_shape(common_neighbor_graph(skeleton_graph(t), c)).to_string();
  if (json) {
    write_json(out, {{"c", c}, {"shape", shape}});
  } else {
    out << "G_" << c << ": " << shape << '\n';
  }
  return kSuccess;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, bool json,
            std::ostream& out) {
  const Input ia = load(path_a);
  const Input ib = load(path_b);
  const Triangulation a = build(ia);
  const Triangulation b = build(ib);
  const IsomorphismVerdict v = find_isomorphism(a, b);
  if (json) {
    ordered_json j{{"isomorphic", v.isomorphic()}};
    if (v.isomorphic()) {
      j["map"] = *v.map;
      if (!ia.labels.empty() || !ib.labels.empty()) {
        ordered_json labeled = ordered_json::object();
        for (std::size_t x = 0; x < v.map->size(); ++x) {
          labeled[ia.label(static_cast<Vertex>(x))] = ib.label((*v.map)[x]);
        }
        j["labeled_map"] = labeled;
      }
    } else {
      j["invariant"] = v.invariant;
      j["value_a"] = v.value_a;
      j["value_b"] = v.value_b;
    }
    write_json(out, j);
  } else if (v.isomorphic()) {
    out << "isomorphic\nmap:";
    for (std::size_t x = 0; x < v.map->size(); ++x) {
      out << ' ' << ia.label(static_cast<Vertex>(x)) << "->" << ib.label((*v.map)[x]);
    }
    out << '\n';
  } else {
    out << "not isomorphic\ninvariant: " << v.invariant << '\n';
    if (!v.value_a.empty() || !v.value_b.empty()) {
      out << "first: " << v.value_a << "\nsecond: " << v.value_b << '\n';
    }
  }
  return v.isomorphic() ? kSuccess : kNegative;
}

int cmd_aut(const std::string& path, bool json, std::ostream& out) {
  const Input in = load(path);
  const Triangulation t = build(in);
  const SymmetryGroup g = automorphism_group(t);
  const Regularity reg = regularity_flags(g);
  if (json) {
    ordered_json vertex_orbits = ordered_json::array();
    for (const auto& orbit : g.vertex_orbits) {
      ordered_json o = ordered_json::array();
      for (Vertex v : orbit) o.push_back(in.label(v));
      vertex_orbits.push_back(o);
    }
    write_json(out, {{"order", g.order()},
                     {"vertex_orbits", g.vertex_orbits.size()},
                     {"face_orbits", g.face_orbits.size()},
                     {"flag_orbits", g.flag_orbits.size()},
                     {"weakly_regular", reg.weakly_regular},
                     {"combinatorially_regular", reg.combinatorially_regular},
                     {"vertex_orbit_members", vertex_orbits}});
  } else {
    out << "order: " << g.order() << '\n';
    out << "vertex_orbits: " << g.vertex_orbits.size() << '\n';
    out << "face_orbits: " << g.face_orbits.size() << '\n';
    out << "flag_orbits: " << g.flag_orbits.size() << '\n';
    out << "weakly_regular: " << yes_no(reg.weakly_regular) << '\n';
    out << "combinatorially_regular: " << yes_no(reg.combinatorially_regular) << '\n';
  }
  return kSuccess;
}

CensusOptions census_options(int n, int jobs, std::optional<double> budget) {
  if (n < 1) throw UsageError("--n must be positive");
  if (jobs < 1) throw UsageError("--jobs must be positive");
  CensusOptions options;
  options.jobs = jobs;
  options.time_budget_seconds = resolve_budget(n, budget);
  return options;
}

int cmd_enumerate(int n, int jobs, std::optional<double> budget, const std::string& dir,
                  std::ostream& out) {
  const CensusOptions options = census_options(n, jobs, budget);
  const CensusReport report = classify_census(n, options);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError(dir + ": " + ec.message());
  for (std::size_t i = 0; i < report.items.size(); ++i) {
    const CensusItem& item = report.items[i];
    const fs::path file = fs::path(dir) / (std::to_string(n) + "_" + std::to_string(i) + "_" +
                                           item.surface.to_string() + ".tri");
    std::ofstream f(file, std::ios::binary);
    if (!f || !(f << to_tri_string(item.complex))) {
      throw UsageError(file.string() + ": cannot write");
    }
  }
  const fs::path summary = fs::path(dir) / ("census_" + std::to_string(n) + ".json");
  std::ofstream f(summary, std::ios::binary);
  if (!f) throw UsageError(summary.string() + ": cannot write");
  write_json(f, report_json(report));
  print_report(out, report);
  return kSuccess;
}

int cmd_classify(int n, int jobs, std::optional<double> budget, bool json, std::ostream& out) {
  const CensusReport report = classify_census(n, census_options(n, jobs, budget));
  if (json) {
    write_json(out, report_json(report));
  } else {
    print_report(out, report);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-regular triangulations of the torus and Klein bottle", "flatland"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string name, path, path_b, out_path, dir;
  bool json = false;
  int c = 0, n = 0, jobs = 1;
  std::optional<double> budget;

  auto* family = app.add_subcommand("family", "Construct a family member and emit it");
  family->add_option("name", name, "e.g. T(12,1,3), T(6,2,2), B(3,4), K(3,4), Q(5,3)")
      ->required();
  family->add_option("--out", out_path, "Write to a file instead of stdout");
  family->add_flag("--json", json, "Emit JSON instead of .tri text");

  auto* check = app.add_subcommand("check", "Validate a complex and report its surface");
  check->add_option("path", path, ".tri or .json file, or a family name")->required();
  check->add_flag("--json", json);

  auto* invariant = app.add_subcommand("invariant", "Shape of the common-neighbour graph G_C");
  invariant->add_option("path", path)->required();
  invariant->add_option("--g", c, "Common-neighbour count C")->required();
  invariant->add_flag("--json", json);

  auto* iso = app.add_subcommand("iso", "Isomorphism certificate or distinguishing invariant");
  iso->add_option("first", path)->required();
  iso->add_option("second", path_b)->required();
  iso->add_flag("--json", json);

  auto* aut = app.add_subcommand("aut", "Automorphism group order, orbits and regularity");
  aut->add_option("path", path)->required();
  aut->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "Write every degree-6 triangulation on N vertices");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--jobs", jobs, "Worker threads");
  enumerate->add_option("--budget", budget, "Wall-clock budget in seconds (0 = unlimited)");
  enumerate->add_option("--out", dir, "Output directory")->required();

  auto* classify = app.add_subcommand("classify", "Census summary for N vertices");
  classify->add_option("--n", n)->required();
  classify->add_option("--jobs", jobs, "Worker threads");
  classify->add_option("--budget", budget, "Wall-clock budget in seconds (0 = unlimited)");
  classify->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run 'flatland --help' for usage\n";
    return kUsage;
  }

  try {
    if (*family) return cmd_family(name, out_path, json, out);
    if (*check) return cmd_check(path, json, out, err);
    if (*invariant) return cmd_invariant(path, c, json, out);
    if (*iso) return cmd_iso(path, path_b, json, out);
    if (*aut) return cmd_aut(path, json, out);
    if (*enumerate) return cmd_enumerate(n, jobs, budget, dir, out);
    if (*classify) return cmd_classify(n, jobs, budget, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidComplex& e) {
    err << e.what() << '\n';
    return kNegative;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace flatland::cli
