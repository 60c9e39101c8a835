#include "flatland/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace flatland {

namespace {

// Representative of x modulo n in 1..n (labels in the face formulas are 1-based).
int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

std::vector<int> params_of(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::kT1:
      return {s.a, 1, s.b};
    case FamilyTag::kT2:
      return {s.a, 2, s.b};
    case FamilyTag::kTM:
      return {s.a, s.b, s.c};
    default:
      return {s.a, s.b};
  }
}

char letter_of(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kB:
      return 'B';
    case FamilyTag::kK:
      return 'K';
    case FamilyTag::kQ:
      return 'Q';
    default:
      return 'T';
  }
}

std::string pair_label(char letter, int i, int j) {
  return std::string(1, letter) + "_{" + std::to_string(i) + "," +
         std::to_string(j) + "}";
}

// T_{n,1,k}: {i, i+k, i+k+1}, {i, i+1, i+k+1}, labels 1..n mod n.
std::vector<Face> t1_faces(int n, int k) {
  std::vector<Face> faces;
  for (int i = 1; i <= n; ++i) {
    faces.push_back({i - 1, wrap(i + k, n) - 1, wrap(i + k + 1, n) - 1});
    faces.push_back({i - 1, wrap(i + 1, n) - 1, wrap(i + k + 1, n) - 1});
  }
  return faces;
}

// T_{n,2,k} on u_1..u_n (0..n-1) and v_1..v_n (n..2n-1).
std::vector<Face> t2_faces(int n, int k) {
  auto u = [n](int i) { return wrap(i, n) - 1; };
  auto v = [n](int i) { return n + wrap(i, n) - 1; };
  std::vector<Face> faces;
  for (int i = 1; i <= n; ++i) {
    faces.push_back({u(i), u(i + 1), v(i + 1)});
    faces.push_back({u(i), v(i), v(i + 1)});
    faces.push_back({u(i + k), u(i + k + 1), v(i)});
    faces.push_back({u(i + k + 1), v(i), v(i + 1)});
  }
  return faces;
}

// T_{n,m,k}: rows i = 1..m of n vertices u_{i,j}, row-major.
std::vector<Face> tm_faces(int n, int m, int k) {
  auto u = [n](int i, int j) { return (i - 1) * n + wrap(j, n) - 1; };
  std::vector<Face> faces;
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      faces.push_back({u(i, j), u(i, j + 1), u(i + 1, j + 1)});
      faces.push_back({u(i, j), u(i + 1, j), u(i + 1, j + 1)});
    }
  }
  for (int j = 1; j <= n; ++j) {
    faces.push_back({u(m, j), u(m, j + 1), u(1, j + k + 1)});
    faces.push_back({u(m, j), u(1, j + k), u(1, j + k + 1)});
  }
  return faces;
}

// B_{m,n}: rows i = 1..n (mod n), columns j = 1..m, v_{i,j} row-major.
std::vector<Face> b_faces(int m, int n) {
  auto v = [m, n](int i, int j) { return (wrap(i, n) - 1) * m + j - 1; };
  std::vector<Face> faces;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m - 1; ++j) {
      faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
    faces.push_back({v(i, m), v(n + 2 - i, 1), v(n + 1 - i, 1)});
    faces.push_back({v(i, m), v(i + 1, m), v(n + 1 - i, 1)});
  }
  return faces;
}

// K_{m,2n}: rows i = 1..2n (mod 2n), columns j = 1..m; the two halves of the
// rows use opposite diagonals.
std::vector<Face> k_faces(int m, int two_n) {
  const int n = two_n / 2;
  auto v = [m, two_n](int i, int j) { return (wrap(i, two_n) - 1) * m + j - 1; };
  std::vector<Face> faces;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m - 1; ++j) {
      faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j)});
      faces.push_back({v(i, j + 1), v(i + 1, j), v(i + 1, j + 1)});
    }
    faces.push_back({v(i, m), v(i + 1, m), v(two_n + 2 - i, 1)});
    faces.push_back({v(i + 1, m), v(two_n + 2 - i, 1), v(two_n + 1 - i, 1)});
  }
  for (int i = n + 1; i <= two_n; ++i) {
    for (int j = 1; j <= m - 1; ++j) {
      faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
    faces.push_back({v(i, m), v(i + 1, m), v(two_n + 1 - i, 1)});
    faces.push_back({v(i, m), v(two_n + 2 - i, 1), v(two_n + 1 - i, 1)});
  }
  return faces;
}

// Q_{2m+1,2}: {i, i+1, i+2}, {i, i+2, i+2m+2} on labels 1..4m+2.
std::vector<Face> q_cyclic_faces(int two_m_plus_1) {
  const int m = (two_m_plus_1 - 1) / 2;
  const int count = 4 * m + 2;
  std::vector<Face> faces;
  for (int i = 1; i <= count; ++i) {
    faces.push_back({i - 1, wrap(i + 1, count) - 1, wrap(i + 2, count) - 1});
    faces.push_back({i - 1, wrap(i + 2, count) - 1, wrap(i + 2 * m + 2, count) - 1});
  }
  return faces;
}

}  // namespace

std::vector<Face> q_grid_faces(int two_m_plus_1, int n) {
  const int m = (two_m_plus_1 - 1) / 2;
  // u_{i,j}: i = 1..m+1, then v_{i,j}: i = 1..m; columns j mod n.
  auto u = [n](int i, int j) { return (i - 1) * n + wrap(j, n) - 1; };
  auto v = [m, n](int i, int j) { return (m + 1) * n + (i - 1) * n + wrap(j, n) - 1; };
  std::vector<Face> faces;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      faces.push_back({u(i, j), u(i + 1, j), v(i, j)});
      faces.push_back({u(i, j + 1), u(i + 1, j + 1), v(i, j)});
    }
  }
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      faces.push_back({v(i, j), v(i + 1, j), u(i + 1, j)});
      faces.push_back({v(i, j), v(i + 1, j), u(i + 1, j + 1)});
    }
  }
  for (int j = 1; j <= n; ++j) {
    faces.push_back({u(m + 1, j), u(1, n + 2 - j), v(1, n + 2 - j)});
    faces.push_back({u(m + 1, j + 1), u(1, n + 2 - j), v(1, n + 1 - j)});
    faces.push_back({u(m + 1, j), u(1, n + 2 - j), v(m, j)});
    faces.push_back({u(m + 1, j + 1), u(1, n + 2 - j), v(m, j)});
  }
  return faces;
}

int FamilySpec::vertex_count() const {
  switch (tag) {
    case FamilyTag::kT1:
      return a;
    case FamilyTag::kT2:
      return 2 * a;
    case FamilyTag::kTM:
    case FamilyTag::kB:
    case FamilyTag::kK:
    case FamilyTag::kQ:
      return a * b;
  }
  return 0;
}

int FamilySpec::face_count() const { return 2 * vertex_count(); }

std::string FamilySpec::name() const {
  std::string inner;
  for (int p : params_of(*this)) {
    if (!inner.empty()) inner += ',';
    inner += std::to_string(p);
  }
  return std::string(1, letter_of(tag)) + "_{" + inner + "}";
}

std::string FamilySpec::cli_name() const {
  std::string inner;
  for (int p : params_of(*this)) {
    if (!inner.empty()) inner += ',';
    inner += std::to_string(p);
  }
  return std::string(1, letter_of(tag)) + "(" + inner + ")";
}

std::optional<std::string> range_violation(const FamilySpec& s) {
  auto fail = [&s](const std::string& what) {
    return std::optional<std::string>(s.name() + ": " + what);
  };
  switch (s.tag) {
    case FamilyTag::kT1: {
      const int n = s.a, k = s.b;
      if (n < 7) return fail("requires n >= 7");
      const int low_max = (n - 3) / 2;
      const int high_min = (n + 2) / 2;  // ceil((n+1)/2)
      const bool low = k >= 2 && k <= low_max;
      const bool high = k >= high_min && k <= n - 3;
      if (!low && !high) {
        return fail("requires k in {2.." + std::to_string(low_max) + "} U {" +
                    std::to_string(high_min) + ".." + std::to_string(n - 3) + "}");
      }
      return std::nullopt;
    }
    case FamilyTag::kT2:
      if (s.a < 4) return fail("requires n >= 4");
      if (s.b < 1 || s.b > s.a - 3) return fail("requires 1 <= k <= n-3");
      return std::nullopt;
    case FamilyTag::kTM:
      if (s.a < 3 || s.b < 3) return fail("requires n, m >= 3");
      if (s.c < 0 || s.c > s.a - 1) return fail("requires 0 <= k <= n-1");
      return std::nullopt;
    case FamilyTag::kB:
      if (s.a < 3 || s.b < 3) return fail("requires m, n >= 3");
      return std::nullopt;
    case FamilyTag::kK:
      if (s.a < 3) return fail("requires m >= 3");
      if (s.b < 4 || s.b % 2 != 0) return fail("requires an even second parameter >= 4");
      return std::nullopt;
    case FamilyTag::kQ:
      if (s.a < 5 || s.a % 2 == 0) return fail("requires an odd first parameter 2m+1 with m >= 2");
      if (s.b < 2) return fail("requires n >= 2");
      return std::nullopt;
  }
  return fail("unknown family");
}

FamilySpec parse_family(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  // Display form T_{n,1,k} -> T(n,1,k).
  if (s.size() > 2 && s[1] == '_' && s[2] == '{' && s.back() == '}') {
    s = s.substr(0, 1) + "(" + s.substr(3, s.size() - 4) + ")";
  }
  auto syntax = [&text]() {
    return std::invalid_argument("cannot parse family name '" + std::string(text) +
                                 "'; expected T(n,1,k), T(n,2,k), T(n,m,k), "
                                 "B(m,n), K(m,2n) or Q(2m+1,n)");
  };
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw syntax();
  std::vector<int> params;
  const char* p = s.data() + 2;
  const char* end = s.data() + s.size() - 1;
  while (p < end) {
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc()) throw syntax();
    params.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',') throw syntax();
      ++p;
      if (p == end) throw syntax();
    }
  }
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (letter == 'T' && params.size() == 3) {
    if (params[1] == 1) return FamilySpec::T1(params[0], params[2]);
    if (params[1] == 2) return FamilySpec::T2(params[0], params[2]);
    return FamilySpec::TM(params[0], params[1], params[2]);
  }
  if (params.size() == 2) {
    if (letter == 'B') return FamilySpec::B(params[0], params[1]);
    if (letter == 'K') return FamilySpec::K(params[0], params[1]);
    if (letter == 'Q') return FamilySpec::Q(params[0], params[1]);
  }
  throw syntax();
}

NamedTriangulation construct_family(const FamilySpec& spec) {
  if (auto violation = range_violation(spec)) throw BadParameters(*violation);
  std::vector<Face> faces;
  std::vector<std::string> labels;
  switch (spec.tag) {
    case FamilyTag::kT1:
      faces = t1_faces(spec.a, spec.b);
      for (int i = 1; i <= spec.a; ++i) labels.push_back(std::to_string(i));
      break;
    case FamilyTag::kT2:
      faces = t2_faces(spec.a, spec.b);
      for (int i = 1; i <= spec.a; ++i) labels.push_back("u_" + std::to_string(i));
      for (int i = 1; i <= spec.a; ++i) labels.push_back("v_" + std::to_string(i));
      break;
    case FamilyTag::kTM:
      faces = tm_faces(spec.a, spec.b, spec.c);
      for (int i = 1; i <= spec.b; ++i) {
        for (int j = 1; j <= spec.a; ++j) labels.push_back(pair_label('u', i, j));
      }
      break;
    case FamilyTag::kB:
    case FamilyTag::kK:
      faces = spec.tag == FamilyTag::kB ? b_faces(spec.a, spec.b)
                                        : k_faces(spec.a, spec.b);
      for (int i = 1; i <= spec.b; ++i) {
        for (int j = 1; j <= spec.a; ++j) labels.push_back(pair_label('v', i, j));
      }
      break;
    case FamilyTag::kQ:
      if (spec.b == 2) {
        faces = q_cyclic_faces(spec.a);
        for (int i = 1; i <= 2 * spec.a; ++i) labels.push_back(std::to_string(i));
      } else {
        const int m = (spec.a - 1) / 2;
        faces = q_grid_faces(spec.a, spec.b);
        for (int i = 1; i <= m + 1; ++i) {
          for (int j = 1; j <= spec.b; ++j) labels.push_back(pair_label('u', i, j));
        }
        for (int i = 1; i <= m; ++i) {
          for (int j = 1; j <= spec.b; ++j) labels.push_back(pair_label('v', i, j));
        }
      }
      break;
  }
  return NamedTriangulation{spec.name(), spec,
                            build_triangulation(spec.vertex_count(), faces),
                            std::move(labels)};
}

std::vector<FamilySpec> catalog_specs(int n) {
  std::vector<FamilySpec> specs;
  auto consider = [&specs, n](const FamilySpec& s) {
    if (s.vertex_count() == n && !range_violation(s)) specs.push_back(s);
  };
  for (int k = 0; k <= n; ++k) consider(FamilySpec::T1(n, k));
  if (n % 2 == 0) {
    for (int k = 0; k <= n / 2; ++k) consider(FamilySpec::T2(n / 2, k));
  }
  for (int cols = 3; cols <= n; ++cols) {
    if (n % cols != 0) continue;
    for (int k = 0; k < cols; ++k) consider(FamilySpec::TM(cols, n / cols, k));
  }
  for (int m = 3; m <= n; ++m) {
    if (n % m != 0) continue;
    consider(FamilySpec::B(m, n / m));
    consider(FamilySpec::K(m, n / m));
    consider(FamilySpec::Q(m, n / m));
  }
  std::sort(specs.begin(), specs.end());
  return specs;
}

std::vector<NamedTriangulation> known_catalog(int n) {
  std::vector<NamedTriangulation> out;
  for (const FamilySpec& s : catalog_specs(n)) out.push_back(construct_family(s));
  return out;
}

}  // namespace flatland
