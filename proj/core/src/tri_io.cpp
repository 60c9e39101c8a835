#include "flatland/tri_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace flatland {

namespace {

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` integers from the line or throws.
std::vector<long long> read_ints(const std::string& line, int line_no, std::size_t count) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long v = 0;
  while (in >> v) values.push_back(v);
  in.clear();
  std::string rest;
  in >> rest;
  if (!rest.empty()) throw ParseError(line_no, "unexpected token '" + rest + "'");
  if (values.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " integers, found " +
                                  std::to_string(values.size()));
  }
  return values;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

FaceList parse_tri(std::istream& in) {
  FaceList out;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!have_header) {
      const auto header = read_ints(line, line_no, 2);
      if (header[0] < 1 || header[0] > 1'000'000) {
        throw ParseError(line_no, "vertex count must be positive");
      }
      if (header[1] < 0 || header[1] > 10'000'000) {
        throw ParseError(line_no, "face count must be non-negative");
      }
      out.n = static_cast<int>(header[0]);
      expected = header[1];
      have_header = true;
      continue;
    }
    if (static_cast<long long>(out.faces.size()) == expected) {
      throw ParseError(line_no, "more faces than the header announces");
    }
    const auto v = read_ints(line, line_no, 3);
    Face f{};
    for (int i = 0; i < 3; ++i) {
      if (v[i] < 0 || v[i] >= out.n) {
        throw ParseError(line_no, "vertex " + std::to_string(v[i]) + " out of range 0.." +
                                      std::to_string(out.n - 1));
      }
      f[i] = static_cast<Vertex>(v[i]);
    }
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) throw ParseError(line_no, "face repeats a vertex");
    out.faces.push_back(f);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'n f' header");
  if (static_cast<long long>(out.faces.size()) != expected) {
    throw ParseError(line_no + 1, "header announces " + std::to_string(expected) +
                                      " faces, found " + std::to_string(out.faces.size()));
  }
  return out;
}

FaceList parse_tri_string(const std::string& text) {
  std::istringstream in(text);
  return parse_tri(in);
}

void write_tri(std::ostream& out, const Triangulation& t) {
  out << t.vertex_count() << ' ' << t.face_count() << '\n';
  for (const Face& f : t.faces()) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

std::string to_tri_string(const Triangulation& t) {
  std::ostringstream out;
  write_tri(out, t);
  return out.str();
}

}  // namespace flatland
