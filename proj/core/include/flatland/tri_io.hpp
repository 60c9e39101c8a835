#ifndef FLATLAND_TRI_IO_HPP_
#define FLATLAND_TRI_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatland/triangulation.hpp"

namespace flatland {

/// Malformed `.tri` text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Face list as read from a `.tri` file, before any manifold checks.
struct FaceList {
  int n = 0;
  std::vector<Face> faces;
};

/// Reads "n f" then f lines "a b c". Lines starting with '#' and blank lines
/// are skipped. Each face is sorted; face order is kept as written.
FaceList parse_tri(std::istream& in);
FaceList parse_tri_string(const std::string& text);

/// Writes the canonical text form: sorted faces in lexicographic order, LF.
void write_tri(std::ostream& out, const Triangulation& t);
std::string to_tri_string(const Triangulation& t);

}  // namespace flatland

#endif  // FLATLAND_TRI_IO_HPP_
