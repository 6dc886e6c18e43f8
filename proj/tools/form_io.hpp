#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "rotform/geometry.hpp"

namespace rotform::cli {

/// Form file rejected; the message carries a line/column diagnostic.
class FormParseError : public Error {
 public:
  FormParseError(int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Round-trip-exact decimal formatting (%.17g).
std::string fmt17(double x);

/// Parses the 3x3 form file format: three rows of three whitespace-separated
/// decimal floats; lines whose first non-blank character is '#' are
/// comments. Throws FormParseError, NotSymmetric or NotPositiveDefinite.
SymmetricForm parse_form_text(std::string_view text);

/// parse_form_text applied to a file's contents. Throws Error when the file
/// cannot be read.
SymmetricForm load_form_file(const std::string& path);

/// Three lines of three fmt17 values, each line newline-terminated.
std::string format_form(const Mat3& m);

/// Parses "x,y,z".
Vec3 parse_vec3(std::string_view text);

/// Parses "x,y,z;x,y,z" into the (ray, opener) vector pair of a flag.
std::pair<Vec3, Vec3> parse_flag_arg(std::string_view text);

}  // namespace rotform::cli
