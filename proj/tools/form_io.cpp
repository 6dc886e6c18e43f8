#include "form_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace rotform::cli {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Row {
  int line = 0;
  double values[3] = {0, 0, 0};
};

Row parse_row(std::string_view text, int line_number) {
  Row row;
  row.line = line_number;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    while (pos < text.size() && is_blank(text[pos])) ++pos;
    if (pos >= text.size()) {
      throw FormParseError(line_number, static_cast<int>(pos) + 1,
                           "expected 3 values, found " + std::to_string(k));
    }
    const std::string token(text.substr(pos));
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str()) {
      throw FormParseError(line_number, static_cast<int>(pos) + 1, "expected a number");
    }
    row.values[k] = value;
    pos += static_cast<std::size_t>(end - token.c_str());
  }
  while (pos < text.size() && is_blank(text[pos])) ++pos;
  if (pos < text.size()) {
    throw FormParseError(line_number, static_cast<int>(pos) + 1,
                         "unexpected trailing characters after 3 values");
  }
  return row;
}

}  // namespace

FormParseError::FormParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SymmetricForm parse_form_text(std::string_view text) {
  std::vector<Row> rows;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_number;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    const bool blank = first >= line.size();
    const bool comment = !blank && line[first] == '#';
    if (!blank && !comment) {
      if (rows.size() == 3) {
        throw FormParseError(line_number, static_cast<int>(first) + 1,
                             "unexpected extra row: the form has exactly 3 rows");
      }
      rows.push_back(parse_row(line, line_number));
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (rows.size() != 3) {
    throw FormParseError(line_number, 1,
                         "unexpected end of input: expected 3 data rows, found " +
                             std::to_string(rows.size()));
  }
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rows[i].values[j];
  return SymmetricForm(m);
}

SymmetricForm load_form_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read form file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form_text(buf.str());
}

std::string format_form(const Mat3& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += fmt17(m(i, 0));
    out += ' ';
    out += fmt17(m(i, 1));
    out += ' ';
    out += fmt17(m(i, 2));
    out += '\n';
  }
  return out;
}

Vec3 parse_vec3(std::string_view text) {
  Vec3 v;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::string token(text.substr(pos));
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str()) {
      throw Error("expected vector as x,y,z with decimal coordinates, got '" + std::string(text) +
                  "'");
    }
    v[k] = value;
    pos += static_cast<std::size_t>(end - token.c_str());
    if (k < 2) {
      if (pos >= text.size() || text[pos] != ',') {
        throw Error("expected vector as x,y,z with decimal coordinates, got '" +
                    std::string(text) + "'");
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw Error("unexpected trailing characters in vector '" + std::string(text) + "'");
  }
  return v;
}

std::pair<Vec3, Vec3> parse_flag_arg(std::string_view text) {
  const std::size_t sep = text.find(';');
  if (sep == std::string_view::npos) {
    throw Error("expected flag as v;w with vectors x,y,z, got '" + std::string(text) + "'");
  }
  return {parse_vec3(text.substr(0, sep)), parse_vec3(text.substr(sep + 1))};
}

}  // namespace rotform::cli
