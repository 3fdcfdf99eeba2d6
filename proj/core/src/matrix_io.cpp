#include "lrc3/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrc3 {

namespace {

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("matrix parse error at line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::string serialize_matrix(const Gf3Matrix& m) {
  std::string out = "GF3 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out += m.to_string();
  return out;
}

Gf3Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(1, "empty input");
  std::istringstream hdr(line);
  std::string magic;
  std::size_t rows = 0, cols = 0;
  if (!(hdr >> magic >> rows >> cols) || magic != "GF3")
    fail(1, "expected header \"GF3 <rows> <cols>\"");
  std::string extra;
  if (hdr >> extra) fail(1, "trailing content after header");
  if (cols < 1) fail(1, "column count must be positive");

  Gf3Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) fail(i + 2, "missing matrix row");
    std::istringstream ls(line);
    for (std::size_t j = 0; j < cols; ++j) {
      int v;
      if (!(ls >> v)) fail(i + 2, "expected " + std::to_string(cols) + " entries");
      if (v < 0 || v > 2) fail(i + 2, "entry out of range {0,1,2}");
      m.set(i, j, uint8_t(v));
    }
    if (ls >> extra) fail(i + 2, "too many entries on row");
  }
  if (std::getline(in, line))
    fail(rows + 2, line.empty() ? "trailing blank line" : "unexpected trailing content");
  return m;
}

Gf3Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::string& path, const Gf3Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_matrix(m);
}

}  // namespace lrc3
