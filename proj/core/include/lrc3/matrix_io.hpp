#pragma once

#include <string>

#include "lrc3/gf3.hpp"

namespace lrc3 {

/// Plain-text matrix format:
///   GF3 <rows> <cols>
///   <cols> space-separated digits in {0,1,2}, one line per row
/// Lines end with a single newline and there are no trailing blank lines.
/// parse(serialize(m)) == m bit-exactly.
std::string serialize_matrix(const Gf3Matrix& m);

/// Throws std::runtime_error naming the offending line on malformed input.
Gf3Matrix parse_matrix(const std::string& text);

Gf3Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Gf3Matrix& m);

}  // namespace lrc3
