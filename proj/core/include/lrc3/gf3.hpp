#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lrc3 {

// Arithmetic in GF(3), values in {0,1,2}.  Both nonzero elements are
// self-inverse (1*1 = 1, 2*2 = 4 = 1).
inline constexpr uint8_t gf3_add(uint8_t a, uint8_t b) { return uint8_t((a + b) % 3); }
inline constexpr uint8_t gf3_sub(uint8_t a, uint8_t b) { return uint8_t((a + 3 - b) % 3); }
inline constexpr uint8_t gf3_mul(uint8_t a, uint8_t b) { return uint8_t((a * b) % 3); }
inline constexpr uint8_t gf3_neg(uint8_t a) { return uint8_t((3 - a) % 3); }

inline constexpr uint8_t gf3_inv(uint8_t a) {
  // precondition: a != 0
  return a;
}

/// Dense row-major matrix over GF(3).  Zero-row matrices are allowed so that
/// null spaces of full-column-rank matrices have a representation; the column
/// count is always >= 1.
class Gf3Matrix {
 public:
  Gf3Matrix() = default;
  Gf3Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    assert(cols >= 1);
  }

  static Gf3Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Gf3Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Gf3Matrix identity(std::size_t n);
  static Gf3Matrix ones_row(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, uint8_t v) { data_[r * cols_ + c] = v; }

  std::span<const uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// row(dst) += factor * row(src)
  void add_scaled_row(std::size_t dst, std::size_t src, uint8_t factor);
  void scale_row(std::size_t r, uint8_t factor);
  void swap_rows(std::size_t a, std::size_t b);

  void append_row(std::span<const uint8_t> r);

  bool operator==(const Gf3Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 1;
  std::vector<uint8_t> data_;
};

std::size_t rank(const Gf3Matrix& m);

/// Reduced row echelon form; pivots leftmost-first, scaled to 1, zero rows
/// dropped.  Deterministic canonical form for a given row space.
Gf3Matrix rref(const Gf3Matrix& m);

/// Basis (as rows) of { x : m x^T = 0 }.  Row count = cols - rank.
Gf3Matrix null_space(const Gf3Matrix& m);

Gf3Matrix kronecker(const Gf3Matrix& a, const Gf3Matrix& b);

Gf3Matrix transpose(const Gf3Matrix& m);
Gf3Matrix mat_mul(const Gf3Matrix& a, const Gf3Matrix& b);
Gf3Matrix vstack(const Gf3Matrix& top, const Gf3Matrix& bottom);
Gf3Matrix delete_columns(const Gf3Matrix& m, const std::vector<std::size_t>& cols0);
Gf3Matrix select_columns(const Gf3Matrix& m, const std::vector<std::size_t>& cols0);

std::size_t row_weight(std::span<const uint8_t> v);

}  // namespace lrc3
