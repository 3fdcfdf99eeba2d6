#include "lrc3/gf3.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc3 {

Gf3Matrix Gf3Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Gf3Matrix Gf3Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  Gf3Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      int v = rows[i][j] % 3;
      if (v < 0) v += 3;
      m.set(i, j, uint8_t(v));
    }
  }
  return m;
}

Gf3Matrix Gf3Matrix::identity(std::size_t n) {
  Gf3Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Gf3Matrix Gf3Matrix::ones_row(std::size_t n) {
  Gf3Matrix m(1, n);
  for (std::size_t j = 0; j < n; ++j) m.set(0, j, 1);
  return m;
}

void Gf3Matrix::add_scaled_row(std::size_t dst, std::size_t src, uint8_t factor) {
  if (factor == 0) return;
  uint8_t* d = data_.data() + dst * cols_;
  const uint8_t* s = data_.data() + src * cols_;
  for (std::size_t j = 0; j < cols_; ++j) d[j] = gf3_add(d[j], gf3_mul(factor, s[j]));
}

void Gf3Matrix::scale_row(std::size_t r, uint8_t factor) {
  uint8_t* d = data_.data() + r * cols_;
  for (std::size_t j = 0; j < cols_; ++j) d[j] = gf3_mul(d[j], factor);
}

void Gf3Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

void Gf3Matrix::append_row(std::span<const uint8_t> r) {
  assert(r.size() == cols_);
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

std::string Gf3Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += char('0' + at(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

// In-place forward elimination to row echelon form; returns the pivot column
// of each pivot row.
std::vector<std::size_t> echelonize(Gf3Matrix& m, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, pc) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(pr, sel);
    m.scale_row(pr, gf3_inv(m.at(pr, pc)));
    std::size_t lo = reduced ? 0 : pr + 1;
    for (std::size_t i = lo; i < m.rows(); ++i) {
      if (i == pr) continue;
      uint8_t v = m.at(i, pc);
      if (v != 0) m.add_scaled_row(i, pr, gf3_neg(v));
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Gf3Matrix& m) {
  if (m.empty()) return 0;
  Gf3Matrix w = m;
  return echelonize(w, /*reduced=*/false).size();
}

Gf3Matrix rref(const Gf3Matrix& m) {
  if (m.empty()) return m;
  Gf3Matrix w = m;
  auto pivots = echelonize(w, /*reduced=*/true);
  Gf3Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    std::copy(w.row(i).begin(), w.row(i).end(), out.row(i).begin());
  return out;
}

Gf3Matrix null_space(const Gf3Matrix& m) {
  Gf3Matrix r = rref(m);
  std::vector<std::size_t> pivots;
  {
    std::size_t j = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      while (j < r.cols() && r.at(i, j) == 0) ++j;
      pivots.push_back(j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Gf3Matrix out(m.cols() - pivots.size(), m.cols());
  std::size_t bi = 0;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    out.set(bi, fc, 1);
    // pivot variable i solves r_i . x = 0 given free column fc set to 1
    for (std::size_t i = 0; i < pivots.size(); ++i)
      out.set(bi, pivots[i], gf3_neg(r.at(i, fc)));
    ++bi;
  }
  return out;
}

Gf3Matrix kronecker(const Gf3Matrix& a, const Gf3Matrix& b) {
  Gf3Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ai = 0; ai < a.rows(); ++ai)
    for (std::size_t aj = 0; aj < a.cols(); ++aj) {
      uint8_t v = a.at(ai, aj);
      if (v == 0) continue;
      for (std::size_t bi = 0; bi < b.rows(); ++bi)
        for (std::size_t bj = 0; bj < b.cols(); ++bj)
          out.set(ai * b.rows() + bi, aj * b.cols() + bj, gf3_mul(v, b.at(bi, bj)));
    }
  return out;
}

Gf3Matrix transpose(const Gf3Matrix& m) {
  Gf3Matrix out(m.cols(), std::max<std::size_t>(m.rows(), 1));
  if (m.empty()) {
    // transpose of a 0 x c matrix: c x 0 is not representable, use c x 1 zeros
    return Gf3Matrix(m.cols(), 1);
  }
  out = Gf3Matrix(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

Gf3Matrix mat_mul(const Gf3Matrix& a, const Gf3Matrix& b) {
  assert(a.cols() == b.rows());
  Gf3Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      uint8_t v = a.at(i, t);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.set(i, j, gf3_add(out.at(i, j), gf3_mul(v, b.at(t, j))));
    }
  return out;
}

Gf3Matrix vstack(const Gf3Matrix& top, const Gf3Matrix& bottom) {
  assert(top.cols() == bottom.cols());
  Gf3Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    std::copy(top.row(i).begin(), top.row(i).end(), out.row(i).begin());
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    std::copy(bottom.row(i).begin(), bottom.row(i).end(), out.row(top.rows() + i).begin());
  return out;
}

Gf3Matrix delete_columns(const Gf3Matrix& m, const std::vector<std::size_t>& cols0) {
  std::vector<bool> drop(m.cols(), false);
  for (auto c : cols0) {
    assert(c < m.cols());
    drop[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!drop[j]) keep.push_back(j);
  return select_columns(m, keep);
}

Gf3Matrix select_columns(const Gf3Matrix& m, const std::vector<std::size_t>& cols0) {
  if (cols0.empty()) throw std::invalid_argument("select_columns: empty selection");
  Gf3Matrix out(m.rows(), cols0.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols0.size(); ++j) out.set(i, j, m.at(i, cols0[j]));
  return out;
}

std::size_t row_weight(std::span<const uint8_t> v) {
  std::size_t w = 0;
  for (auto x : v) w += (x != 0);
  return w;
}

}  // namespace lrc3
