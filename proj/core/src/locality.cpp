#include "lrc3/locality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrc3 {

namespace {

uint64_t pow3(std::size_t e) {
  uint64_t r = 1;
  while (e--) r *= 3;
  return r;
}

// Is there a dual codeword with support inside S (0-based) and a nonzero
// entry at coordinate i0?  Dual codewords are the row space of H.
bool dual_codeword_in_support(const Gf3Matrix& h, const std::vector<std::size_t>& s,
                              std::size_t i0) {
  std::vector<bool> in_s(h.cols(), false);
  for (auto j : s) in_s[j] = true;
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < h.cols(); ++j)
    if (!in_s[j]) outside.push_back(j);

  Gf3Matrix basis;  // rows: coefficient vectors x with x.H zero outside S
  if (outside.empty()) {
    basis = Gf3Matrix::identity(h.rows());
  } else {
    basis = null_space(transpose(select_columns(h, outside)));
  }
  // linear map x -> (x.H)_{i0}; nonzero on the solution space iff nonzero on
  // some basis vector
  for (std::size_t b = 0; b < basis.rows(); ++b) {
    uint8_t v = 0;
    for (std::size_t t = 0; t < h.rows(); ++t)
      v = gf3_add(v, gf3_mul(basis.at(b, t), h.at(t, i0)));
    if (v != 0) return true;
  }
  return false;
}

bool for_each_subset_containing(std::size_t n, std::size_t w, std::size_t fixed,
                                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  // choose w-1 coordinates from {0..n-1} \ {fixed}
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != fixed) others.push_back(j);
  const std::size_t m = w - 1;
  if (m > others.size()) return false;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> s(w);
  while (true) {
    s.clear();
    s.push_back(fixed);
    for (auto t : idx) s.push_back(others[t]);
    if (visit(s)) return true;
    if (m == 0) return false;
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (idx[i] != i + others.size() - m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
  }
}

}  // namespace

std::size_t symbol_locality(const LinearCode& c, std::size_t i) {
  const std::size_t n = c.length();
  if (i < 1 || i > n) throw std::invalid_argument("symbol_locality: coordinate out of range");
  if (c.dimension() == n)
    throw std::invalid_argument("symbol_locality: dual code is trivial");
  const Gf3Matrix& h = c.parity_check();
  const std::size_t i0 = i - 1;
  for (std::size_t w = 1; w <= n; ++w) {
    bool found = for_each_subset_containing(n, w, i0, [&](const std::vector<std::size_t>& s) {
      return dual_codeword_in_support(h, s, i0);
    });
    if (found) return w - 1;
  }
  throw std::runtime_error("symbol_locality: no dual codeword covers coordinate " +
                           std::to_string(i));
}

std::size_t symbol_locality_by_dual_enumeration(const LinearCode& c, std::size_t i) {
  const std::size_t n = c.length(), m = n - c.dimension();
  if (i < 1 || i > n) throw std::invalid_argument("symbol_locality: coordinate out of range");
  if (m == 0) throw std::invalid_argument("symbol_locality: dual code is trivial");
  if (m > kDualEnumerationCap)
    throw std::invalid_argument("symbol_locality: dual enumeration cap exceeded");

  const Gf3Matrix& h = c.parity_check();
  const std::size_t i0 = i - 1;
  std::size_t best = n + 1;
  std::vector<uint8_t> digits(m, 0), dw(n, 0);
  const uint64_t total = pow3(m);
  for (uint64_t t = 1; t < total; ++t) {
    std::size_t a = m;
    while (a > 0) {
      --a;
      digits[a] = uint8_t((digits[a] + 1) % 3);
      auto ha = h.row(a);
      for (std::size_t j = 0; j < n; ++j) dw[j] = gf3_add(dw[j], ha[j]);
      if (digits[a] != 0) break;
    }
    if (dw[i0] == 0) continue;
    best = std::min(best, row_weight(dw));
  }
  if (best > n)
    throw std::runtime_error("symbol_locality: no dual codeword covers coordinate " +
                             std::to_string(i));
  return best - 1;
}

LocalityProfile code_locality(const LinearCode& c) {
  LocalityProfile p;
  p.per_symbol.reserve(c.length());
  for (std::size_t i = 1; i <= c.length(); ++i) {
    std::size_t ri = (c.length() - c.dimension() <= kDualEnumerationCap)
                         ? symbol_locality_by_dual_enumeration(c, i)
                         : symbol_locality(c, i);
    p.per_symbol.push_back(ri);
    p.code_locality = std::max(p.code_locality, ri);
  }
  return p;
}

CoverMatrix build_cover_matrix(const LinearCode& c, std::size_t r) {
  const std::size_t n = c.length(), m = n - c.dimension();
  if (m == 0) throw std::invalid_argument("build_cover_matrix: dual code is trivial");
  if (m > kDualEnumerationCap)
    throw std::invalid_argument("build_cover_matrix: dual enumeration cap exceeded");

  struct DualWord {
    std::size_t weight;
    std::vector<std::size_t> support;
    std::vector<uint8_t> value;
  };
  std::vector<DualWord> words;
  {
    const Gf3Matrix& h = c.parity_check();
    std::vector<uint8_t> digits(m, 0), dw(n, 0);
    const uint64_t total = pow3(m);
    for (uint64_t t = 1; t < total; ++t) {
      std::size_t a = m;
      while (a > 0) {
        --a;
        digits[a] = uint8_t((digits[a] + 1) % 3);
        auto ha = h.row(a);
        for (std::size_t j = 0; j < n; ++j) dw[j] = gf3_add(dw[j], ha[j]);
        if (digits[a] != 0) break;
      }
      std::size_t w = row_weight(dw);
      if (w > r + 1) continue;
      DualWord d;
      d.weight = w;
      d.value.assign(dw.begin(), dw.end());
      for (std::size_t j = 0; j < n; ++j)
        if (dw[j] != 0) d.support.push_back(j);
      words.push_back(std::move(d));
    }
  }

  CoverMatrix cm;
  cm.h1 = Gf3Matrix(0, n);
  std::vector<bool> covered(n, false);
  while (true) {
    std::size_t first = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!covered[j]) {
        first = j;
        break;
      }
    if (first == n) break;

    const DualWord* pick = nullptr;
    for (const auto& w : words) {
      if (!std::binary_search(w.support.begin(), w.support.end(), first)) continue;
      if (pick == nullptr || std::tie(w.weight, w.support, w.value) <
                                 std::tie(pick->weight, pick->support, pick->value))
        pick = &w;
    }
    if (pick == nullptr)
      throw std::runtime_error("build_cover_matrix: coordinate " + std::to_string(first + 1) +
                               " has locality > " + std::to_string(r));
    cm.h1.append_row(pick->value);
    for (auto j : pick->support) covered[j] = true;
  }
  cm.l = cm.h1.rows();

  // extend to full rank n-k with rows from the rref dual basis
  cm.h2 = Gf3Matrix(0, n);
  Gf3Matrix stack = cm.h1;
  std::size_t rk = rank(stack);
  for (std::size_t i = 0; i < c.parity_check().rows() && rk < m; ++i) {
    Gf3Matrix trial = stack;
    trial.append_row(c.parity_check().row(i));
    std::size_t tr = rank(trial);
    if (tr > rk) {
      stack = std::move(trial);
      cm.h2.append_row(c.parity_check().row(i));
      rk = tr;
    }
  }
  if (rk != m) throw std::logic_error("build_cover_matrix: failed to reach full rank");
  return cm;
}

bool check_disjoint_uniform(const CoverMatrix& cm, std::size_t r) {
  std::vector<bool> seen(cm.h1.cols(), false);
  for (std::size_t i = 0; i < cm.h1.rows(); ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < cm.h1.cols(); ++j) {
      if (cm.h1.at(i, j) == 0) continue;
      if (seen[j]) return false;
      seen[j] = true;
      ++w;
    }
    if (w != r + 1) return false;
  }
  return true;
}

}  // namespace lrc3
