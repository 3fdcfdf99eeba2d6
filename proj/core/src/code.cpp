#include "lrc3/code.hpp"

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

// Visit all size-w subsets of {0..n-1}; visitor returns true to stop.
bool for_each_subset(std::size_t n, std::size_t w,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(w);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    // next combination
    std::size_t i = w;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - w) {
        ++idx[i];
        for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (w == 0) return false;
  }
}

}  // namespace

LinearCode LinearCode::from_parity_check(const Gf3Matrix& h) {
  if (h.cols() < 1) throw std::invalid_argument("parity-check matrix has no columns");
  LinearCode c;
  c.n_ = h.cols();
  c.h_ = rref(h);
  c.k_ = c.n_ - c.h_.rows();
  c.g_ = rref(null_space(c.h_));
  return c;
}

LinearCode LinearCode::from_generator(const Gf3Matrix& g) {
  if (g.cols() < 1) throw std::invalid_argument("generator matrix has no columns");
  LinearCode c;
  c.n_ = g.cols();
  c.g_ = rref(g);
  c.k_ = c.g_.rows();
  c.h_ = rref(null_space(c.g_));
  return c;
}

void LinearCode::for_each_nonzero_codeword(
    const std::function<bool(std::span<const uint8_t>)>& visit) const {
  if (k_ == 0) return;
  std::vector<uint8_t> digits(k_, 0), cw(n_, 0);
  const uint64_t total = pow3(k_);
  for (uint64_t t = 1; t < total; ++t) {
    std::size_t i = k_;
    while (i > 0) {
      --i;
      digits[i] = uint8_t((digits[i] + 1) % 3);
      auto gi = g_.row(i);
      for (std::size_t j = 0; j < n_; ++j) cw[j] = gf3_add(cw[j], gi[j]);
      if (digits[i] != 0) break;
    }
    if (!visit(cw)) return;
  }
}

namespace {

std::size_t min_distance_enumeration(const LinearCode& c) {
  std::size_t best = c.length() + 1;
  c.for_each_nonzero_codeword([&](std::span<const uint8_t> cw) {
    std::size_t w = row_weight(cw);
    if (w < best) best = w;
    return best > 1;  // cannot beat weight 1
  });
  return best;
}

std::size_t min_distance_column_search(const LinearCode& c) {
  const Gf3Matrix& h = c.parity_check();
  if (h.rows() == 0) return 1;  // whole space, weight-1 codewords exist
  for (std::size_t w = 1; w <= c.length(); ++w) {
    bool found = for_each_subset(c.length(), w, [&](const std::vector<std::size_t>& s) {
      return rank(select_columns(h, s)) < w;
    });
    if (found) return w;
  }
  throw std::logic_error("min_distance: no dependent column set found");
}

}  // namespace

std::size_t min_distance(const LinearCode& c, DistanceStrategy strategy) {
  if (c.dimension() == 0)
    throw std::invalid_argument("min_distance: k = 0, no nonzero codewords");
  switch (strategy) {
    case DistanceStrategy::kEnumeration:
      if (c.dimension() > kEnumerationCapK)
        throw std::invalid_argument("min_distance: enumeration cap exceeded");
      return min_distance_enumeration(c);
    case DistanceStrategy::kColumnSearch:
      return min_distance_column_search(c);
    case DistanceStrategy::kAuto:
    default:
      if (c.dimension() <= 10) return min_distance_enumeration(c);
      return min_distance_column_search(c);
  }
}

WeightDistribution weight_distribution(const LinearCode& c) {
  if (c.dimension() > kEnumerationCapK)
    throw std::invalid_argument("weight_distribution: enumeration cap exceeded");
  WeightDistribution wd;
  wd.counts.assign(c.length() + 1, 0);
  wd.counts[0] = 1;
  c.for_each_nonzero_codeword([&](std::span<const uint8_t> cw) {
    ++wd.counts[row_weight(cw)];
    return true;
  });
  return wd;
}

LinearCode dual(const LinearCode& c) {
  if (c.dimension() == c.length()) {
    // dual of the full space is the zero code: parity check = identity
    return LinearCode::from_parity_check(Gf3Matrix::identity(c.length()));
  }
  return LinearCode::from_parity_check(c.generator());
}

namespace {

std::vector<std::size_t> to_zero_based(const LinearCode& c,
                                       const std::vector<std::size_t>& coords1,
                                       const char* op) {
  std::vector<std::size_t> z;
  z.reserve(coords1.size());
  for (auto i : coords1) {
    if (i < 1 || i > c.length())
      throw std::invalid_argument(std::string(op) + ": coordinate out of range");
    z.push_back(i - 1);
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  if (z.size() >= c.length())
    throw std::invalid_argument(std::string(op) + ": resulting length would be 0");
  return z;
}

}  // namespace

LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& coords1) {
  auto z = to_zero_based(c, coords1, "shorten");
  if (z.empty()) return c;
  return LinearCode::from_parity_check(delete_columns(c.parity_check(), z));
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& coords1) {
  auto z = to_zero_based(c, coords1, "puncture");
  if (z.empty()) return c;
  Gf3Matrix g = delete_columns(c.generator(), z);
  return LinearCode::from_generator(g);
}

GhwProfile generalized_hamming_weights(const LinearCode& c) {
  const std::size_t k = c.dimension(), n = c.length();
  if (k < 1) throw std::invalid_argument("generalized_hamming_weights: k = 0");
  if (k > kGhwCapK || n > kGhwCapN)
    throw std::invalid_argument("generalized_hamming_weights: cap exceeded");

  GhwProfile p;
  p.weights.resize(k, 0);

  // For each dimension i, enumerate all i-dimensional subspaces of the message
  // space as canonical rref matrices: choose pivot columns, fill free entries.
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t best = n + 1;
    for_each_subset(k, i, [&](const std::vector<std::size_t>& pivots) {
      std::vector<bool> is_pivot(k, false);
      for (auto pc : pivots) is_pivot[pc] = true;
      // free positions: (row a, col j) with j > pivots[a] and j not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t a = 0; a < i; ++a)
        for (std::size_t j = pivots[a] + 1; j < k; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(a, j);

      Gf3Matrix msg(i, k);
      for (std::size_t a = 0; a < i; ++a) msg.set(a, pivots[a], 1);

      std::vector<uint8_t> odo(free_pos.size(), 0);
      std::vector<bool> covered(n, false);
      while (true) {
        // support union of the i basis codewords msg * G
        std::size_t support = 0;
        std::fill(covered.begin(), covered.end(), false);
        for (std::size_t a = 0; a < i; ++a) {
          std::vector<uint8_t> cw(n, 0);
          for (std::size_t j = 0; j < k; ++j) {
            uint8_t v = msg.at(a, j);
            if (v == 0) continue;
            auto gj = c.generator().row(j);
            for (std::size_t t = 0; t < n; ++t) cw[t] = gf3_add(cw[t], gf3_mul(v, gj[t]));
          }
          for (std::size_t t = 0; t < n; ++t)
            if (cw[t] != 0 && !covered[t]) {
              covered[t] = true;
              ++support;
            }
        }
        if (support < best) best = support;

        // next free-entry assignment
        std::size_t pos = free_pos.size();
        bool done = true;
        while (pos > 0) {
          --pos;
          odo[pos] = uint8_t((odo[pos] + 1) % 3);
          msg.set(free_pos[pos].first, free_pos[pos].second, odo[pos]);
          if (odo[pos] != 0) {
            done = false;
            break;
          }
        }
        if (done) break;
      }
      return false;  // keep enumerating pivot sets
    });
    p.weights[i - 1] = best;
  }
  return p;
}

bool is_near_mds(const LinearCode& c) {
  const std::size_t n = c.length(), k = c.dimension();
  if (k == 0 || n == k) return false;
  GhwProfile p = generalized_hamming_weights(c);
  if (p.weights[0] != n - k) return false;
  for (std::size_t i = 2; i <= k; ++i)
    if (p.weights[i - 1] != n - k + i) return false;
  return true;
}

}  // namespace lrc3
