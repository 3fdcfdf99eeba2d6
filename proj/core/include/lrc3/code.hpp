#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lrc3/gf3.hpp"

namespace lrc3 {

/// Exact codeword counts by Hamming weight: counts[w] = A_w.
struct WeightDistribution {
  std::vector<uint64_t> counts;  // size n+1
};

/// Generalized Hamming weights d_1..d_k (d_1 = minimum distance).
struct GhwProfile {
  std::vector<std::size_t> weights;
};

enum class DistanceStrategy {
  kAuto,         // column search for low d, enumeration otherwise
  kEnumeration,  // span all 3^k codewords
  kColumnSearch  // smallest linearly dependent parity-check column set
};

/// A ternary [n,k] linear code held as a full-rank parity-check matrix with
/// its generator (null-space basis) cached.
class LinearCode {
 public:
  /// Any matrix with >= 1 column is accepted; rows are reduced to a full-rank
  /// basis.  k = cols - rank.
  static LinearCode from_parity_check(const Gf3Matrix& h);
  static LinearCode from_generator(const Gf3Matrix& g);

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return k_; }
  const Gf3Matrix& parity_check() const { return h_; }
  const Gf3Matrix& generator() const { return g_; }

  /// Visit every nonzero codeword (3^k - 1 of them) in the lexicographic
  /// message order.  Visitor returns false to stop early.
  void for_each_nonzero_codeword(
      const std::function<bool(std::span<const uint8_t>)>& visit) const;

 private:
  LinearCode() = default;
  std::size_t n_ = 0, k_ = 0;
  Gf3Matrix h_, g_;
};

inline constexpr std::size_t kEnumerationCapK = 20;
inline constexpr std::size_t kGhwCapK = 7;
inline constexpr std::size_t kGhwCapN = 14;

std::size_t min_distance(const LinearCode& c,
                         DistanceStrategy strategy = DistanceStrategy::kAuto);

WeightDistribution weight_distribution(const LinearCode& c);

LinearCode dual(const LinearCode& c);

/// Keep codewords that vanish on coords (1-based), then delete those
/// coordinates.  Equals deleting the corresponding parity-check columns.
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& coords1);

/// Delete coordinates from all codewords; dimension may drop.
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& coords1);

/// Exhaustive subspace enumeration; requires k <= kGhwCapK, n <= kGhwCapN.
GhwProfile generalized_hamming_weights(const LinearCode& c);

/// d_1 = n-k and d_i = n-k+i for i >= 2.
bool is_near_mds(const LinearCode& c);

}  // namespace lrc3
