#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrc3/classifier.hpp"
#include "lrc3/gf3.hpp"

namespace lrc3 {

inline constexpr uint64_t kDefaultSearchCap = 43046721ull;  // 3^16

struct SearchTask {
  std::size_t n = 0, k = 0, r = 0;
  std::size_t target_d = 0;
  uint64_t cap = kDefaultSearchCap;
  enum class Mode { kFindFirst, kCountAll } mode = Mode::kFindFirst;
  unsigned workers = 1;
};

struct SearchResult {
  bool found = false;
  std::optional<Gf3Matrix> witness;  // systematic generator [I_k | A]
  uint64_t witness_count = 0;        // count-all mode: systematic representatives
  uint64_t examined = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Enumerate every systematic generator matrix [I_k | A] and look for a code
/// with d >= target_d and locality <= r.  Exhaustive up to code equivalence:
/// every [n,k] code is monomially equivalent to a systematic one, and both
/// distance and locality are monomial invariants.  Find-first returns the
/// witness with the lexicographically smallest A entry sequence regardless of
/// worker count.
SearchResult exists_optimal_lrc(const SearchTask& task);

struct GridRow {
  std::size_t n, k, r;
  long long target_d;
  bool oracle_found;
  bool classifier_exists;
};

/// Pair the oracle with the classifier for every admissible (n,k,r) with
/// n <= n_max and 3^{k(n-k)} <= cap.
std::vector<GridRow> scan_parameter_grid(std::size_t n_max, uint64_t cap,
                                         unsigned workers = 1);

}  // namespace lrc3
