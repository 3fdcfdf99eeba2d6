#pragma once

#include <optional>
#include <vector>

#include "lrc3/code.hpp"
#include "lrc3/gf3.hpp"

namespace lrc3 {

/// Exact per-symbol repair degrees and their maximum.
struct LocalityProfile {
  std::vector<std::size_t> per_symbol;  // r_i, 1-based coordinate i stored at [i-1]
  std::size_t code_locality = 0;
};

/// (H1; H2) split of a parity-check matrix: l locality-rows on top.
struct CoverMatrix {
  Gf3Matrix h1;
  Gf3Matrix h2;  // may have 0 rows
  std::size_t l = 0;
};

inline constexpr std::size_t kDualEnumerationCap = 12;  // n-k <= 12

/// Minimal repair degree of coordinate i (1-based): (minimum weight over dual
/// codewords covering i) - 1.  Throws if no dual codeword covers i.
std::size_t symbol_locality(const LinearCode& c, std::size_t i);

/// symbol_locality computed by full dual-codeword enumeration; independent
/// route used as a cross-check.  Requires n-k <= kDualEnumerationCap.
std::size_t symbol_locality_by_dual_enumeration(const LinearCode& c, std::size_t i);

LocalityProfile code_locality(const LinearCode& c);

/// Greedy cover construction: for the lowest uncovered coordinate pick a
/// minimum-weight dual codeword of weight <= r+1 covering it (ties by
/// lexicographically smallest support, then smallest coefficient vector),
/// then extend to full rank with rows from the rref dual basis.
CoverMatrix build_cover_matrix(const LinearCode& c, std::size_t r);

/// True iff the h1 supports are pairwise disjoint and all have weight r+1.
bool check_disjoint_uniform(const CoverMatrix& cm, std::size_t r);

}  // namespace lrc3
