#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrc3/bounds.hpp"

namespace lrc3 {

struct ClassMatch {
  int class_id = 0;
  std::map<std::string, long long> params;  // e.g. {"g": 2} or {"l": 3}
};

/// Outcome of the eight-class decision procedure for a parameter triple.
struct ClassVerdict {
  long long n = 0, k = 0, r = 0;
  long long target_d = 0;
  std::vector<ClassMatch> matches;
  bool exists = false;
  std::vector<BoundReport> explanation;  // populated when exists == false
};

/// Decide whether an optimal ternary (n,k,r) LRC exists and, if so, which
/// construction class realizes it.  Requires 1 <= r <= k-1, k <= n-1.
ClassVerdict classify(long long n, long long k, long long r);

}  // namespace lrc3
