#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lrc3 {

/// Exact rational number; bounds are compared against integer parameters so
/// no floating point is used anywhere.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational&) const = default;
  auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct BoundReport {
  std::string name;
  std::string inputs;
  Rational value;
  bool satisfied = true;
};

/// d <= n - k - ceil(k/r) + 2; requires 1 <= r <= k <= n-1.
long long singleton_like_d(long long n, long long k, long long r);

/// Plotkin: d <= 2nM / (3(M-1)) for ternary codes of size M.
bool plotkin_feasible(long long n, long long M, long long d);

/// (q^u - 1) / ((q-1) * C(r+1, 2)); the cap on disjoint uniform locality-rows
/// when any 4 parity-check columns are independent.
Rational lemma5_bound(long long q, long long u, long long r);

/// Upper bound on M_3(n, d) by the shortening chain M_3(n,d) <= 3 M_3(n-1,d)
/// iterated down to the Plotkin-seeded length: 3d/2 for even d with seed value
/// 9d/2, (3d-1)/2 for odd d with seed value 3d.  For n below the seed length
/// the trivial bound 3^n is returned.
long long shortening_chain_bound(long long n, long long d);

/// True iff (n, k) is a ternary MDS shape: [n,1], [n,n-1], or [4,2].
bool ternary_mds_admissible(long long n, long long k);

long long pow3ll(long long e);

}  // namespace lrc3
