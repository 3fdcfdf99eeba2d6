#include "lrc3/bounds.hpp"

namespace lrc3 {

long long pow3ll(long long e) {
  long long r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

long long singleton_like_d(long long n, long long k, long long r) {
  if (r < 1 || r > k || k > n - 1)
    throw std::invalid_argument("singleton_like_d: need 1 <= r <= k <= n-1");
  long long ceil_kr = (k + r - 1) / r;
  return n - k - ceil_kr + 2;
}

bool plotkin_feasible(long long n, long long M, long long d) {
  if (M <= 1) throw std::invalid_argument("plotkin_feasible: M <= 1");
  // d <= 2nM / (3(M-1)), cross-multiplied to stay exact
  return 3 * d * (M - 1) <= 2 * n * M;
}

Rational lemma5_bound(long long q, long long u, long long r) {
  if (r < 1 || u < 1) throw std::invalid_argument("lemma5_bound: need r >= 1, u >= 1");
  long long qu = 1;
  for (long long i = 0; i < u; ++i) qu *= q;
  long long pairs = (r + 1) * r / 2;  // C(r+1, 2)
  return Rational(qu - 1, (q - 1) * pairs);
}

long long shortening_chain_bound(long long n, long long d) {
  if (n < 1 || d < 1) throw std::invalid_argument("shortening_chain_bound: need n, d >= 1");
  long long seed_len, seed_val;
  if (d % 2 == 0) {
    seed_len = 3 * d / 2;
    seed_val = 9 * d / 2;
  } else {
    seed_len = (3 * d - 1) / 2;
    seed_val = 3 * d;
  }
  if (n < seed_len) return pow3ll(n);  // chain gives nothing; whole-space bound
  return pow3ll(n - seed_len) * seed_val;
}

bool ternary_mds_admissible(long long n, long long k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("ternary_mds_admissible: need 1 <= k <= n-1");
  return k == 1 || k == n - 1 || (n == 4 && k == 2);
}

}  // namespace lrc3
