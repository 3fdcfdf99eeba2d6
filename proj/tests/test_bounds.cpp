#include <doctest.h>

#include "lrc3/bounds.hpp"

using namespace lrc3;

TEST_CASE("singleton_like_d") {
  CHECK(singleton_like_d(13, 10, 8) == 3);
  CHECK(singleton_like_d(9, 4, 4) == 6);  // r = k: classical Singleton n-k+1
  CHECK(singleton_like_d(12, 5, 2) == 6);
  CHECK(singleton_like_d(9, 6, 2) == 2);

  // formula value is monotone nonincreasing in r
  for (long long n = 4; n <= 14; ++n)
    for (long long k = 2; k <= n - 1; ++k)
      for (long long r = 1; r < k; ++r)
        CHECK(singleton_like_d(n, k, r) <= singleton_like_d(n, k, r + 1));

  CHECK_THROWS_AS(singleton_like_d(5, 5, 1), std::invalid_argument);
}

TEST_CASE("plotkin_feasible") {
  CHECK(plotkin_feasible(8, 9, 6));        // equality: 2*8*9 / 24 = 6
  CHECK_FALSE(plotkin_feasible(10, 9, 8)); // bound 7.5 < 8
  for (long long d = 1; d <= 12; ++d) CHECK(plotkin_feasible(d, 3, d));  // repetition
  CHECK_THROWS_AS(plotkin_feasible(5, 1, 2), std::invalid_argument);
}

TEST_CASE("lemma5_bound") {
  CHECK(lemma5_bound(3, 2, 1) == Rational(4));
  CHECK(lemma5_bound(3, 4, 5) == Rational(8, 3));
  CHECK(lemma5_bound(3, 3, 2) == Rational(13, 3));
  CHECK_THROWS_AS(lemma5_bound(3, 0, 2), std::invalid_argument);
}

TEST_CASE("shortening_chain_bound") {
  // even d*, n = 2d*: 3^{d*/2} * 9d*/2
  CHECK(shortening_chain_bound(8, 4) == 9 * 18);
  // odd d*, n = 2d*: 3^{(d*+1)/2} * 3d*
  CHECK(shortening_chain_bound(6, 3) == 9 * 9);
  // below the seed length the trivial whole-space bound applies
  CHECK(shortening_chain_bound(2, 2) == 9);

  // cutoff r <= 5 for odd r (even d* = r+1): 3^{r+1} <= bound(2d*, d*)
  for (long long r : {3LL, 5LL}) {
    long long d = r + 1;
    CHECK(pow3ll(r + 1) <= shortening_chain_bound(2 * d, d));
  }
  {
    long long r = 7, d = r + 1;
    CHECK(pow3ll(r + 1) > shortening_chain_bound(2 * d, d));
  }
  // cutoff r <= 5 for even r (odd d* = r+1)
  for (long long r : {2LL, 4LL}) {
    long long d = r + 1;
    CHECK(pow3ll(r + 1) <= shortening_chain_bound(2 * d, d));
  }
  {
    long long r = 6, d = r + 1;
    CHECK(pow3ll(r + 1) > shortening_chain_bound(2 * d, d));
  }
}

TEST_CASE("ternary_mds_admissible") {
  CHECK(ternary_mds_admissible(4, 2));
  CHECK_FALSE(ternary_mds_admissible(5, 2));
  CHECK(ternary_mds_admissible(7, 6));
  CHECK(ternary_mds_admissible(9, 1));
  CHECK_FALSE(ternary_mds_admissible(6, 3));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(26, 20) == Rational(13, 10));
  CHECK(Rational(2) > Rational(13, 10));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(8, 3).to_string() == "8/3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
