#include <doctest.h>

#include "lrc3/classifier.hpp"
#include "lrc3/constructions.hpp"
#include "lrc3/locality.hpp"

using namespace lrc3;

TEST_CASE("classify examples") {
  ClassVerdict v = classify(9, 6, 2);
  CHECK(v.exists);
  REQUIRE(v.matches.size() == 1);
  CHECK(v.matches[0].class_id == 1);
  CHECK(v.target_d == 2);

  v = classify(12, 5, 2);
  CHECK(v.exists);
  CHECK(v.matches[0].class_id == 8);
  CHECK(v.target_d == 6);

  v = classify(7, 4, 2);
  CHECK_FALSE(v.exists);
  CHECK(v.target_d == 3);
  CHECK_FALSE(v.explanation.empty());

  v = classify(7, 4, 3);
  CHECK(v.exists);
  CHECK(v.matches[0].class_id == 5);

  v = classify(8, 2, 1);
  CHECK(v.exists);
  CHECK(v.matches[0].class_id == 4);
  CHECK(v.target_d == 6);
}

TEST_CASE("exclusion explanations follow the proof's cases") {
  ClassVerdict v = classify(15, 9, 4);  // uniform r=4 family with l = 3
  CHECK_FALSE(v.exists);
  REQUIRE(!v.explanation.empty());
  CHECK(v.explanation.front().name == "lemma5-locality-row-cap");
  CHECK(v.explanation.front().value == Rational(13, 10));  // caps l at 1 < 3

  v = classify(18, 11, 5);  // the r=5 uniform family with l = 3
  CHECK_FALSE(v.exists);
  CHECK(v.explanation.front().name == "lemma5-locality-row-cap");
  CHECK(v.explanation.front().value == Rational(8, 3));
}

TEST_CASE("precondition violations") {
  CHECK_THROWS_AS(classify(6, 3, 3), std::invalid_argument);  // r > k-1
  CHECK_THROWS_AS(classify(6, 6, 2), std::invalid_argument);  // k > n-1
  CHECK_THROWS_AS(classify(6, 3, 0), std::invalid_argument);
}

TEST_CASE("no triple matches two classes up to n = 20") {
  for (long long n = 3; n <= 20; ++n)
    for (long long k = 2; k <= n - 1; ++k)
      for (long long r = 1; r <= k - 1; ++r) {
        ClassVerdict v = classify(n, k, r);
        CHECK(v.matches.size() <= 1);
      }
}

TEST_CASE("classify is deterministic") {
  for (int rep = 0; rep < 3; ++rep) {
    ClassVerdict a = classify(15, 9, 4), b = classify(15, 9, 4);
    CHECK(a.matches.size() == b.matches.size());
    REQUIRE(a.explanation.size() == b.explanation.size());
    for (std::size_t i = 0; i < a.explanation.size(); ++i) {
      CHECK(a.explanation[i].name == b.explanation[i].name);
      CHECK(a.explanation[i].value == b.explanation[i].value);
    }
  }
}

TEST_CASE("soundness: matching constructors hit the verdict parameters exactly") {
  for (long long n = 3; n <= 13; ++n)
    for (long long k = 2; k <= n - 1; ++k)
      for (long long r = 1; r <= k - 1; ++r) {
        ClassVerdict v = classify(n, k, r);
        if (!v.exists) continue;
        const ClassMatch& m = v.matches.front();
        LinearCode code = [&]() -> LinearCode {
          switch (m.class_id) {
            case 1: return class1((std::size_t)k, (std::size_t)r);
            case 2: return class2((std::size_t)m.params.at("g"));
            case 3: return class3((std::size_t)k);
            case 4: return class4();
            case 5: return class5((std::size_t)n, (std::size_t)k);
            case 6: return class6((std::size_t)m.params.at("l"));
            case 7: return class7((std::size_t)m.params.at("l"));
            default: return class8();
          }
        }();
        CHECK((long long)code.length() == n);
        CHECK((long long)code.dimension() == k);
        CHECK((long long)min_distance(code) == v.target_d);
        CHECK((long long)code_locality(code).code_locality == r);
      }
}
