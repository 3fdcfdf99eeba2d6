#include <doctest.h>

#include "lrc3/bounds.hpp"
#include "lrc3/constructions.hpp"
#include "lrc3/locality.hpp"

using namespace lrc3;

namespace {

std::vector<std::size_t> row_weights(const Gf3Matrix& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < m.rows(); ++i) w.push_back(row_weight(m.row(i)));
  return w;
}

}  // namespace

TEST_CASE("fixed matrix transcription checksums") {
  CHECK(tetracode_parity().rows() == 2);
  CHECK(tetracode_parity().cols() == 4);
  CHECK(row_weights(tetracode_parity()) == std::vector<std::size_t>{3, 3});

  CHECK(hamming13_parity().rows() == 3);
  CHECK(hamming13_parity().cols() == 13);
  CHECK(row_weights(hamming13_parity()) == std::vector<std::size_t>{9, 9, 9});

  CHECK(length8_dim2_parity().rows() == 6);
  CHECK(length8_dim2_parity().cols() == 8);
  CHECK(row_weights(length8_dim2_parity()) == std::vector<std::size_t>{2, 2, 2, 2, 3, 3});

  CHECK(extended_qr12_parity().rows() == 6);
  CHECK(extended_qr12_parity().cols() == 12);
  CHECK(row_weights(extended_qr12_parity()) == std::vector<std::size_t>{6, 6, 6, 6, 6, 6});

  CHECK(length12_dim5_parity().rows() == 7);
  CHECK(length12_dim5_parity().cols() == 12);
  CHECK(row_weights(length12_dim5_parity()) == std::vector<std::size_t>{3, 3, 3, 3, 6, 5, 5});
}

TEST_CASE("class1") {
  Gf3Matrix h = class1_parity(6, 2);
  CHECK(h == kronecker(Gf3Matrix::identity(3), Gf3Matrix::ones_row(3)));

  Gf3Matrix h7 = class1_parity(7, 3);
  CHECK(h7 == Gf3Matrix::from_rows({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
                                    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}}));

  CHECK(class1_parity(2, 1) == kronecker(Gf3Matrix::identity(2), Gf3Matrix::ones_row(2)));

  LinearCode c = class1(7, 3);
  CHECK(c.length() == 10);
  CHECK(c.dimension() == 7);
  CHECK(min_distance(c) == 2);
  CHECK(code_locality(c).code_locality == 3);

  CHECK_THROWS_AS(class1(2, 2), std::invalid_argument);
}

TEST_CASE("class2") {
  struct Expect {
    std::size_t g, n, k, r;
  };
  for (auto [g, n, k, r] : {Expect{0, 13, 10, 8}, Expect{2, 11, 8, 6}, Expect{4, 9, 6, 4}}) {
    LinearCode c = class2(g);
    CHECK(c.length() == n);
    CHECK(c.dimension() == k);
    CHECK(min_distance(c) == 3);
    CHECK(code_locality(c).code_locality == r);
  }
  CHECK_THROWS_AS(class2(5), std::invalid_argument);
}

TEST_CASE("class3") {
  Gf3Matrix h = class3_parity(2);
  CHECK(h == Gf3Matrix::from_rows({{1, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 1},
                                   {0, 1, 0, 1, 0, 1}}));
  CHECK(min_distance(class3(2)) == 4);
  CHECK(min_distance(class3(3)) == 4);

  LinearCode c5 = class3(5);
  CHECK(c5.length() == 12);
  CHECK(c5.dimension() == 5);
  CHECK(min_distance(c5) == 4);
  CHECK(code_locality(c5).code_locality == 1);

  CHECK_THROWS_AS(class3(1), std::invalid_argument);
}

TEST_CASE("class4") {
  LinearCode c = class4();
  CHECK(c.length() == 8);
  CHECK(c.dimension() == 2);
  CHECK(min_distance(c) == 6);
  CHECK(code_locality(c).code_locality == 1);
}

TEST_CASE("class5 fixtures reproduce every near-MDS target") {
  CHECK(class5_targets().size() == 16);
  CHECK(class5_fixtures().size() == 16);
  for (const auto& [n, k] : class5_targets()) {
    LinearCode c = class5(n, k);
    CHECK(c.length() == n);
    CHECK(c.dimension() == k);
    CHECK(min_distance(c) == n - k);
    CHECK(code_locality(c).code_locality == k - 1);
  }
  CHECK(class5(12, 6).parity_check() ==
        LinearCode::from_parity_check(extended_qr12_parity()).parity_check());
  CHECK_THROWS_AS(class5(12, 4), std::invalid_argument);
}

TEST_CASE("class6") {
  Gf3Matrix h = class6_parity(3);
  CHECK(h == Gf3Matrix::from_rows({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
                                   {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
                                   {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}}));
  LinearCode c3 = class6(3);
  CHECK(c3.length() == 12);
  CHECK(c3.dimension() == 7);
  CHECK(min_distance(c3) == 4);
  LocalityProfile p = code_locality(c3);
  CHECK(p.code_locality == 3);
  for (auto ri : p.per_symbol) CHECK(ri <= 3);

  LinearCode c4 = class6(4);
  CHECK(c4.length() == 16);
  CHECK(c4.dimension() == 10);
  CHECK(min_distance(c4, DistanceStrategy::kColumnSearch) == 4);

  CHECK_THROWS_AS(class6(2), std::invalid_argument);
}

TEST_CASE("class7") {
  Gf3Matrix h = class7_parity(3);
  CHECK(h == Gf3Matrix::from_rows({{1, 1, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 1, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 1, 1},
                                   {0, 1, 2, 0, 1, 2, 0, 1, 2}}));
  LinearCode c3 = class7(3);
  CHECK(min_distance(c3) == 3);
  CHECK((long long)min_distance(c3) == singleton_like_d(9, 5, 2));

  LinearCode c5 = class7(5);
  CHECK(c5.length() == 15);
  CHECK(c5.dimension() == 9);
  CHECK(min_distance(c5) == 3);

  CHECK_THROWS_AS(class7(2), std::invalid_argument);
}

TEST_CASE("class8") {
  LinearCode c = class8();
  CHECK(c.length() == 12);
  CHECK(c.dimension() == 5);
  CHECK(min_distance(c) == 6);
  CHECK(code_locality(c).code_locality == 2);
}

TEST_CASE("uniform covers and the locality-row cap") {
  // r | k: the cover is disjoint with uniform weight r+1
  for (auto [k, r] : {std::pair<std::size_t, std::size_t>{6, 2}, {4, 2}, {6, 3}, {2, 1}})
    CHECK(check_disjoint_uniform(build_cover_matrix(class1(k, r), r), r));

  // distance >= 5 constructions with disjoint uniform covers obey the cap
  for (const auto& c : {class4(), class8()}) {
    std::size_t r = code_locality(c).code_locality;
    CoverMatrix cm = build_cover_matrix(c, r);
    REQUIRE(check_disjoint_uniform(cm, r));
    REQUIRE(min_distance(c) >= 5);
    long long u = (long long)(c.length() - c.dimension() - cm.l);
    CHECK(Rational((long long)cm.l) <= lemma5_bound(3, u, (long long)r));
  }
}

TEST_CASE("fixture text parser") {
  auto fx = parse_class5_fixtures("11 6 : puncture(1)\n# comment\n10 4 : shorten(2) shorten(1)\n");
  REQUIRE(fx.size() == 2);
  CHECK(fx[0].n == 11);
  CHECK(fx[0].steps.size() == 1);
  CHECK(fx[1].steps[0].op == SurgeryStep::Op::kShorten);
  CHECK(fx[1].steps[0].pos == 2);
  CHECK_THROWS(parse_class5_fixtures("11 6 puncture(1)\n"));
  CHECK_THROWS(parse_class5_fixtures("11 6 : explode(1)\n"));
}
