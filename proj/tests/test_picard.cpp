#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "cubics/picard.hpp"

using namespace cubics;
using cubics::testing::apply_word;
using cubics::testing::random_class;
using cubics::testing::random_weyl_word;
using cubics::testing::rng;

TEST_CASE("intersection pairing on fixed classes") {
  const DivisorClass k = canonical_class();
  const DivisorClass h = hyperplane_class();
  CHECK(pair(k, k) == 3);
  CHECK(pair(h, h) == 3);
  CHECK(pair(-k, -k) == 3);
  CHECK(pair(divisor({2, -1, -1, -1, 0, 0, 0}), divisor({1, -1, 0, 0, 0, 0, 0})) == 1);
  CHECK(pair(standard_class(ClassName::E(1)), standard_class(ClassName::E(1))) == -1);
}

TEST_CASE("pairing signature on the basis") {
  const DivisorClass l = standard_class(ClassName::L());
  CHECK(pair(l, l) == 1);
  for (int i = 1; i <= 6; ++i) {
    const DivisorClass e = standard_class(ClassName::E(i));
    CHECK(pair(e, e) == -1);
    CHECK(pair(l, e) == 0);
    for (int j = i + 1; j <= 6; ++j) CHECK(pair(e, standard_class(ClassName::E(j))) == 0);
  }
}

TEST_CASE("pairing is symmetric and bilinear on random triples") {
  auto gen = rng(101);
  for (int t = 0; t < 200; ++t) {
    const DivisorClass a = random_class(gen);
    const DivisorClass b = random_class(gen);
    const DivisorClass c = random_class(gen);
    CHECK(pair(a, b) == pair(b, a));
    CHECK(pair(a + b, c) == pair(a, c) + pair(b, c));
    CHECK(pair(Int(7) * a - Int(3) * b, c) == 7 * pair(a, c) - 3 * pair(b, c));
  }
}

TEST_CASE("standard classes") {
  CHECK(standard_class(ClassName::Lij(5, 6)) == divisor({2, -1, -1, -1, -1, 0, 0}));
  CHECK(standard_class(ClassName::B(1)) == divisor({3, -2, -1, -1, -1, -1, -1}));
  CHECK(standard_class(ClassName::Hyperplane()) == divisor({3, -1, -1, -1, -1, -1, -1}));
  CHECK(standard_class(ClassName::AntiK()) == -canonical_class());
  CHECK(standard_class(ClassName::K()) == divisor({-3, 1, 1, 1, 1, 1, 1}));
  CHECK(standard_class(ClassName::L()) == divisor({1, 0, 0, 0, 0, 0, 0}));
  CHECK(standard_class(ClassName::E(3)) == divisor({0, 0, 0, 1, 0, 0, 0}));
  CHECK(standard_class(ClassName::F(2, 4)) == divisor({1, 0, -1, 0, -1, 0, 0}));
  CHECK(standard_class(ClassName::G(6)) == divisor({2, -1, -1, -1, -1, -1, 0}));
  CHECK(standard_class(ClassName::Li(2)) == divisor({1, 0, -1, 0, 0, 0, 0}));
  CHECK_THROWS_AS(standard_class(ClassName::E(0)), std::out_of_range);
  CHECK_THROWS_AS(standard_class(ClassName::E(7)), std::out_of_range);
  CHECK_THROWS_AS(standard_class(ClassName::Lij(3, 3)), std::out_of_range);
  CHECK_THROWS_AS(standard_class(ClassName::F(5, 2)), std::out_of_range);
}

TEST_CASE("the 27 lines") {
  const auto& lines = lines27();
  REQUIRE(lines.size() == 27);
  const DivisorClass k = canonical_class();
  for (const DivisorClass& l : lines) {
    CHECK(pair(l, l) == -1);
    CHECK(pair(l, k) == -1);
    CHECK(pair(l, -k) == 1);
  }
  CHECK(std::count(lines.begin(), lines.end(), standard_class(ClassName::E(1))) == 1);
  CHECK(std::set<DivisorClass>(lines.begin(), lines.end()).size() == 27);
}

TEST_CASE("the 27 conic pencils") {
  const auto& pencils = pencils27();
  REQUIRE(pencils.size() == 27);
  const DivisorClass h = hyperplane_class();
  for (const DivisorClass& c : pencils) {
    CHECK(pair(c, c) == 0);
    CHECK(pair(c, h) == 2);
  }
  const DivisorClass b1 = standard_class(ClassName::B(1));
  CHECK(pair(b1, b1) == 0);
  CHECK(std::count(pencils.begin(), pencils.end(), b1) == 1);
}

TEST_CASE("nefness") {
  CHECK(is_nef(hyperplane_class()));
  CHECK_FALSE(is_nef(standard_class(ClassName::E(1))));
  CHECK(is_nef(divisor({5, -2, -2, -2, -2, -2, -2})));
  CHECK(is_nef(divisor({1, -1, 0, 0, 0, 0, 0})));
  CHECK_FALSE(is_nef(divisor({1, -1, -1, 0, 0, 0, 0})));
  CHECK_FALSE(is_nef(canonical_class()));
}

TEST_CASE("roots and reflections") {
  CHECK_THROWS_AS(Root(standard_class(ClassName::E(1))), std::invalid_argument);
  CHECK_THROWS_AS(Root(divisor({1, -1, -1, 0, 0, 0, 0})), std::invalid_argument);
  const Root cremona(divisor({1, -1, -1, -1, 0, 0, 0}));
  CHECK(reflect(standard_class(ClassName::E(1)), cremona) == divisor({1, 0, -1, -1, 0, 0, 0}));

  const DivisorClass k = canonical_class();
  for (const Root& r : simple_roots()) {
    CHECK(reflect(k, r) == k);
    CHECK(reflect(hyperplane_class(), r) == hyperplane_class());
  }

  auto gen = rng(202);
  for (int t = 0; t < 200; ++t) {
    const DivisorClass d = random_class(gen);
    for (const Root& r : simple_roots()) CHECK(reflect(reflect(d, r), r) == d);
  }
}

TEST_CASE("random Weyl words preserve the pairing and fix K") {
  auto gen = rng(303);
  for (int t = 0; t < 200; ++t) {
    const auto word = random_weyl_word(gen);
    const DivisorClass a = random_class(gen);
    const DivisorClass b = random_class(gen);
    CHECK(pair(apply_word(word, a), apply_word(word, b)) == pair(a, b));
    CHECK(apply_word(word, -canonical_class()) == -canonical_class());
  }
}

TEST_CASE("Weyl orbits") {
  const auto orbit_e1 = weyl_orbit(standard_class(ClassName::E(1)));
  REQUIRE(orbit_e1.size() == 27);
  std::vector<DivisorClass> lines = lines27();
  std::sort(lines.begin(), lines.end());
  CHECK(orbit_e1 == lines);

  const auto orbit_l1 = weyl_orbit(standard_class(ClassName::Li(1)));
  REQUIRE(orbit_l1.size() == 27);
  std::vector<DivisorClass> pencils = pencils27();
  std::sort(pencils.begin(), pencils.end());
  CHECK(orbit_l1 == pencils);

  const auto orbit_k = weyl_orbit(-canonical_class());
  CHECK(orbit_k == std::vector<DivisorClass>{-canonical_class()});
}
