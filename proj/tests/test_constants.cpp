#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "cubics/constants.hpp"
#include "cubics/cones.hpp"

using namespace cubics;
using cubics::testing::apply_word;
using cubics::testing::random_nef;
using cubics::testing::random_weyl_word;
using cubics::testing::rng;

namespace {

// Independent evaluation of a certificate's defining quantity.
Rat certificate_value(const DivisorClass& d, const Certificate& c) {
  if (c.hyperplane_section) return Rat(pair(d, hyperplane_class())) / 2;
  return Rat(pair(d, c.pencil));
}

}  // namespace

TEST_CASE("seshadri on fixed classes") {
  const DivisorClass mk = hyperplane_class();
  ConstantResult r = seshadri(mk);
  CHECK(r.value == ExtendedRational(Rat(3, 2)));
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].hyperplane_section);

  r = seshadri(standard_class(ClassName::L()));
  CHECK(r.value == ExtendedRational(Rat(1)));
  REQUIRE(r.certificates.size() == 6);
  for (int i = 1; i <= 6; ++i) CHECK(r.certificates[i - 1].pencil == standard_class(ClassName::Li(i)));

  r = seshadri(standard_class(ClassName::Li(1)));
  CHECK(r.value == ExtendedRational(Rat(0)));
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].pencil == standard_class(ClassName::Li(1)));

  CHECK_THROWS_AS(seshadri(standard_class(ClassName::E(1))), std::invalid_argument);
}

TEST_CASE("alpha on fixed classes") {
  const DivisorClass mk = hyperplane_class();
  CHECK(alpha(mk, TangentType::Cuspidal).value == ExtendedRational(Rat(3, 2)));
  CHECK(alpha(mk, TangentType::NodalSlopesInKvNotK).value == ExtendedRational(Rat(3, 2)));
  CHECK(alpha(mk, TangentType::NodalSlopesInKOrNotInKv).value == ExtendedRational(Rat(2)));

  ConstantResult r = alpha(standard_class(ClassName::L()), TangentType::NodalSlopesInKOrNotInKv);
  CHECK(r.value == ExtendedRational(Rat(1)));
  REQUIRE(r.certificates.size() == 6);
  for (const Certificate& c : r.certificates) CHECK_FALSE(c.hyperplane_section);

  CHECK_THROWS_AS(alpha(canonical_class(), TangentType::Cuspidal), std::invalid_argument);
}

TEST_CASE("anticanonical case table") {
  using TT = TangentType;
  auto one = ExtendedRational(Rat(1));
  auto three_half = ExtendedRational(Rat(3, 2));
  auto two = ExtendedRational(Rat(2));
  for (TT t : {TT::Cuspidal, TT::NodalSlopesInKvNotK, TT::NodalSlopesInKOrNotInKv}) {
    CHECK(anticanonical_constants(true, t) == std::pair(one, one));
  }
  CHECK(anticanonical_constants(false, TT::Cuspidal) == std::pair(three_half, three_half));
  CHECK(anticanonical_constants(false, TT::NodalSlopesInKvNotK) == std::pair(three_half, three_half));
  CHECK(anticanonical_constants(false, TT::NodalSlopesInKOrNotInKv) == std::pair(three_half, two));
}

TEST_CASE("blow-up oracle classes") {
  const auto& classes = blowup7_neg_classes();
  REQUIRE(classes.size() == 56);
  int with_mult_one = 0, with_mult_two = 0;
  for (const auto& l : classes) {
    const Int m = -l[7];
    if (m == 1) ++with_mult_one;
    if (m == 2) ++with_mult_two;
  }
  CHECK(with_mult_one == 27);
  CHECK(with_mult_two == 1);
}

TEST_CASE("blow-up oracle values") {
  CHECK(seshadri_oracle(hyperplane_class()) == ExtendedRational(Rat(3, 2)));
  CHECK(seshadri_oracle(standard_class(ClassName::L())) == ExtendedRational(Rat(1)));
  CHECK(seshadri_oracle(standard_class(ClassName::Li(1))) == ExtendedRational(Rat(0)));
  CHECK_THROWS_AS(seshadri_oracle(canonical_class()), std::invalid_argument);
}

TEST_CASE("oracle agrees with the closed form") {
  for (const DivisorClass& r : nef_cone().rays) {
    CHECK(seshadri(r).value == seshadri_oracle(r));
  }
  auto gen = rng(505);
  for (int t = 0; t < 500; ++t) {
    const DivisorClass d = random_nef(gen);
    CHECK(seshadri(d).value == seshadri_oracle(d));
  }
}

TEST_CASE("alpha on singular rational curves") {
  CHECK(alpha_rational_curve(3, {{2, 1}}) == ExtendedRational(Rat(3, 2)));
  CHECK(alpha_rational_curve(3, {{1, 1}, {1, 1}}) == ExtendedRational(Rat(3)));
  CHECK(alpha_rational_curve(3, {{1, 0}, {1, 0}}) == ExtendedRational::infinity());
  CHECK(alpha_rational_curve(3, {{1, 0}, {1, 2}}) == ExtendedRational(Rat(3, 2)));
  for (unsigned d = 1; d <= 9; ++d) {
    CHECK(alpha_rational_curve(d, {{1, 1}}) == ExtendedRational(Rat(d)));
  }
  CHECK_THROWS_AS(alpha_rational_curve(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(alpha_rational_curve(0, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(alpha_rational_curve(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(alpha_rational_curve(3, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("field rescaling") {
  CHECK(rescale_alpha_field(ExtendedRational(Rat(2)), 2, 1) == ExtendedRational(Rat(4)));
  CHECK(rescale_alpha_field(ExtendedRational(Rat(5, 3)), 1, 1) == ExtendedRational(Rat(5, 3)));
  CHECK(rescale_alpha_field(ExtendedRational::infinity(), 4, 2) == ExtendedRational::infinity());
  CHECK(rescale_alpha_field(ExtendedRational(Rat(1)), 6, 4) == ExtendedRational(Rat(3, 2)));
  CHECK_THROWS_AS(rescale_alpha_field(ExtendedRational(Rat(1)), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(rescale_alpha_field(ExtendedRational(Rat(1)), 1, 0), std::invalid_argument);
}

TEST_CASE("Liouville gap on fixed classes") {
  CHECK(liouville_gap(hyperplane_class(), TangentType::Cuspidal) == 0);
  CHECK(liouville_gap(hyperplane_class(), TangentType::NodalSlopesInKOrNotInKv) == Rat(1, 2));
  CHECK(liouville_gap(standard_class(ClassName::L()), TangentType::NodalSlopesInKOrNotInKv) == 0);
}

TEST_CASE("homogeneity of seshadri and alpha") {
  auto gen = rng(606);
  for (int t = 0; t < 100; ++t) {
    const DivisorClass d = random_nef(gen, 5);
    const Rat e = seshadri(d).value.value();
    const Rat a = alpha(d, TangentType::NodalSlopesInKOrNotInKv).value.value();
    for (long m : {2L, 3L, 7L, 20L}) {
      CHECK(seshadri(Int(m) * d).value.value() == m * e);
      CHECK(alpha(Int(m) * d, TangentType::NodalSlopesInKOrNotInKv).value.value() == m * a);
    }
  }
}

TEST_CASE("superadditivity (concavity on the nef cone)") {
  auto gen = rng(707);
  std::uniform_int_distribution<long> coeff(0, 10);
  for (int t = 0; t < 200; ++t) {
    const DivisorClass d1 = random_nef(gen, 4);
    const DivisorClass d2 = random_nef(gen, 4);
    const Int a = coeff(gen), b = coeff(gen);
    const Rat lhs = seshadri(a * d1 + b * d2).value.value();
    const Rat rhs = a * seshadri(d1).value.value() + b * seshadri(d2).value.value();
    CHECK(lhs >= rhs);
    for (auto tt : {TangentType::Cuspidal, TangentType::NodalSlopesInKOrNotInKv}) {
      const Rat al = alpha(a * d1 + b * d2, tt).value.value();
      const Rat ar = a * alpha(d1, tt).value.value() + b * alpha(d2, tt).value.value();
      CHECK(al >= ar);
    }
  }
}

TEST_CASE("Liouville gap is non-negative on random nef classes") {
  auto gen = rng(808);
  using TT = TangentType;
  for (int t = 0; t < 300; ++t) {
    const DivisorClass d = random_nef(gen);
    for (TT tt : {TT::Cuspidal, TT::NodalSlopesInKvNotK, TT::NodalSlopesInKOrNotInKv}) {
      CHECK(liouville_gap(d, tt) >= 0);
    }
  }
}

TEST_CASE("Weyl invariance of seshadri and alpha") {
  auto gen = rng(909);
  for (int t = 0; t < 200; ++t) {
    const DivisorClass d = random_nef(gen);
    const auto word = random_weyl_word(gen);
    const DivisorClass wd = apply_word(word, d);
    CHECK(is_nef(wd));
    CHECK(seshadri(wd).value == seshadri(d).value);
    for (auto tt : {TangentType::Cuspidal, TangentType::NodalSlopesInKOrNotInKv}) {
      CHECK(alpha(wd, tt).value == alpha(d, tt).value);
    }
  }
}

TEST_CASE("shared alpha certificates persist under positive combinations") {
  auto gen = rng(1010);
  std::uniform_int_distribution<long> coeff(0, 9);
  const auto tt = TangentType::NodalSlopesInKOrNotInKv;
  int exercised = 0;
  for (int t = 0; t < 400; ++t) {
    const DivisorClass d1 = random_nef(gen, 3);
    const DivisorClass d2 = random_nef(gen, 3);
    const auto c1 = alpha(d1, tt).certificates;
    const auto c2 = alpha(d2, tt).certificates;
    const Int a1 = coeff(gen), a2 = coeff(gen);
    const auto cc = alpha(a1 * d1 + a2 * d2, tt).certificates;
    for (const Certificate& c : c1) {
      if (std::find(c2.begin(), c2.end(), c) != c2.end()) {
        CHECK(std::find(cc.begin(), cc.end(), c) != cc.end());
        ++exercised;
      }
    }
  }
  CHECK(exercised > 0);
}

TEST_CASE("certificates re-evaluate to the stated value") {
  auto gen = rng(1111);
  for (int t = 0; t < 200; ++t) {
    const DivisorClass d = random_nef(gen);
    const ConstantResult e = seshadri(d);
    REQUIRE(!e.certificates.empty());
    for (const Certificate& c : e.certificates) CHECK(certificate_value(d, c) == e.value.value());
    for (auto tt : {TangentType::Cuspidal, TangentType::NodalSlopesInKOrNotInKv}) {
      const ConstantResult a = alpha(d, tt);
      REQUIRE(!a.certificates.empty());
      for (const Certificate& c : a.certificates) CHECK(certificate_value(d, c) == a.value.value());
    }
  }
}
