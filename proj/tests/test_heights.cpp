#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"

#include "cubics/constants.hpp"
#include "cubics/heights.hpp"

using namespace cubics;

namespace {

ProjectivePoint pt(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return ProjectivePoint(std::move(v));
}

double dbl(const Real& x) { return static_cast<double>(x); }

// Median of the final half of a gamma sequence computed with the distance
// scaled by a constant factor; used to probe stability of the estimate under
// boundedly-equivalent distances.
double scaled_estimate(const TestSequence& seq, double factor) {
  std::vector<Real> gammas;
  for (std::size_t i = 0; i < seq.points.size(); ++i) {
    const Rat d2 = distance_squared(seq.points[i], seq.target);
    Real neg_log_d = (log(Real(denominator(d2))) - log(Real(numerator(d2)))) / 2 - log(Real(factor));
    gammas.push_back(log(Real(seq.heights[i])) / neg_log_d);
  }
  std::vector<Real> tail(gammas.begin() + static_cast<std::ptrdiff_t>(gammas.size() / 2), gammas.end());
  std::sort(tail.begin(), tail.end());
  const std::size_t n = tail.size();
  return dbl(n % 2 == 1 ? tail[n / 2] : (tail[n / 2 - 1] + tail[n / 2]) / 2);
}

}  // namespace

TEST_CASE("projective points normalize to a unique representative") {
  CHECK(pt({4, 6}) == pt({2, 3}));
  CHECK(pt({-2, 4}) == pt({1, -2}));
  CHECK(pt({0, -5}) == pt({0, 1}));
  CHECK(pt({2, 3}).coords()[0] == 1 * 2);
  CHECK_THROWS_AS(pt({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(pt({7}), std::invalid_argument);
}

TEST_CASE("heights") {
  CHECK(height(pt({1, 0})) == 1);
  CHECK(height(pt({22, 7})) == 22);
  CHECK(height(pt({4, 6})) == 3);
  CHECK(height(pt({-9, 5})) == 9);
  CHECK(height(pt({3, -6, 12})) == 4);
  CHECK(height(pt({0, 0, 1})) == 1);
}

TEST_CASE("distance basics") {
  const ProjectivePoint a = pt({3, 5});
  const ProjectivePoint b = pt({2, -7});
  CHECK(distance_squared(a, a) == 0);
  CHECK(distance(a, a) == 0.0);
  CHECK(distance_squared(a, b) == distance_squared(b, a));
  CHECK(distance_squared(a, b) > 0);
  CHECK(distance(a, b) <= 1.0);
  CHECK_THROWS_AS(distance_squared(a, pt({1, 1, 1})), std::invalid_argument);

  // d([1:0], [n:1]) = 1/sqrt(n^2+1), exactly at the level of squares.
  for (long n : {1L, 2L, 10L, 145L}) {
    CHECK(distance_squared(pt({1, 0}), pt({n, 1})) == Rat(1, n * n + 1));
  }
}

TEST_CASE("line shift sequences") {
  const TestSequence seq = generate(SequenceSpec::line_shift(Rat(0), 10));
  CHECK(seq.points.size() == 10);
  CHECK(seq.target == pt({0, 1}));
  CHECK(seq.points[4] == pt({1, 5}));
  CHECK(seq.heights[4] == 5);

  const TestSequence shifted = generate(SequenceSpec::line_shift(Rat(1, 3), 10));
  CHECK(shifted.target == pt({1, 3}));
  CHECK(shifted.points[0] == pt({4, 3}));  // 1/3 + 1 = 4/3

  CHECK_THROWS_AS(generate(SequenceSpec::line_shift(Rat(0), 9)), std::invalid_argument);
}

TEST_CASE("cuspidal cubic sequences") {
  const TestSequence seq = generate(SequenceSpec::cuspidal_cubic(12));
  CHECK(seq.target == pt({0, 0, 1}));
  for (long i = 1; i <= 12; ++i) {
    CHECK(seq.points[static_cast<std::size_t>(i - 1)] == pt({i, 1, i * i * i}));
  }
}

TEST_CASE("nodal cubic branch sequences") {
  const TestSequence plus = generate(SequenceSpec::nodal_cubic_branch(+1, 12));
  const TestSequence minus = generate(SequenceSpec::nodal_cubic_branch(-1, 12));
  CHECK(plus.target == pt({0, 0, 1}));
  for (long i = 1; i <= 12; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - 1);
    CHECK(plus.points[k] == pt({i * (2 * i + 1), (i + 1) * (2 * i + 1), i * i * i}));
    CHECK(minus.points[k] == pt({i * (2 * i + 1), -(i + 1) * (2 * i + 1), i * i * i}));
    // On the curve y^2 z = x^3 + x^2 z.
    const auto& c = plus.points[k].coords();
    CHECK(c[1] * c[1] * c[2] == c[0] * c[0] * c[0] + c[0] * c[0] * c[2]);
  }
  CHECK_THROWS_AS(generate(SequenceSpec::nodal_cubic_branch(2, 12)), std::invalid_argument);
}

TEST_CASE("split quadric sequences") {
  const TestSequence seq = generate(SequenceSpec::split_quadric(1, 2, 10));
  for (std::size_t k = 0; k < seq.points.size(); ++k) {
    const auto& c = seq.points[k].coords();
    REQUIRE(c.size() == 4);
    CHECK(c[0] * c[3] == c[1] * c[2]);  // Segre quadric
    CHECK(seq.heights[k] == Int(k + 1)); // box height i^min(1,2)
  }
  const TestSequence swapped = generate(SequenceSpec::split_quadric(3, 2, 10));
  CHECK(swapped.heights[9] == Int(100));  // i^min(3,2) = i^2
  CHECK_THROWS_AS(generate(SequenceSpec::split_quadric(0, 1, 10)), std::invalid_argument);
}

TEST_CASE("estimate rejects bad input") {
  const TestSequence seq = generate(SequenceSpec::line_shift(Rat(0), 10));
  CHECK_THROWS_AS(estimate_alpha(seq.points, seq.points[0], 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_alpha(seq.points, seq.target, 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_alpha({seq.points[0]}, seq.target, 1), std::invalid_argument);
}

TEST_CASE("line estimate approaches 1") {
  const TestSequence seq = generate(SequenceSpec::line_shift(Rat(0), 1000));
  const AlphaEstimate est = estimate_alpha(seq.points, seq.target, 1);
  CHECK(dbl(est.estimate) == doctest::Approx(1.0).epsilon(0.1));
  CHECK(est.tail_begin == 500);
  CHECK(est.distances_decreasing);
  CHECK(dbl(est.tail_max - est.tail_min) < 0.01);
}

TEST_CASE("estimates scale exactly with the height degree") {
  const TestSequence seq = generate(SequenceSpec::line_shift(Rat(0), 200));
  const AlphaEstimate e1 = estimate_alpha(seq.points, seq.target, 1);
  const AlphaEstimate e2 = estimate_alpha(seq.points, seq.target, 2);
  CHECK(e2.estimate == 2 * e1.estimate);
}

TEST_CASE("cuspidal estimate approaches 3/2 and matches the branch formula") {
  const TestSequence seq = generate(SequenceSpec::cuspidal_cubic(1000));
  const AlphaEstimate est = estimate_alpha(seq);
  CHECK(dbl(est.estimate) == doctest::Approx(1.5).epsilon(0.1 / 1.5));
  const ExtendedRational formula = alpha_rational_curve(3, {{2, 1}});
  CHECK(std::abs(dbl(est.estimate) - static_cast<double>(Rat(formula.value()))) < 0.1);
}

TEST_CASE("nodal estimate decreases toward 3 from above") {
  const AlphaEstimate small = estimate_alpha(generate(SequenceSpec::nodal_cubic_branch(+1, 1000)));
  const AlphaEstimate large = estimate_alpha(generate(SequenceSpec::nodal_cubic_branch(+1, 4000)));
  CHECK(dbl(small.estimate) > 3.0);
  CHECK(dbl(large.estimate) > 3.0);
  CHECK(dbl(large.estimate) < dbl(small.estimate));
  CHECK(dbl(large.estimate) < 3.5);
}

TEST_CASE("split quadric estimates reproduce min(a,b)") {
  for (auto [a, b] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 3}}) {
    const TestSequence seq = generate(SequenceSpec::split_quadric(a, b, 1000));
    const AlphaEstimate est = estimate_alpha(seq);
    const double want = std::min(a, b);
    CHECK(dbl(est.estimate) == doctest::Approx(want).epsilon(0.15 / want));
  }
}

TEST_CASE("estimate is stable under boundedly-equivalent distances") {
  for (double factor : {0.5, 2.0}) {
    const TestSequence shorter = generate(SequenceSpec::line_shift(Rat(0), 1000));
    const TestSequence longer = generate(SequenceSpec::line_shift(Rat(0), 8000));
    const double base_short = scaled_estimate(shorter, 1.0);
    const double base_long = scaled_estimate(longer, 1.0);
    const double shift_short = std::abs(scaled_estimate(shorter, factor) - base_short);
    const double shift_long = std::abs(scaled_estimate(longer, factor) - base_long);
    CHECK(shift_short < 0.2);
    CHECK(shift_long < shift_short);  // o(1) as the length grows
  }
}

TEST_CASE("non-decreasing tail distances are flagged, not fatal") {
  std::vector<ProjectivePoint> pts;
  for (long i = 1; i <= 20; ++i) pts.push_back(pt({1, i}));
  pts.push_back(pt({1, 3}));  // distance jumps back up at the end
  const AlphaEstimate est = estimate_alpha(pts, pt({0, 1}), 1);
  CHECK_FALSE(est.distances_decreasing);
}

TEST_CASE("csv emission") {
  const TestSequence seq = generate(SequenceSpec::line_shift(Rat(0), 10));
  const AlphaEstimate est = estimate_alpha(seq);
  std::ostringstream os;
  write_sequence_csv(os, seq, est);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "i,height,distance,gamma");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 10);
}
