#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cubics/arith.hpp"

namespace cubics {

/// A rational point of projective space in primitive integer coordinates:
/// gcd of the coordinates is 1 and the first nonzero coordinate is positive,
/// so the representation is unique per point.
class ProjectivePoint {
 public:
  /// Normalizes the given coordinates.  Throws std::invalid_argument when
  /// fewer than two coordinates are given or all of them vanish.
  explicit ProjectivePoint(std::vector<Int> coords);

  const std::vector<Int>& coords() const { return c_; }
  std::size_t dimension() const { return c_.size() - 1; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

 private:
  std::vector<Int> c_;
};

/// Multiplicative height over the rationals.  Primitivity kills every finite
/// place, leaving the archimedean maximum of the absolute coordinates.
Int height(const ProjectivePoint& p);

/// Square of the archimedean projective distance
/// |x ^ y| / (|x| |y|) with Euclidean norms, as an exact rational via the
/// Lagrange identity.  Throws std::invalid_argument on a dimension mismatch.
Rat distance_squared(const ProjectivePoint& p, const ProjectivePoint& q);

/// The distance itself, in double precision; lies in [0, 1] and vanishes
/// exactly at equal points.
double distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// Families of test sequences of rational points converging to a rational
/// target along a fixed curve:
///   LineShift          x_i = target + 1/i on the projective line
///   CuspidalCubic      [t^2 : t^3 : 1] on y^2 z = x^3 at t = 1/i, toward the
///                      cusp [0:0:1]
///   NodalCubicBranch   x = t^2 - 1, y = t(t^2 - 1) on y^2 z = x^3 + x^2 z at
///                      t = sign (i+1)/i, approaching the node [0:0:1] along
///                      the branch through t = sign 1
///   SplitQuadric       points of a quadric surface in Segre coordinates,
///                      varying the factor with the smaller exponent; the
///                      attached height is the box product H(x)^a H(y)^b
struct SequenceSpec {
  enum class Kind { LineShift, NodalCubicBranch, CuspidalCubic, SplitQuadric };
  Kind kind = Kind::LineShift;
  std::size_t length = 100;  // at least 10
  Rat target = 0;            // LineShift only
  int branch_sign = +1;      // NodalCubicBranch only: +1 or -1
  unsigned exp_a = 1;        // SplitQuadric only
  unsigned exp_b = 1;

  static SequenceSpec line_shift(Rat target, std::size_t length);
  static SequenceSpec cuspidal_cubic(std::size_t length);
  static SequenceSpec nodal_cubic_branch(int sign, std::size_t length);
  static SequenceSpec split_quadric(unsigned a, unsigned b, std::size_t length);
};

struct TestSequence {
  std::vector<ProjectivePoint> points;
  ProjectivePoint target;
  /// H_L(x_i): the ambient height for the curve families, the box product
  /// for the split quadric.
  std::vector<Int> heights;
};

/// Throws std::invalid_argument on invalid parameters (length < 10, a zero
/// exponent, a branch sign other than +1 or -1).
TestSequence generate(const SequenceSpec& spec);

struct AlphaEstimate {
  std::vector<Real> gammas;   // gamma_i = degree log H(x_i) / (-log d(x, x_i))
  Real estimate = 0;          // median over the tail window
  std::size_t tail_begin = 0; // the tail window is [tail_begin, size)
  Real tail_min = 0;
  Real tail_max = 0;
  /// False flags a tail in which the distances fail to decrease strictly.
  bool distances_decreasing = true;
};

/// Empirical approximation exponents of a sequence against the height of
/// O(degree), taken as height^degree.  The estimate is the median of the
/// final half of the gamma sequence; the tail spread is reported alongside.
/// Throws std::invalid_argument when some point equals the target or the
/// sequence is shorter than 2.
AlphaEstimate estimate_alpha(const std::vector<ProjectivePoint>& points, const ProjectivePoint& target,
                             unsigned degree);

/// Same, with the sequence's attached heights in place of the ambient ones.
AlphaEstimate estimate_alpha(const TestSequence& seq, unsigned degree = 1);

/// One line per point: index, height, distance, gamma.
void write_sequence_csv(std::ostream& os, const TestSequence& seq, const AlphaEstimate& est);

}  // namespace cubics
