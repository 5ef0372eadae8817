#include "cubics/heights.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cubics {

ProjectivePoint::ProjectivePoint(std::vector<Int> coords) : c_(std::move(coords)) {
  if (c_.size() < 2) throw std::invalid_argument("ProjectivePoint: need at least two coordinates");
  Int g = 0;
  for (const Int& x : c_) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("ProjectivePoint: zero coordinate vector");
  for (const Int& x : c_) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  if (g != 1) {
    for (Int& x : c_) x /= g;
  }
}

Int height(const ProjectivePoint& p) {
  Int h = 0;
  for (const Int& x : p.coords()) h = std::max(h, Int(abs(x)));
  return h;
}

Rat distance_squared(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dimension() != q.dimension()) throw std::invalid_argument("distance: dimension mismatch");
  Int pp = 0, qq = 0, pq = 0;
  for (std::size_t k = 0; k < p.coords().size(); ++k) {
    pp += p.coords()[k] * p.coords()[k];
    qq += q.coords()[k] * q.coords()[k];
    pq += p.coords()[k] * q.coords()[k];
  }
  // |p ^ q|^2 = |p|^2 |q|^2 - (p.q)^2.
  return Rat(pp * qq - pq * pq) / Rat(pp * qq);
}

double distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::sqrt(static_cast<double>(Real(distance_squared(p, q))));
}

SequenceSpec SequenceSpec::line_shift(Rat target, std::size_t length) {
  SequenceSpec s;
  s.kind = Kind::LineShift;
  s.target = std::move(target);
  s.length = length;
  return s;
}

SequenceSpec SequenceSpec::cuspidal_cubic(std::size_t length) {
  SequenceSpec s;
  s.kind = Kind::CuspidalCubic;
  s.length = length;
  return s;
}

SequenceSpec SequenceSpec::nodal_cubic_branch(int sign, std::size_t length) {
  SequenceSpec s;
  s.kind = Kind::NodalCubicBranch;
  s.branch_sign = sign;
  s.length = length;
  return s;
}

SequenceSpec SequenceSpec::split_quadric(unsigned a, unsigned b, std::size_t length) {
  SequenceSpec s;
  s.kind = Kind::SplitQuadric;
  s.exp_a = a;
  s.exp_b = b;
  s.length = length;
  return s;
}

namespace {

ProjectivePoint point_from_rationals(const std::vector<Rat>& v) {
  Int common = 1;
  for (const Rat& x : v) common = lcm(common, Int(denominator(x)));
  std::vector<Int> coords;
  coords.reserve(v.size());
  for (const Rat& x : v) coords.push_back(Int(numerator(x)) * (common / Int(denominator(x))));
  return ProjectivePoint(std::move(coords));
}

ProjectivePoint segre(const ProjectivePoint& x, const ProjectivePoint& y) {
  const auto& u = x.coords();
  const auto& s = y.coords();
  return ProjectivePoint({u[0] * s[0], u[0] * s[1], u[1] * s[0], u[1] * s[1]});
}

}  // namespace

TestSequence generate(const SequenceSpec& spec) {
  if (spec.length < 10) throw std::invalid_argument("generate: sequence length must be at least 10");

  switch (spec.kind) {
    case SequenceSpec::Kind::LineShift: {
      ProjectivePoint target({Int(numerator(spec.target)), Int(denominator(spec.target))});
      std::vector<ProjectivePoint> pts;
      std::vector<Int> hs;
      for (std::size_t i = 1; i <= spec.length; ++i) {
        Rat t = spec.target + Rat(1, Int(i));
        ProjectivePoint p({Int(numerator(t)), Int(denominator(t))});
        hs.push_back(height(p));
        pts.push_back(std::move(p));
      }
      return TestSequence{std::move(pts), std::move(target), std::move(hs)};
    }
    case SequenceSpec::Kind::CuspidalCubic: {
      ProjectivePoint target({Int(0), Int(0), Int(1)});
      std::vector<ProjectivePoint> pts;
      std::vector<Int> hs;
      for (std::size_t i = 1; i <= spec.length; ++i) {
        Rat t = Rat(1, Int(i));
        ProjectivePoint p = point_from_rationals({t * t, t * t * t, Rat(1)});
        hs.push_back(height(p));
        pts.push_back(std::move(p));
      }
      return TestSequence{std::move(pts), std::move(target), std::move(hs)};
    }
    case SequenceSpec::Kind::NodalCubicBranch: {
      if (spec.branch_sign != 1 && spec.branch_sign != -1) {
        throw std::invalid_argument("generate: branch sign must be +1 or -1");
      }
      ProjectivePoint target({Int(0), Int(0), Int(1)});
      std::vector<ProjectivePoint> pts;
      std::vector<Int> hs;
      for (std::size_t i = 1; i <= spec.length; ++i) {
        Rat t = Rat(spec.branch_sign) * Rat(Int(i + 1), Int(i));
        Rat x = t * t - 1;
        ProjectivePoint p = point_from_rationals({x, t * x, Rat(1)});
        hs.push_back(height(p));
        pts.push_back(std::move(p));
      }
      return TestSequence{std::move(pts), std::move(target), std::move(hs)};
    }
    case SequenceSpec::Kind::SplitQuadric: {
      if (spec.exp_a == 0 || spec.exp_b == 0) {
        throw std::invalid_argument("generate: split quadric exponents must be positive");
      }
      // Approximate along the factor carrying the smaller exponent, keeping
      // the other coordinate fixed, so the attached height grows like
      // i^min(a,b).
      const bool vary_first = spec.exp_a <= spec.exp_b;
      const unsigned moving_exp = vary_first ? spec.exp_a : spec.exp_b;
      const ProjectivePoint moving_target({Int(0), Int(1)});
      const ProjectivePoint fixed({Int(1), Int(1)});
      ProjectivePoint target = vary_first ? segre(moving_target, fixed) : segre(fixed, moving_target);
      std::vector<ProjectivePoint> pts;
      std::vector<Int> hs;
      for (std::size_t i = 1; i <= spec.length; ++i) {
        ProjectivePoint moving({Int(1), Int(i)});
        pts.push_back(vary_first ? segre(moving, fixed) : segre(fixed, moving));
        hs.push_back(pow(height(moving), moving_exp));
      }
      return TestSequence{std::move(pts), std::move(target), std::move(hs)};
    }
  }
  throw std::logic_error("generate: unreachable");
}

namespace {

AlphaEstimate estimate_from(const std::vector<ProjectivePoint>& points, const ProjectivePoint& target,
                            const std::vector<Int>& heights, unsigned degree) {
  if (points.size() < 2) throw std::invalid_argument("estimate_alpha: need at least two points");
  AlphaEstimate est;
  est.gammas.reserve(points.size());
  std::vector<Rat> d2s;
  d2s.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == target) throw std::invalid_argument("estimate_alpha: a point equals the target");
    Rat d2 = distance_squared(points[i], target);
    // -log d = (log den - log num) / 2 for d^2 = num/den, all exact inputs.
    Real neg_log_d = (log(Real(denominator(d2))) - log(Real(numerator(d2)))) / 2;
    Real log_h = log(Real(heights[i]));
    est.gammas.push_back(Real(degree) * log_h / neg_log_d);
    d2s.push_back(std::move(d2));
  }

  est.tail_begin = points.size() / 2;
  std::vector<Real> tail(est.gammas.begin() + static_cast<std::ptrdiff_t>(est.tail_begin), est.gammas.end());
  std::sort(tail.begin(), tail.end());
  const std::size_t n = tail.size();
  est.estimate = (n % 2 == 1) ? tail[n / 2] : (tail[n / 2 - 1] + tail[n / 2]) / 2;
  est.tail_min = tail.front();
  est.tail_max = tail.back();
  for (std::size_t i = est.tail_begin + 1; i < d2s.size(); ++i) {
    if (d2s[i] >= d2s[i - 1]) {
      est.distances_decreasing = false;
      break;
    }
  }
  return est;
}

}  // namespace

AlphaEstimate estimate_alpha(const std::vector<ProjectivePoint>& points, const ProjectivePoint& target,
                             unsigned degree) {
  if (degree == 0) throw std::invalid_argument("estimate_alpha: degree must be positive");
  std::vector<Int> hs;
  hs.reserve(points.size());
  for (const ProjectivePoint& p : points) hs.push_back(height(p));
  return estimate_from(points, target, hs, degree);
}

AlphaEstimate estimate_alpha(const TestSequence& seq, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("estimate_alpha: degree must be positive");
  return estimate_from(seq.points, seq.target, seq.heights, degree);
}

void write_sequence_csv(std::ostream& os, const TestSequence& seq, const AlphaEstimate& est) {
  os << "i,height,distance,gamma\n";
  for (std::size_t i = 0; i < seq.points.size(); ++i) {
    const Real d = sqrt(Real(distance_squared(seq.points[i], seq.target)));
    os << (i + 1) << ',' << seq.heights[i] << ',' << d.str(20) << ',' << est.gammas[i].str(20) << '\n';
  }
}

}  // namespace cubics
