#pragma once

#include <stdexcept>
#include <vector>

#include "cubics/linalg.hpp"
#include "cubics/picard.hpp"

namespace cubics {

/// Thrown when a half-space system admits a full line, so the cone has no
/// extreme rays to enumerate.
class NonPointedError : public std::runtime_error {
 public:
  explicit NonPointedError(const std::string& what) : std::runtime_error(what) {}
};

/// Extreme rays of the pointed cone {x : f.x >= 0 for every functional f},
/// computed by the incremental double description method with exact integer
/// arithmetic (Motzkin et al.; see Fukuda & Prodon, "Double description
/// method revisited", 1996).  Adjacency of rays during insertion is decided
/// by an exact rank computation on the tight constraints.
///
/// Functionals act by the Euclidean dot product.  The result is the complete
/// duplicate-free list of extreme rays, each primitive and oriented into the
/// cone, sorted lexicographically.  Throws NonPointedError when the
/// functionals do not have full rank, and std::invalid_argument on an empty
/// system, a zero functional, or mismatched dimensions.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& functionals, std::size_t dim);

/// Rank of the subsystem of functionals vanishing on the given vector.  An
/// extreme ray of a pointed cone in dimension d is certified by rank d - 1.
std::size_t tight_rank(const std::vector<IntVec>& functionals, const IntVec& v);

/// The constraint pair(normal, D) >= 0.
struct HalfSpace {
  DivisorClass normal;
};

/// A rational polyhedral cone in the Neron-Severi lattice carrying both of
/// its descriptions: the defining half-spaces and the extreme rays.
struct Cone {
  std::vector<HalfSpace> halfspaces;
  std::vector<DivisorClass> rays;  // primitive, lexicographically sorted
};

enum class Membership { Outside, Boundary, Interior };

/// Build a cone from half-spaces, enumerating its extreme rays.
Cone cone_from_halfspaces(std::vector<HalfSpace> halfspaces);

/// The nef cone: non-negative intersection with each of the 27 lines.
/// It has 99 extreme rays.
const Cone& nef_cone();

/// Selects one of the 28 subcones covering the nef cone: either the locus
/// where a fixed conic pencil C realizes min over S of D.C with
/// D.C <= (D.h)/2, or the locus where (D.h)/2 is the overall minimum.
class SubconeSelector {
 public:
  static SubconeSelector pencil(DivisorClass c) { return SubconeSelector(false, std::move(c)); }
  static SubconeSelector hyperplane() { return SubconeSelector(true, DivisorClass{}); }

  bool is_hyperplane() const { return hyperplane_; }
  const DivisorClass& pencil_class() const { return pencil_; }

 private:
  SubconeSelector(bool h, DivisorClass c) : hyperplane_(h), pencil_(std::move(c)) {}
  bool hyperplane_;
  DivisorClass pencil_;
};

/// The selected subcone.  For a pencil C the half-spaces are the 27 line
/// constraints, the comparisons C' - C against the other 26 pencils, and
/// h - 2C; for the hyperplane subcone they are the line constraints and
/// 2C' - h for all 27 pencils.  A pencil selector naming a class outside S
/// throws std::invalid_argument.  Results are cached.
Cone subcone(const SubconeSelector& sel);

/// Outside iff some constraint is violated, boundary iff all hold with at
/// least one tight, interior otherwise.
Membership contains(const Cone& cone, const DivisorClass& d);

/// Rank of the constraints tight at the given class; rank 6 certifies an
/// extreme ray of a full-dimensional cone in the rank-7 lattice.
std::size_t tight_rank(const Cone& cone, const DivisorClass& d);

}  // namespace cubics
