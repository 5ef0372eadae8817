#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cubics/arith.hpp"

namespace cubics {

/// A divisor class on the cubic surface, written in the basis {L, E1..E6} of
/// the Neron-Severi lattice: coeff[0]*L + coeff[1]*E1 + ... + coeff[6]*E6.
/// The intersection form is diag(1, -1, -1, -1, -1, -1, -1) in this basis.
struct DivisorClass {
  std::array<Int, 7> coeff{};

  const Int& operator[](std::size_t k) const { return coeff[k]; }
  Int& operator[](std::size_t k) { return coeff[k]; }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (std::size_t k = 0; k < 7; ++k) r.coeff[k] = a.coeff[k] + b.coeff[k];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (std::size_t k = 0; k < 7; ++k) r.coeff[k] = a.coeff[k] - b.coeff[k];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r;
    for (std::size_t k = 0; k < 7; ++k) r.coeff[k] = -a.coeff[k];
    return r;
  }
  friend DivisorClass operator*(const Int& m, const DivisorClass& a) {
    DivisorClass r;
    for (std::size_t k = 0; k < 7; ++k) r.coeff[k] = m * a.coeff[k];
    return r;
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coeff == b.coeff; }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    for (std::size_t k = 0; k < 7; ++k) {
      if (a.coeff[k] != b.coeff[k]) return a.coeff[k] < b.coeff[k];
    }
    return false;
  }
};

/// Convenience constructor from seven small integers.
DivisorClass divisor(std::initializer_list<long> coeffs);

/// The intersection pairing a*a' - sum_i b_i*b_i'.  Symmetric and bilinear.
Int pair(const DivisorClass& a, const DivisorClass& b);

/// Symbolic names for the standard divisor classes.
///   L          pullback of the plane line class
///   E(i)       exceptional curve over the i-th blown-up point
///   F(i,j)     strict transform of the line through two of the points
///   G(i)       strict transform of the conic through five of the points
///   K          canonical class (-3; 1,...,1)
///   AntiK      -K; Hyperplane is the same class (the anticanonical embedding)
///   Li(i)      pencil of lines through the i-th point, L - E_i
///   Lij(i,j)   pencil of conics through the other four points
///   B(i)       pencil of cubics through all six points, double at the i-th
struct ClassName {
  enum class Tag { L, E, F, G, K, AntiK, Hyperplane, Li, Lij, B };
  Tag tag = Tag::L;
  int i = 0;
  int j = 0;

  static ClassName L() { return {Tag::L}; }
  static ClassName E(int i) { return {Tag::E, i}; }
  static ClassName F(int i, int j) { return {Tag::F, i, j}; }
  static ClassName G(int i) { return {Tag::G, i}; }
  static ClassName K() { return {Tag::K}; }
  static ClassName AntiK() { return {Tag::AntiK}; }
  static ClassName Hyperplane() { return {Tag::Hyperplane}; }
  static ClassName Li(int i) { return {Tag::Li, i}; }
  static ClassName Lij(int i, int j) { return {Tag::Lij, i, j}; }
  static ClassName B(int i) { return {Tag::B, i}; }
};

/// Resolve a symbolic name to its divisor class.  Indices must lie in 1..6
/// with i < j where two are required; anything else throws std::out_of_range.
DivisorClass standard_class(const ClassName& name);

DivisorClass canonical_class();      // K = (-3; 1,...,1)
DivisorClass hyperplane_class();     // h = -K = (3; -1,...,-1)

/// The 27 lines: E_i, F_ij, G_i.  Each has self-intersection -1 and degree 1
/// against -K.  Generated from the coefficient patterns and checked against
/// those invariants at startup.
const std::vector<DivisorClass>& lines27();

/// The 27 conic pencil classes S = {L_i, L_ij, B_i}: self-intersection 0,
/// degree 2 against -K.  Order: L1..L6, L12..L56, B1..B6.
const std::vector<DivisorClass>& pencils27();

/// True iff the class meets every one of the 27 lines non-negatively.
bool is_nef(const DivisorClass& d);

/// A root of the E6 lattice: square -2, orthogonal to K.
class Root {
 public:
  explicit Root(DivisorClass cls);
  const DivisorClass& divisor_class() const { return cls_; }

 private:
  DivisorClass cls_;
};

/// Reflection D |-> D + (D.r) r.  Preserves the pairing, fixes K and h,
/// and is an involution.
DivisorClass reflect(const DivisorClass& d, const Root& r);

/// Simple system generating the full Weyl group W(E6): the five adjacent
/// transpositions E_i - E_{i+1} together with the Cremona root L - E1 - E2 - E3.
const std::vector<Root>& simple_roots();

/// Closure of {d} under the simple reflections, sorted lexicographically.
/// Orbits of lattice vectors with fixed square and K-degree are finite, so
/// the closure terminates.
std::vector<DivisorClass> weyl_orbit(const DivisorClass& d);

}  // namespace cubics
