#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cubics/picard.hpp"

namespace cubics {

/// Arithmetic type of the tangent-plane section C_x at a point off the 27
/// lines.  C_x is a plane cubic with one double point at x; the type records
/// whether that singularity is a cusp or a node, and where the nodal tangent
/// slopes live.  The classification needs the defining equation of the
/// surface, so it is an input here, never computed.
enum class TangentType {
  Cuspidal,
  NodalSlopesInKvNotK,       // slopes in the completion k_v but not in k
  NodalSlopesInKOrNotInKv,   // slopes in k, or not even in k_v
};

/// One class achieving the minimum that defines a constant: either a conic
/// pencil from S, or the tangent-plane section contributing (D.h)/2.
struct Certificate {
  bool hyperplane_section = false;
  DivisorClass pencil;  // meaningful only when hyperplane_section is false

  static Certificate section() { return Certificate{true, DivisorClass{}}; }
  static Certificate of_pencil(DivisorClass c) { return Certificate{false, std::move(c)}; }

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.hyperplane_section == b.hyperplane_section &&
           (a.hyperplane_section || a.pencil == b.pencil);
  }
};

struct ConstantResult {
  ExtendedRational value;
  // Every achiever, pencils in the order of pencils27(), the section last.
  std::vector<Certificate> certificates;
};

/// Seshadri constant of a nef class at a point off the 27 lines:
/// min over the 27 pencil degrees D.C and the half hyperplane degree (D.h)/2,
/// independent of the point.  Throws std::invalid_argument when D is not nef.
ConstantResult seshadri(const DivisorClass& d);

/// Approximation constant of a nef class at a rational point off the lines.
/// Equal to the Seshadri constant for a cuspidal section or a nodal one with
/// slopes in k_v but not k; otherwise the minimum runs over the pencils only.
ConstantResult alpha(const DivisorClass& d, TangentType t);

/// The (epsilon, alpha) pair for the anticanonical class: (1, 1) on a line,
/// and (3/2, alpha(-K)) off the lines.
std::pair<ExtendedRational, ExtendedRational> anticanonical_constants(bool on_line, TangentType t);

/// Independent check of seshadri() from the definition: embed D in the
/// rank-8 lattice of the blow-up at a seventh general point and take the nef
/// threshold of pull-back minus gamma times the new exceptional class against
/// the 56 (-1)-classes there.  Never consults the pencil list.
ExtendedRational seshadri_oracle(const DivisorClass& d);

/// The 56 classes l in the rank-8 lattice {L, E1..E7} with l.l = -1 and
/// l.K = -1, enumerated from the coefficient patterns E_i, L - Ei - Ej,
/// 2L - (five E's), 3L - (all E's) - Ek and validated against the two
/// invariants.  Exposed for the oracle's own verification.
const std::vector<std::array<Int, 8>>& blowup7_neg_classes();

/// Branch of a singular rational curve at the approximated point: the branch
/// multiplicity m >= 1 and the residue-field code r of the corresponding
/// point of the normalization (0: residue field not contained in k_v,
/// 1: equal to k, 2: contained in k_v but larger than k).
struct BranchDatum {
  unsigned multiplicity = 1;
  unsigned residue_code = 1;
};

/// Approximation constant on a singular rational curve for a degree-d ample
/// class: min over branches of d / (r * m), where r = 0 contributes
/// +infinity.  Throws std::invalid_argument on an empty branch list, a zero
/// multiplicity, a residue code above 2, or d = 0.
ExtendedRational alpha_rational_curve(unsigned degree, const std::vector<BranchDatum>& branches);

/// Change of field k -> K with [K:k] = d and local degree m_v = [K_v:k_v]:
/// alpha_K = (d / m_v) * alpha_k.  Requires d >= m_v >= 1.
ExtendedRational rescale_alpha_field(const ExtendedRational& alpha_k, unsigned d, unsigned m_v);

/// alpha(D, t) - seshadri(D); non-negative, the Liouville-type lower bound
/// alpha >= epsilon for k-rational points.  Always finite on this surface.
Rat liouville_gap(const DivisorClass& d, TangentType t);

}  // namespace cubics
