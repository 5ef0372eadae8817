#include "cubics/constants.hpp"

#include <stdexcept>

namespace cubics {

namespace {

void require_nef(const DivisorClass& d) {
  if (!is_nef(d)) throw std::invalid_argument("divisor class is not nef");
}

Rat pencil_minimum(const DivisorClass& d, std::vector<Certificate>* certs) {
  bool first = true;
  Rat best;
  for (const DivisorClass& c : pencils27()) {
    Rat v{pair(d, c)};
    if (first || v < best) {
      best = v;
      first = false;
      if (certs) {
        certs->clear();
        certs->push_back(Certificate::of_pencil(c));
      }
    } else if (certs && v == best) {
      certs->push_back(Certificate::of_pencil(c));
    }
  }
  return best;
}

}  // namespace

ConstantResult seshadri(const DivisorClass& d) {
  require_nef(d);
  ConstantResult res;
  Rat best = pencil_minimum(d, &res.certificates);
  const Rat half_h = Rat(pair(d, hyperplane_class())) / 2;
  if (half_h < best) {
    best = half_h;
    res.certificates = {Certificate::section()};
  } else if (half_h == best) {
    res.certificates.push_back(Certificate::section());
  }
  res.value = ExtendedRational(best);
  return res;
}

ConstantResult alpha(const DivisorClass& d, TangentType t) {
  require_nef(d);
  if (t == TangentType::Cuspidal || t == TangentType::NodalSlopesInKvNotK) {
    return seshadri(d);
  }
  ConstantResult res;
  res.value = ExtendedRational(pencil_minimum(d, &res.certificates));
  return res;
}

std::pair<ExtendedRational, ExtendedRational> anticanonical_constants(bool on_line, TangentType t) {
  if (on_line) return {ExtendedRational(Rat(1)), ExtendedRational(Rat(1))};
  const DivisorClass h = hyperplane_class();
  return {seshadri(h).value, alpha(h, t).value};
}

const std::vector<std::array<Int, 8>>& blowup7_neg_classes() {
  static const std::vector<std::array<Int, 8>> classes = [] {
    std::vector<std::array<Int, 8>> v;
    auto push = [&v](std::array<Int, 8> c) { v.push_back(std::move(c)); };
    for (int i = 1; i <= 7; ++i) {
      std::array<Int, 8> c{};
      c[static_cast<std::size_t>(i)] = 1;
      push(c);
    }
    for (int i = 1; i <= 7; ++i) {
      for (int j = i + 1; j <= 7; ++j) {
        std::array<Int, 8> c{};
        c[0] = 1;
        c[static_cast<std::size_t>(i)] = -1;
        c[static_cast<std::size_t>(j)] = -1;
        push(c);
      }
    }
    // 2L minus five of the seven exceptional classes: complement pairs.
    for (int i = 1; i <= 7; ++i) {
      for (int j = i + 1; j <= 7; ++j) {
        std::array<Int, 8> c{};
        c[0] = 2;
        for (int k = 1; k <= 7; ++k) {
          if (k != i && k != j) c[static_cast<std::size_t>(k)] = -1;
        }
        push(c);
      }
    }
    for (int k = 1; k <= 7; ++k) {
      std::array<Int, 8> c{};
      c[0] = 3;
      for (int m = 1; m <= 7; ++m) c[static_cast<std::size_t>(m)] = -1;
      c[static_cast<std::size_t>(k)] -= 1;
      push(c);
    }
    if (v.size() != 56) throw std::logic_error("blowup7_neg_classes: wrong count");
    for (const auto& c : v) {
      Int self = c[0] * c[0];
      Int deg = -3 * c[0];  // pairing with K = (-3; 1,...,1)
      for (std::size_t k = 1; k < 8; ++k) {
        self -= c[k] * c[k];
        deg -= c[k];
      }
      if (self != -1 || deg != -1) throw std::logic_error("blowup7_neg_classes: invariant violated");
    }
    return v;
  }();
  return classes;
}

ExtendedRational seshadri_oracle(const DivisorClass& d) {
  require_nef(d);
  // pi^* D = (a; b1..b6, 0) in the basis {L, E1..E7}.
  std::array<Int, 8> pd{};
  for (std::size_t k = 0; k < 7; ++k) pd[k] = d.coeff[k];
  bool first = true;
  Rat best;
  for (const auto& l : blowup7_neg_classes()) {
    const Int mult = -l[7];  // E7 . l
    if (mult <= 0) continue;
    Int num = pd[0] * l[0];
    for (std::size_t k = 1; k < 8; ++k) num -= pd[k] * l[k];
    Rat v = Rat(num) / Rat(mult);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return ExtendedRational(best);
}

ExtendedRational alpha_rational_curve(unsigned degree, const std::vector<BranchDatum>& branches) {
  if (degree == 0) throw std::invalid_argument("alpha_rational_curve: degree must be positive");
  if (branches.empty()) throw std::invalid_argument("alpha_rational_curve: empty branch list");
  ExtendedRational best = ExtendedRational::infinity();
  for (const BranchDatum& b : branches) {
    if (b.multiplicity == 0) throw std::invalid_argument("alpha_rational_curve: branch multiplicity must be >= 1");
    if (b.residue_code > 2) throw std::invalid_argument("alpha_rational_curve: residue code must be 0, 1 or 2");
    if (b.residue_code == 0) continue;  // contributes +infinity
    Rat v = Rat(degree) / Rat(b.residue_code * b.multiplicity);
    best = min(best, ExtendedRational(v));
  }
  return best;
}

ExtendedRational rescale_alpha_field(const ExtendedRational& alpha_k, unsigned d, unsigned m_v) {
  if (m_v == 0 || d < m_v) throw std::invalid_argument("rescale_alpha_field: need d >= m_v >= 1");
  return alpha_k.scaled(Rat(d) / Rat(m_v));
}

Rat liouville_gap(const DivisorClass& d, TangentType t) {
  const ConstantResult a = alpha(d, t);
  const ConstantResult e = seshadri(d);
  return Rat(a.value.value() - e.value.value());
}

}  // namespace cubics
