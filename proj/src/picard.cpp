#include "cubics/picard.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cubics {

DivisorClass divisor(std::initializer_list<long> coeffs) {
  if (coeffs.size() != 7) throw std::invalid_argument("divisor: expected 7 coefficients");
  DivisorClass d;
  std::size_t k = 0;
  for (long c : coeffs) d.coeff[k++] = c;
  return d;
}

Int pair(const DivisorClass& a, const DivisorClass& b) {
  Int v = a.coeff[0] * b.coeff[0];
  for (std::size_t k = 1; k < 7; ++k) v -= a.coeff[k] * b.coeff[k];
  return v;
}

namespace {

void check_index(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("class index out of range 1..6");
}

void check_indices(int i, int j) {
  check_index(i);
  check_index(j);
  if (i >= j) throw std::out_of_range("class indices must satisfy i < j");
}

DivisorClass unit_l() { return divisor({1, 0, 0, 0, 0, 0, 0}); }

DivisorClass unit_e(int i) {
  DivisorClass d;
  d.coeff[0] = 0;
  d.coeff[static_cast<std::size_t>(i)] = 1;
  return d;
}

}  // namespace

DivisorClass canonical_class() { return divisor({-3, 1, 1, 1, 1, 1, 1}); }

DivisorClass hyperplane_class() { return -canonical_class(); }

DivisorClass standard_class(const ClassName& name) {
  using Tag = ClassName::Tag;
  switch (name.tag) {
    case Tag::L:
      return unit_l();
    case Tag::E:
      check_index(name.i);
      return unit_e(name.i);
    case Tag::F:
      check_indices(name.i, name.j);
      return unit_l() - unit_e(name.i) - unit_e(name.j);
    case Tag::G: {
      check_index(name.i);
      DivisorClass d = divisor({2, -1, -1, -1, -1, -1, -1});
      d.coeff[static_cast<std::size_t>(name.i)] += 1;
      return d;
    }
    case Tag::K:
      return canonical_class();
    case Tag::AntiK:
    case Tag::Hyperplane:
      return hyperplane_class();
    case Tag::Li:
      check_index(name.i);
      return unit_l() - unit_e(name.i);
    case Tag::Lij: {
      check_indices(name.i, name.j);
      DivisorClass d = divisor({2, -1, -1, -1, -1, -1, -1});
      d.coeff[static_cast<std::size_t>(name.i)] += 1;
      d.coeff[static_cast<std::size_t>(name.j)] += 1;
      return d;
    }
    case Tag::B: {
      check_index(name.i);
      DivisorClass d = divisor({3, -1, -1, -1, -1, -1, -1});
      d.coeff[static_cast<std::size_t>(name.i)] -= 1;
      return d;
    }
  }
  throw std::logic_error("standard_class: unreachable");
}

const std::vector<DivisorClass>& lines27() {
  static const std::vector<DivisorClass> lines = [] {
    std::vector<DivisorClass> v;
    for (int i = 1; i <= 6; ++i) v.push_back(standard_class(ClassName::E(i)));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) v.push_back(standard_class(ClassName::F(i, j)));
    for (int i = 1; i <= 6; ++i) v.push_back(standard_class(ClassName::G(i)));
    const DivisorClass k = canonical_class();
    if (v.size() != 27) throw std::logic_error("lines27: wrong count");
    for (const DivisorClass& l : v) {
      if (pair(l, l) != -1 || pair(l, k) != -1) throw std::logic_error("lines27: invariant violated");
    }
    return v;
  }();
  return lines;
}

const std::vector<DivisorClass>& pencils27() {
  static const std::vector<DivisorClass> pencils = [] {
    std::vector<DivisorClass> v;
    for (int i = 1; i <= 6; ++i) v.push_back(standard_class(ClassName::Li(i)));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) v.push_back(standard_class(ClassName::Lij(i, j)));
    for (int i = 1; i <= 6; ++i) v.push_back(standard_class(ClassName::B(i)));
    const DivisorClass mk = hyperplane_class();
    if (v.size() != 27) throw std::logic_error("pencils27: wrong count");
    for (const DivisorClass& c : v) {
      if (pair(c, c) != 0 || pair(c, mk) != 2) throw std::logic_error("pencils27: invariant violated");
    }
    return v;
  }();
  return pencils;
}

bool is_nef(const DivisorClass& d) {
  for (const DivisorClass& l : lines27()) {
    if (pair(d, l) < 0) return false;
  }
  return true;
}

Root::Root(DivisorClass cls) : cls_(std::move(cls)) {
  if (pair(cls_, cls_) != -2 || pair(cls_, canonical_class()) != 0) {
    throw std::invalid_argument("Root: class is not a root (needs square -2, orthogonal to K)");
  }
}

DivisorClass reflect(const DivisorClass& d, const Root& r) {
  return d + pair(d, r.divisor_class()) * r.divisor_class();
}

const std::vector<Root>& simple_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> v;
    for (int i = 1; i <= 5; ++i) {
      v.emplace_back(standard_class(ClassName::E(i)) - standard_class(ClassName::E(i + 1)));
    }
    v.emplace_back(divisor({1, -1, -1, -1, 0, 0, 0}));
    return v;
  }();
  return roots;
}

std::vector<DivisorClass> weyl_orbit(const DivisorClass& d) {
  std::set<DivisorClass> seen{d};
  std::vector<DivisorClass> queue{d};
  while (!queue.empty()) {
    DivisorClass cur = queue.back();
    queue.pop_back();
    for (const Root& r : simple_roots()) {
      DivisorClass img = reflect(cur, r);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string to_string(const ExtendedRational& e) {
  return e.is_finite() ? to_string(e.value()) : std::string("inf");
}

}  // namespace cubics
