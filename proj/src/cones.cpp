#include "cubics/cones.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <utility>

namespace cubics {

namespace {

// Bit set over the constraints inserted so far (at most 54 in this project,
// but kept general).
using ZeroSet = std::vector<std::uint64_t>;

ZeroSet make_zeroset(std::size_t nbits) { return ZeroSet((nbits + 63) / 64, 0); }

void set_bit(ZeroSet& z, std::size_t k) { z[k / 64] |= (std::uint64_t{1} << (k % 64)); }

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) {
  ZeroSet r(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

std::size_t popcount(const ZeroSet& z) {
  std::size_t n = 0;
  for (std::uint64_t w : z) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool subset_of(const ZeroSet& a, const ZeroSet& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

struct DDRay {
  IntVec v;      // primitive, oriented into the cone
  ZeroSet zero;  // tight constraints among those inserted so far
};

ZeroSet zeroset_of(const IntVec& v, const std::vector<const IntVec*>& inserted) {
  ZeroSet z = make_zeroset(inserted.size());
  for (std::size_t k = 0; k < inserted.size(); ++k) {
    if (dot(*inserted[k], v) == 0) set_bit(z, k);
  }
  return z;
}

}  // namespace

std::vector<IntVec> extreme_rays(const std::vector<IntVec>& functionals, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("extreme_rays: dimension must be positive");
  if (functionals.empty()) throw std::invalid_argument("extreme_rays: empty constraint list");
  for (const IntVec& f : functionals) {
    if (f.size() != dim) throw std::invalid_argument("extreme_rays: functional of wrong dimension");
    if (std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 0; })) {
      throw std::invalid_argument("extreme_rays: zero functional");
    }
  }

  // Pointedness: the lineality space of {x : Fx >= 0} is ker F, so the cone
  // is pointed exactly when the functionals span the dual space.
  {
    IntMat all(functionals.begin(), functionals.end());
    if (rank_of(std::move(all)) < dim) {
      throw NonPointedError("extreme_rays: constraint system has rank < dim, cone contains a line");
    }
  }

  // Greedy choice of dim independent functionals as the simplicial seed.
  std::vector<std::size_t> seed;
  {
    IntMat chosen;
    for (std::size_t k = 0; k < functionals.size() && seed.size() < dim; ++k) {
      chosen.push_back(functionals[k]);
      if (rank_of(chosen) == chosen.size()) {
        seed.push_back(k);
      } else {
        chosen.pop_back();
      }
    }
  }
  std::vector<bool> in_seed(functionals.size(), false);
  for (std::size_t k : seed) in_seed[k] = true;
  // Insertion order: seed first, then the remaining constraints as given.
  std::vector<const IntVec*> inserted;
  inserted.reserve(functionals.size());
  for (std::size_t k : seed) inserted.push_back(&functionals[k]);
  std::vector<const IntVec*> pending;
  for (std::size_t k = 0; k < functionals.size(); ++k) {
    if (!in_seed[k]) pending.push_back(&functionals[k]);
  }

  // Seed cone: rays are the adjugate columns of the seed rows, oriented so
  // that seed_i . ray_j = |det| delta_ij.
  std::vector<DDRay> rays;
  {
    IntMat m(dim, IntVec(dim));
    for (std::size_t r = 0; r < dim; ++r) m[r] = functionals[seed[r]];
    Int det = determinant(m);
    IntMat adj = adjugate(m);
    const bool flip = det < 0;
    for (std::size_t j = 0; j < dim; ++j) {
      IntVec col(dim);
      for (std::size_t r = 0; r < dim; ++r) col[r] = flip ? Int(-adj[r][j]) : adj[r][j];
      DDRay ray{primitive(std::move(col)), make_zeroset(dim)};
      for (std::size_t k = 0; k < dim; ++k) {
        if (k != j) set_bit(ray.zero, k);
      }
      rays.push_back(std::move(ray));
    }
  }

  for (const IntVec* fp : pending) {
    const IntVec& f = *fp;
    const std::size_t ncons = inserted.size();  // constraints before this one
    std::vector<Int> sign(rays.size());
    std::vector<std::size_t> pos, zer, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      sign[r] = dot(f, rays[r].v);
      if (sign[r] > 0) {
        pos.push_back(r);
      } else if (sign[r] == 0) {
        zer.push_back(r);
      } else {
        neg.push_back(r);
      }
    }
    inserted.push_back(fp);

    std::set<IntVec> fresh;
    if (!neg.empty() && !pos.empty()) {
      for (std::size_t p : pos) {
        for (std::size_t n : neg) {
          // Adjacency of r_p and r_n in the current cone: the constraints
          // tight at both must have rank dim - 2.  A popcount bound and the
          // absence of a third ray on the common face are quick necessary
          // filters; the rank computation decides.
          ZeroSet common = intersect(rays[p].zero, rays[n].zero);
          if (popcount(common) + 2 < dim) continue;
          bool dominated = false;
          for (std::size_t r = 0; r < rays.size() && !dominated; ++r) {
            if (r != p && r != n && subset_of(common, rays[r].zero)) dominated = true;
          }
          if (dominated) continue;
          IntMat tight;
          for (std::size_t k = 0; k < ncons; ++k) {
            if ((common[k / 64] >> (k % 64)) & 1) tight.push_back(*inserted[k]);
          }
          if (rank_of(std::move(tight)) != dim - 2) continue;
          IntVec w(dim);
          for (std::size_t c = 0; c < dim; ++c) {
            w[c] = sign[p] * rays[n].v[c] - sign[n] * rays[p].v[c];
          }
          fresh.insert(primitive(std::move(w)));
        }
      }
    }

    std::vector<DDRay> next;
    next.reserve(pos.size() + zer.size() + fresh.size());
    for (std::size_t r : pos) {
      rays[r].zero.resize((ncons + 64) / 64, 0);
      next.push_back(std::move(rays[r]));
    }
    for (std::size_t r : zer) {
      rays[r].zero.resize((ncons + 64) / 64, 0);
      set_bit(rays[r].zero, ncons);
      next.push_back(std::move(rays[r]));
    }
    for (const IntVec& w : fresh) {
      next.push_back(DDRay{w, zeroset_of(w, inserted)});
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (DDRay& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t tight_rank(const std::vector<IntVec>& functionals, const IntVec& v) {
  IntMat tight;
  for (const IntVec& f : functionals) {
    if (dot(f, v) == 0) tight.push_back(f);
  }
  return rank_of(std::move(tight));
}

namespace {

// The pairing has gram matrix diag(1, -1, ..., -1): the functional of the
// constraint pair(normal, D) >= 0 under the Euclidean dot.
IntVec functional_of(const DivisorClass& normal) {
  IntVec f(7);
  f[0] = normal.coeff[0];
  for (std::size_t k = 1; k < 7; ++k) f[k] = -normal.coeff[k];
  return f;
}

DivisorClass class_of(const IntVec& v) {
  DivisorClass d;
  for (std::size_t k = 0; k < 7; ++k) d.coeff[k] = v[k];
  return d;
}

std::vector<HalfSpace> line_halfspaces() {
  std::vector<HalfSpace> hs;
  for (const DivisorClass& l : lines27()) hs.push_back(HalfSpace{l});
  return hs;
}

}  // namespace

Cone cone_from_halfspaces(std::vector<HalfSpace> halfspaces) {
  std::vector<IntVec> functionals;
  functionals.reserve(halfspaces.size());
  for (const HalfSpace& h : halfspaces) functionals.push_back(functional_of(h.normal));
  std::vector<IntVec> raw = extreme_rays(functionals, 7);
  Cone cone;
  cone.halfspaces = std::move(halfspaces);
  cone.rays.reserve(raw.size());
  for (const IntVec& v : raw) cone.rays.push_back(class_of(v));
  return cone;
}

const Cone& nef_cone() {
  static const Cone cone = cone_from_halfspaces(line_halfspaces());
  return cone;
}

Cone subcone(const SubconeSelector& sel) {
  static std::mutex cache_mutex;
  static std::map<std::pair<bool, DivisorClass>, Cone> cache;

  const std::vector<DivisorClass>& s = pencils27();
  if (!sel.is_hyperplane()) {
    if (std::find(s.begin(), s.end(), sel.pencil_class()) == s.end()) {
      throw std::invalid_argument("subcone: selector class is not one of the 27 conic pencils");
    }
  }
  const std::pair<bool, DivisorClass> key{sel.is_hyperplane(), sel.pencil_class()};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<HalfSpace> hs = line_halfspaces();
  const DivisorClass h = hyperplane_class();
  if (sel.is_hyperplane()) {
    for (const DivisorClass& c : s) hs.push_back(HalfSpace{Int(2) * c - h});
  } else {
    const DivisorClass& c = sel.pencil_class();
    for (const DivisorClass& other : s) {
      if (other != c) hs.push_back(HalfSpace{other - c});
    }
    hs.push_back(HalfSpace{h - Int(2) * c});
  }
  Cone cone = cone_from_halfspaces(std::move(hs));

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(cone)).first->second;
}

Membership contains(const Cone& cone, const DivisorClass& d) {
  bool tight = false;
  for (const HalfSpace& h : cone.halfspaces) {
    Int v = pair(h.normal, d);
    if (v < 0) return Membership::Outside;
    if (v == 0) tight = true;
  }
  return tight ? Membership::Boundary : Membership::Interior;
}

std::size_t tight_rank(const Cone& cone, const DivisorClass& d) {
  std::vector<IntVec> functionals;
  functionals.reserve(cone.halfspaces.size());
  for (const HalfSpace& h : cone.halfspaces) functionals.push_back(functional_of(h.normal));
  IntVec v(7);
  for (std::size_t k = 0; k < 7; ++k) v[k] = d.coeff[k];
  return tight_rank(functionals, v);
}

}  // namespace cubics
