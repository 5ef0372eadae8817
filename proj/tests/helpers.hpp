#pragma once

#include <random>

#include "cubics/cones.hpp"
#include "cubics/picard.hpp"

namespace cubics::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline DivisorClass random_class(std::mt19937_64& gen, long lo = -50, long hi = 50) {
  std::uniform_int_distribution<long> dist(lo, hi);
  DivisorClass d;
  for (std::size_t k = 0; k < 7; ++k) d.coeff[k] = dist(gen);
  return d;
}

/// Random non-negative integer combination of nef-cone generators: nef by
/// construction.
inline DivisorClass random_nef(std::mt19937_64& gen, long max_coeff = 10) {
  std::uniform_int_distribution<long> dist(0, max_coeff);
  DivisorClass d;
  for (const DivisorClass& r : nef_cone().rays) {
    long c = dist(gen);
    if (c != 0) d = d + Int(c) * r;
  }
  return d;
}

/// A word of at most `len` random simple reflections.
inline std::vector<Root> random_weyl_word(std::mt19937_64& gen, std::size_t len = 10) {
  std::uniform_int_distribution<std::size_t> pick(0, simple_roots().size() - 1);
  std::uniform_int_distribution<std::size_t> count(1, len);
  std::vector<Root> word;
  const std::size_t n = count(gen);
  for (std::size_t k = 0; k < n; ++k) word.push_back(simple_roots()[pick(gen)]);
  return word;
}

inline DivisorClass apply_word(const std::vector<Root>& word, DivisorClass d) {
  for (const Root& r : word) d = reflect(d, r);
  return d;
}

}  // namespace cubics::testing
