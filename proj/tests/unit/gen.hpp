#pragma once

#include <random>
#include <vector>

#include "circuit/transition.hpp"

namespace gen {

// Random closed transition sequence: a walk followed by its reversal, then
// rotated, which keeps every coordinate's parity even.
inline circuit::TransitionSequence closed_walk(std::mt19937& rng, int d, int half_len) {
  std::uniform_int_distribution<int> sym(1, d);
  std::vector<int> w;
  for (int i = 0; i < half_len; ++i) w.push_back(sym(rng));
  std::vector<int> t = w;
  t.insert(t.end(), w.rbegin(), w.rend());
  std::uniform_int_distribution<std::size_t> rot(0, t.size() - 1);
  return circuit::TransitionSequence(d, t).rotated(rot(rng));
}

inline std::vector<int> permutation(std::mt19937& rng, int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace gen
