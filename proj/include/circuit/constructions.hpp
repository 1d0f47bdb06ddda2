#pragma once

#include <vector>

#include "circuit/transition.hpp"

namespace circuit::construct {

/// Length arithmetic for pad_to_divisible on a cycle of length N:
/// N/2 = q*s + r, p = s - r new-coordinate insertions per half.
/// When s | N/2 the plan is the trivial embedding (r = p = 0).
struct PaddingPlan {
  long n = 0;
  int k = 0;
  int s = 0;
  long q = 0;
  long r = 0;
  long p = 0;
  std::vector<long> cut_points; // 1-based positions within each half after which d+1 is inserted

  bool trivial() const noexcept { return r == 0; }
  long result_length() const noexcept { return n + 2 * p; }
};

struct Options {
  bool reverify = true;
};

TransitionSequence embed(const TransitionSequence& seq, int new_dimension);

/// Computes the plan without touching a sequence. Throws BadDivisor if s is
/// outside [k, d] and NotEnoughSegments if p*k > N/2.
PaddingPlan plan_padding(long n, int dimension, int k, int s);

/// Raises a spread-k cycle into dimension d+1 with length divisible by 2s.
/// Each half of the stored rotation gets the new coordinate d+1 appended to
/// its first p length-k blocks.
TransitionSequence pad_to_divisible(const TransitionSequence& seq, int k, int s, Options opts = {});

/// (P, d+1..d+k, P, d+1..d+k): turns a spread-k open path of |P| edges in
/// dimension d into a spread-k cycle of length 2(|P|+k) in dimension d+k.
TransitionSequence double_path_to_cycle(const TransitionSequence& path, int k, Options opts = {});

} // namespace circuit::construct
