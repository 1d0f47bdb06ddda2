#pragma once

#include <optional>

#include "circuit/transition.hpp"

namespace circuit {

/// A pair of 1-based vertex positions whose Hamming distance falls short of
/// min(code distance, k) for the k being tested.
struct Witness {
  long i = 0;
  long j = 0;
  int hamming = 0;
  int code_distance = 0;
  Vertex x;
  Vertex y;
};

struct SpreadCheck {
  bool holds = false;
  int k = 0;
  std::optional<Witness> witness; // first violating pair in (i, j) order
};

/// Result of max_spread(). `max_spread` is 0 when the code is not even a
/// simple walk. When no pair ever falls short, `unbounded` is set and
/// max_spread is the code length N.
struct SpreadReport {
  int max_spread = 0;
  bool unbounded = false;
  std::optional<Witness> witness; // why max_spread + 1 fails
};

/// All-pairs check of d_H(x_i, x_j) >= min(d_C(i, j), k).
SpreadCheck verify_spread(const TransitionSequence& seq, int k);
SpreadCheck verify_spread(const CodeWalk& walk, int k);

SpreadReport max_spread(const TransitionSequence& seq);
SpreadReport max_spread(const CodeWalk& walk);

} // namespace circuit
