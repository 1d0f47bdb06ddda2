#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "circuit/transition.hpp"

namespace circuit::search {

enum class Kind { Cycle, Path };

std::string_view to_string(Kind kind) noexcept;

inline constexpr int kMaxSearchDimension = 16;

struct Options {
  /// Node cap over the whole search. Counted deterministically, so every
  /// worker count reports the same exhausted flag and node total.
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
  /// Prefixes of this many transitions become independent work units.
  int split_depth = 6;
  /// Also return every canonical sequence of the optimal length.
  bool collect_all = false;
};

struct SearchResult {
  Kind kind = Kind::Cycle;
  int d = 0;
  int k = 0;
  std::optional<int> s;
  /// Cycle length (vertices = edges) or path length (edges).
  long best_length = 0;
  /// Lexicographically least canonical sequence of best_length.
  std::optional<TransitionSequence> best_sequence;
  /// Sorted, only filled with Options::collect_all.
  std::vector<TransitionSequence> optimal_sequences;
  std::uint64_t nodes_expanded = 0;
  bool exhausted = false;
};

/// Longest spread-k cycle in I(d), i.e. K(d, k) when exhausted.
SearchResult max_cycle(int d, int k, const Options& opts = {});
/// Longest spread-k cycle whose length is divisible by s, i.e. K(d, k, s).
SearchResult max_cycle_divisible(int d, int k, int s, const Options& opts = {});
/// Longest open path satisfying d_H >= min(d_P, k).
SearchResult max_path(int d, int k, const Options& opts = {});

} // namespace circuit::search
