#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circuit/bitvec.hpp"

namespace circuit {

enum class Topology { Cyclic, Open };

std::string_view to_string(Topology t) noexcept;

/// Walk in I(d) starting at the origin, stored as the list of flipped
/// coordinates. Coordinates are 1-based on every public interface.
///
/// Invariants (checked on construction): dimension >= 1, at least one symbol,
/// every symbol in [1, dimension]. Closure of a cyclic sequence is not an
/// invariant of the type; expand() and verify_spread() reject open walks
/// labelled cyclic with ErrorKind::NotClosed.
class TransitionSequence {
public:
  TransitionSequence(int dimension, std::vector<int> symbols, Topology topology = Topology::Cyclic);

  int dimension() const noexcept { return dimension_; }
  Topology topology() const noexcept { return topology_; }
  bool cyclic() const noexcept { return topology_ == Topology::Cyclic; }
  std::span<const int> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  int operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// True when every coordinate is flipped an even number of times.
  bool closed() const noexcept;

  TransitionSequence with_dimension(int dimension) const;
  TransitionSequence reversed() const;
  /// Cyclic rotation so that symbol `offset` comes first.
  TransitionSequence rotated(std::size_t offset) const;
  /// Applies `relabel[c-1]` to every symbol c; relabel must be a permutation of 1..d.
  TransitionSequence relabeled(std::span<const int> relabel) const;
  /// Relabels coordinates in order of first use, so the first new coordinate seen is 1, the next 2, ...
  TransitionSequence canonical() const;

  std::string to_string() const;

  friend bool operator==(const TransitionSequence&, const TransitionSequence&) = default;

private:
  int dimension_;
  std::vector<int> symbols_;
  Topology topology_;
};

/// Width-carrying vertex used by the hamming() entry point.
struct Vertex {
  int width = 0;
  BitVector bits;

  /// Parses "0110"-style strings; character i is coordinate i+1.
  static Vertex parse(std::string_view text);
  std::string to_string() const { return bits.to_string(width); }
};

/// Graph distance in I(d), which is the Hamming distance.
int hamming(const Vertex& x, const Vertex& y);

/// Distance along the code between 1-based positions i and j of an N-vertex
/// cycle (min(|i-j|, N-|i-j|)) or path (|i-j|).
int code_distance(long i, long j, long n, Topology topology);

/// Expanded vertex list of a transition sequence. For cyclic codes there are
/// N vertices; for open paths N+1. The first vertex is always the origin.
class CodeWalk {
public:
  int dimension() const noexcept { return dimension_; }
  Topology topology() const noexcept { return topology_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const BitVector& operator[](std::size_t i) const noexcept { return vertices_[i]; }
  std::span<const BitVector> vertices() const noexcept { return vertices_; }
  Vertex vertex(std::size_t i) const { return {dimension_, vertices_[i]}; }

  /// Transition sequence read back from consecutive vertex differences.
  TransitionSequence transitions() const;

private:
  friend CodeWalk expand(const TransitionSequence&);
  int dimension_ = 0;
  Topology topology_ = Topology::Cyclic;
  std::vector<BitVector> vertices_;
};

CodeWalk expand(const TransitionSequence& seq);

} // namespace circuit
