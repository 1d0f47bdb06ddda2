#include "circuit/transition.hpp"

#include <algorithm>
#include <cstdlib>

#include "circuit/error.hpp"

namespace circuit {

std::string_view to_string(Topology t) noexcept {
  return t == Topology::Cyclic ? "cycle" : "path";
}

TransitionSequence::TransitionSequence(int dimension, std::vector<int> symbols, Topology topology)
    : dimension_(dimension), symbols_(std::move(symbols)), topology_(topology) {
  if (dimension_ < 1) fail(ErrorKind::InvalidSequence, "dimension must be >= 1");
  if (symbols_.empty()) fail(ErrorKind::InvalidSequence, "transition sequence is empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] < 1 || symbols_[i] > dimension_) {
      fail(ErrorKind::InvalidSequence, "symbol " + std::to_string(symbols_[i]) + " at position " +
                                           std::to_string(i + 1) + " is outside [1, " +
                                           std::to_string(dimension_) + "]");
    }
  }
}

bool TransitionSequence::closed() const noexcept {
  std::vector<char> parity(static_cast<std::size_t>(dimension_) + 1, 0);
  for (int s : symbols_) parity[static_cast<std::size_t>(s)] ^= 1;
  return std::none_of(parity.begin(), parity.end(), [](char p) { return p != 0; });
}

TransitionSequence TransitionSequence::with_dimension(int dimension) const {
  return TransitionSequence(dimension, symbols_, topology_);
}

TransitionSequence TransitionSequence::reversed() const {
  return TransitionSequence(dimension_, {symbols_.rbegin(), symbols_.rend()}, topology_);
}

TransitionSequence TransitionSequence::rotated(std::size_t offset) const {
  std::vector<int> out(symbols_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(offset % out.size()), out.end());
  return TransitionSequence(dimension_, std::move(out), topology_);
}

TransitionSequence TransitionSequence::relabeled(std::span<const int> relabel) const {
  if (relabel.size() != static_cast<std::size_t>(dimension_))
    fail(ErrorKind::LengthMismatch, "relabeling must cover every coordinate");
  std::vector<int> out;
  out.reserve(symbols_.size());
  for (int s : symbols_) out.push_back(relabel[static_cast<std::size_t>(s - 1)]);
  return TransitionSequence(dimension_, std::move(out), topology_);
}

TransitionSequence TransitionSequence::canonical() const {
  std::vector<int> map(static_cast<std::size_t>(dimension_) + 1, 0);
  int next = 1;
  std::vector<int> out;
  out.reserve(symbols_.size());
  for (int s : symbols_) {
    auto& m = map[static_cast<std::size_t>(s)];
    if (m == 0) m = next++;
    out.push_back(m);
  }
  return TransitionSequence(dimension_, std::move(out), topology_);
}

std::string TransitionSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(symbols_[i]);
  }
  return s + ")";
}

Vertex Vertex::parse(std::string_view text) {
  if (static_cast<int>(text.size()) > kMaxDimension)
    fail(ErrorKind::DimensionTooLarge, "vertex wider than " + std::to_string(kMaxDimension));
  Vertex v;
  v.width = static_cast<int>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') v.bits.flip(static_cast<int>(i));
    else if (text[i] != '0') fail(ErrorKind::Parse, "vertex must be a 0/1 string");
  }
  return v;
}

int hamming(const Vertex& x, const Vertex& y) {
  if (x.width != y.width)
    fail(ErrorKind::LengthMismatch,
         "vectors of length " + std::to_string(x.width) + " and " + std::to_string(y.width));
  return distance(x.bits, y.bits);
}

int code_distance(long i, long j, long n, Topology topology) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n)
    fail(ErrorKind::OutOfRange, "positions must lie in [1, N]");
  const long t = std::labs(i - j);
  return static_cast<int>(topology == Topology::Cyclic ? std::min(t, n - t) : t);
}

TransitionSequence CodeWalk::transitions() const {
  std::vector<int> out;
  const std::size_t edges = topology_ == Topology::Cyclic ? vertices_.size() : vertices_.size() - 1;
  out.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& next = vertices_[(i + 1) % vertices_.size()];
    out.push_back(first_difference(vertices_[i], next) + 1);
  }
  return TransitionSequence(dimension_, std::move(out), topology_);
}

CodeWalk expand(const TransitionSequence& seq) {
  if (seq.dimension() > kMaxDimension)
    fail(ErrorKind::DimensionTooLarge, "dimension " + std::to_string(seq.dimension()) +
                                           " exceeds the expansion cap " + std::to_string(kMaxDimension));
  CodeWalk walk;
  walk.dimension_ = seq.dimension();
  walk.topology_ = seq.topology();
  walk.vertices_.reserve(seq.size() + 1);
  BitVector x;
  walk.vertices_.push_back(x);
  for (int s : seq.symbols()) {
    x.flip(s - 1);
    walk.vertices_.push_back(x);
  }
  if (seq.cyclic()) {
    if (x != BitVector{})
      fail(ErrorKind::NotClosed, "walk ends at " + x.to_string(seq.dimension()) + ", not at the origin");
    walk.vertices_.pop_back();
  }
  return walk;
}

} // namespace circuit
