#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "circuit/error.hpp"
#include "circuit/spread.hpp"
#include "circuit/transition.hpp"
#include "gen.hpp"

using namespace circuit;

namespace {

const TransitionSequence kHexagon(3, {1, 2, 3, 1, 2, 3});
const TransitionSequence kGray8(3, {1, 2, 1, 3, 1, 2, 1, 3});
const TransitionSequence kSquare(2, {1, 2, 1, 2});

std::vector<std::string> vertex_strings(const TransitionSequence& t) {
  const auto w = expand(t);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.vertex(i).to_string());
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

// Pairwise check written against plain integers.
bool brute_spread(const TransitionSequence& t, int k) {
  std::vector<unsigned> v{0};
  for (int c : t.symbols()) v.push_back(v.back() ^ (1u << (c - 1)));
  if (t.cyclic()) v.pop_back();
  const long n = static_cast<long>(v.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      long dc = j - i;
      if (t.cyclic()) dc = std::min(dc, n - dc);
      if (std::popcount(v[i] ^ v[j]) < std::min<long>(dc, k)) return false;
    }
  return true;
}

} // namespace

TEST_CASE("expand") {
  CHECK(vertex_strings(kSquare) == std::vector<std::string>{"00", "10", "11", "01"});
  CHECK(vertex_strings(kHexagon) == std::vector<std::string>{"000", "100", "110", "111", "011", "001"});
  CHECK_NOTHROW(expand(TransitionSequence(1, {1, 1})));
  CHECK(kind_of([] { expand(TransitionSequence(2, {1, 2, 1})); }) == ErrorKind::NotClosed);
  const auto path = expand(TransitionSequence(2, {1, 2}, Topology::Open));
  CHECK(path.size() == 3);
}

TEST_CASE("sequence validation") {
  CHECK(kind_of([] { TransitionSequence(3, {1, 4}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { TransitionSequence(3, {0, 1}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { TransitionSequence(3, {}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { TransitionSequence(0, {1}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { expand(TransitionSequence(kMaxDimension + 1, {1, 1})); }) == ErrorKind::DimensionTooLarge);
}

TEST_CASE("hamming") {
  CHECK(hamming(Vertex::parse("0000"), Vertex::parse("1111")) == 4);
  CHECK(hamming(Vertex::parse("1101"), Vertex::parse("1101")) == 0);
  CHECK(hamming(Vertex::parse("1101"), Vertex::parse("0111")) == 2);
  CHECK(kind_of([] { hamming(Vertex::parse("01"), Vertex::parse("011")); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("code distance") {
  CHECK(code_distance(1, 5, 8, Topology::Cyclic) == 4);
  CHECK(code_distance(1, 7, 8, Topology::Cyclic) == 2);
  CHECK(code_distance(2, 6, 9, Topology::Open) == 4);
  CHECK(code_distance(6, 2, 9, Topology::Open) == 4);
  CHECK(kind_of([] { code_distance(0, 2, 8, Topology::Cyclic); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { code_distance(1, 9, 8, Topology::Cyclic); }) == ErrorKind::OutOfRange);
}

TEST_CASE("verify_spread examples") {
  CHECK(verify_spread(kHexagon, 2).holds);
  CHECK(verify_spread(kSquare, 5).holds);

  const auto gray = verify_spread(kGray8, 2);
  REQUIRE_FALSE(gray.holds);
  REQUIRE(gray.witness);
  CHECK(gray.witness->i == 1);
  CHECK(gray.witness->j == 4);
  CHECK(gray.witness->hamming == 1);
  CHECK(gray.witness->code_distance == 3);
  CHECK(gray.witness->x.to_string() == "000");
  CHECK(gray.witness->y.to_string() == "010");
}

TEST_CASE("max_spread examples") {
  const auto gray = max_spread(kGray8);
  CHECK(gray.max_spread == 1);
  CHECK_FALSE(gray.unbounded);
  const auto mono = max_spread(TransitionSequence(4, {1, 2, 3, 4, 1, 2, 3, 4}));
  CHECK(mono.unbounded);
  CHECK(max_spread(kSquare).unbounded);
  // vertex 00 revisited
  CHECK(max_spread(TransitionSequence(2, {1, 1, 2, 2})).max_spread == 0);
}

TEST_CASE("property: expansion round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 9);
    const auto t = gen::closed_walk(rng, d, 1 + static_cast<int>(rng() % 12));
    CHECK(expand(t).transitions() == t);
  }
}

TEST_CASE("property: verify_spread agrees with brute force and is symmetric") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const auto t = gen::closed_walk(rng, d, 1 + static_cast<int>(rng() % 8));
    const auto perm = gen::permutation(rng, d);
    for (int k = 1; k <= 4; ++k) {
      const bool holds = verify_spread(t, k).holds;
      CHECK(holds == brute_spread(t, k));
      CHECK(verify_spread(t.relabeled(perm), k).holds == holds);
      CHECK(verify_spread(t.reversed(), k).holds == holds);
      CHECK(verify_spread(t.rotated(rng() % t.size()), k).holds == holds);
      CHECK(verify_spread(t.canonical(), k).holds == holds);
      if (holds && k > 1) CHECK(verify_spread(t, k - 1).holds);
    }
  }
}

TEST_CASE("property: witness explains the failure") {
  std::mt19937 rng(23);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const auto t = gen::closed_walk(rng, d, 2 + static_cast<int>(rng() % 8));
    const auto w = expand(t);
    const auto rep = max_spread(w);
    if (rep.unbounded) {
      CHECK(verify_spread(w, static_cast<int>(w.size())).holds);
      continue;
    }
    REQUIRE(rep.witness);
    const int k = rep.max_spread + 1;
    const auto& x = *rep.witness;
    CHECK(x.hamming == hamming(w.vertex(static_cast<std::size_t>(x.i - 1)), w.vertex(static_cast<std::size_t>(x.j - 1))));
    CHECK(x.code_distance == code_distance(x.i, x.j, static_cast<long>(w.size()), t.topology()));
    CHECK(x.hamming < std::min(x.code_distance, k));
    CHECK_FALSE(verify_spread(w, k).holds);
    if (rep.max_spread > 0) CHECK(verify_spread(w, rep.max_spread).holds);
    ++seen;
  }
  CHECK(seen > 50);
}
