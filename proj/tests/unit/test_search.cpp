#include <doctest.h>

#include <set>

#include "circuit/error.hpp"
#include "circuit/search.hpp"
#include "circuit/spread.hpp"
#include "naive_search.hpp"

using namespace circuit;
using namespace circuit::search;

namespace {

std::set<oracle::Seq> as_set(const SearchResult& r) {
  std::set<oracle::Seq> out;
  for (const auto& t : r.optimal_sequences) out.emplace(t.symbols().begin(), t.symbols().end());
  return out;
}

Options collecting() {
  Options o;
  o.collect_all = true;
  return o;
}

} // namespace

TEST_CASE("examples") {
  CHECK(max_cycle(3, 1).best_length == 8);
  const auto hex = max_cycle(3, 2);
  CHECK(hex.best_length == 6);
  CHECK(hex.exhausted);
  CHECK(hex.best_sequence == TransitionSequence(3, {1, 2, 3, 1, 2, 3}));
  CHECK(max_cycle(4, 3).best_length >= 8);
  CHECK(max_cycle_divisible(3, 2, 3).best_length == 6);
  CHECK(max_cycle_divisible(3, 2, 4).best_length == 4);
  CHECK(max_path(2, 2).best_length == 2);
  CHECK(max_path(2, 2).best_sequence == TransitionSequence(2, {1, 2}, Topology::Open));
  CHECK(max_path(1, 1).best_length == 1);
}

TEST_CASE("exact values from the search") {
  CHECK(max_cycle(5, 2).best_length == 14);
  CHECK(max_cycle(5, 3).best_length == 10);
  CHECK(max_path(5, 2).best_length == 13);
}

TEST_CASE("pruned search matches the naive enumerator for d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= d + 1; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      const auto naive_c = oracle::naive_cycle(d, k);
      const auto fast_c = max_cycle(d, k, collecting());
      CHECK(fast_c.exhausted);
      CHECK(fast_c.best_length == naive_c.length);
      CHECK(as_set(fast_c) == naive_c.canonical);

      const auto naive_p = oracle::naive_path(d, k);
      const auto fast_p = max_path(d, k, collecting());
      CHECK(fast_p.best_length == naive_p.length);
      CHECK(as_set(fast_p) == naive_p.canonical);

      for (int s = 3; s <= d + 2; ++s) {
        CAPTURE(s);
        CHECK(max_cycle_divisible(d, k, s).best_length == oracle::naive_cycle(d, k, s).length);
      }
    }
  }
}

TEST_CASE("results are valid codes and canonical") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const auto c = max_cycle(d, k);
      REQUIRE(c.best_sequence);
      CHECK(static_cast<long>(c.best_sequence->size()) == c.best_length);
      CHECK(verify_spread(*c.best_sequence, k).holds);
      CHECK(c.best_sequence->canonical() == *c.best_sequence);
      const auto p = max_path(d, k);
      REQUIRE(p.best_sequence);
      CHECK(verify_spread(*p.best_sequence, k).holds);
      const auto s = max_cycle_divisible(d, k, 3);
      if (s.best_sequence) CHECK(s.best_length % 3 == 0);
      CHECK(s.best_length <= c.best_length);
    }
  }
}

TEST_CASE("monotonicity over the exhaustive table") {
  long table[7][5] = {};
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 4; ++k) table[d][k] = max_cycle(d, k).best_length;
  for (int d = 1; d <= 5; ++d) {
    for (int k = 1; k <= 4; ++k) {
      if (k < 4) CHECK(table[d][k] >= table[d][k + 1]);
      if (d < 5) CHECK(table[d + 1][k] >= table[d][k]);
    }
  }
}

TEST_CASE("determinism across worker counts") {
  for (auto [d, k] : {std::pair{5, 2}, {6, 3}, {5, 1}}) {
    Options one;
    Options many;
    many.jobs = 4;
    const auto a = max_cycle(d, k, one);
    const auto b = max_cycle(d, k, many);
    CHECK(a.best_length == b.best_length);
    CHECK(a.best_sequence == b.best_sequence);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.exhausted == b.exhausted);

    Options split = many;
    split.split_depth = 3;
    CHECK(max_cycle(d, k, split).best_sequence == a.best_sequence);
  }
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  for (int jobs : {1, 3}) {
    Options o;
    o.budget = 500;
    o.jobs = jobs;
    const auto r = max_cycle(6, 2, o);
    CHECK_FALSE(r.exhausted);
    CHECK(r.nodes_expanded <= 500);
    if (r.best_sequence) CHECK(verify_spread(*r.best_sequence, 2).holds);
  }
  Options a;
  a.budget = 2000;
  Options b = a;
  b.jobs = 4;
  const auto ra = max_cycle(6, 2, a);
  const auto rb = max_cycle(6, 2, b);
  CHECK(ra.nodes_expanded == rb.nodes_expanded);
  CHECK(ra.best_sequence == rb.best_sequence);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(max_cycle(0, 1), Error);
  CHECK_THROWS_AS(max_cycle(kMaxSearchDimension + 1, 1), Error);
  CHECK_THROWS_AS(max_cycle(3, 0), Error);
  CHECK_THROWS_AS(max_cycle_divisible(3, 1, 0), Error);
  Options o;
  o.jobs = 0;
  CHECK_THROWS_AS(max_cycle(3, 1, o), Error);
}
