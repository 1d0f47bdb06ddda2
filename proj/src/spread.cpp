#include "circuit/spread.hpp"

#include <algorithm>
#include <limits>

#include "circuit/error.hpp"

namespace circuit {
namespace {

int pair_code_distance(std::size_t i, std::size_t j, std::size_t n, Topology topology) {
  const std::size_t t = j - i;
  return static_cast<int>(topology == Topology::Cyclic ? std::min(t, n - t) : t);
}

Witness make_witness(const CodeWalk& walk, std::size_t i, std::size_t j, int h, int dc) {
  return {static_cast<long>(i + 1), static_cast<long>(j + 1), h, dc, walk.vertex(i), walk.vertex(j)};
}

} // namespace

SpreadCheck verify_spread(const CodeWalk& walk, int k) {
  if (k < 1) fail(ErrorKind::PreconditionFailed, "spread k must be >= 1");
  SpreadCheck check{true, k, std::nullopt};
  const auto v = walk.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int dc = pair_code_distance(i, j, n, walk.topology());
      const int h = distance(v[i], v[j]);
      if (h < std::min(dc, k)) {
        check.holds = false;
        check.witness = make_witness(walk, i, j, h, dc);
        return check;
      }
    }
  }
  return check;
}

SpreadCheck verify_spread(const TransitionSequence& seq, int k) {
  return verify_spread(expand(seq), k);
}

// A pair with h >= d_C never constrains k. A pair with h < d_C forbids every
// k > h, so the maximum spread is the smallest such h.
SpreadReport max_spread(const CodeWalk& walk) {
  const auto v = walk.vertices();
  const std::size_t n = v.size();
  int limit = std::numeric_limits<int>::max();
  std::size_t wi = 0, wj = 0;
  int wdc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int dc = pair_code_distance(i, j, n, walk.topology());
      const int h = distance(v[i], v[j]);
      if (h < dc && h < limit) {
        limit = h;
        wi = i;
        wj = j;
        wdc = dc;
      }
    }
  }
  SpreadReport report;
  if (limit == std::numeric_limits<int>::max()) {
    report.unbounded = true;
    report.max_spread = static_cast<int>(n);
    return report;
  }
  report.max_spread = limit;
  report.witness = make_witness(walk, wi, wj, limit, wdc);
  return report;
}

SpreadReport max_spread(const TransitionSequence& seq) { return max_spread(expand(seq)); }

} // namespace circuit
