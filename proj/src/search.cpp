#include "circuit/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "circuit/error.hpp"
#include "circuit/spread.hpp"

namespace circuit::search {

std::string_view to_string(Kind kind) noexcept { return kind == Kind::Cycle ? "cycle" : "path"; }

namespace {

// Work units are scheduled in waves of at most this many, in lexicographic
// prefix order. Each wave prunes against the best result of all earlier
// waves, so the amount of pruning (and therefore the node count) depends only
// on the wave schedule, never on the number of worker threads.
constexpr std::size_t kMaxWave = 64;

using Symbols = std::vector<int>;

struct Problem {
  Kind kind = Kind::Cycle;
  int d = 0;
  int k = 0;
  int s = 1;
  bool collect = false;
  long length_step = 2; // lengths a result may take are multiples of this
};

struct Outcome {
  long best = 0;
  Symbols best_seq;
  std::vector<Symbols> all;
  std::uint64_t nodes = 0;
  bool truncated = false;

  void offer(long len, const Symbols& seq, bool collect) {
    if (len > best) {
      best = len;
      best_seq = seq;
      all.clear();
      if (collect) all.push_back(seq);
    } else if (len == best && len > 0) {
      if (seq < best_seq) best_seq = seq;
      if (collect) all.push_back(seq);
    }
  }

  void merge(const Outcome& o, bool collect) {
    if (o.best > best) {
      best = o.best;
      best_seq = o.best_seq;
      all = o.all;
    } else if (o.best == best && o.best > 0) {
      if (o.best_seq < best_seq) best_seq = o.best_seq;
      if (collect) all.insert(all.end(), o.all.begin(), o.all.end());
    }
  }
};

// Pruning context for one unit. Lengths below `floor` can never win.
// Lengths equal to `tie_floor` were already reached by a lexicographically
// earlier unit, so ties with it cannot win either (unless collecting).
struct Bounds {
  long floor = 0;
  long tie_floor = 0;
};

// Incremental DFS state. Vertices are d-bit integers; coordinates are 0-based
// internally and 1-based in emitted symbols.
//
// A vertex x_i constrains every later position j through
//   d_H(x_i, x_j) >= min(j - i, r_i)
// with r_i = k for paths. For cycles the closing arc can be shorter than j - i;
// since the final length N is at least j + 1, that arc is at least i + 1, so
// r_i = min(i + 1, k) is the strongest condition that is safe before closure.
// Once j - i >= r_i the constraint is a Hamming ball of radius r_i - 1 around
// x_i ("matured"); before that it says the walk between i and j is geodesic.
// Closed cycles are then checked in full by verify_spread.
class Walker {
public:
  explicit Walker(const Problem& pb)
      : pb_(pb), nverts_(std::uint32_t{1} << pb.d), block_(nverts_, 0), on_path_(nverts_, 0) {
    masks_.resize(nverts_);
    std::iota(masks_.begin(), masks_.end(), 0u);
    std::stable_sort(masks_.begin(), masks_.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    ball_end_.assign(static_cast<std::size_t>(pb.d) + 2, 0);
    for (int r = 0; r <= pb.d; ++r) {
      ball_end_[static_cast<std::size_t>(r)] = static_cast<std::size_t>(
          std::count_if(masks_.begin(), masks_.end(), [r](std::uint32_t m) { return std::popcount(m) <= r; }));
    }
    avail_[0] = avail_[1] = 0;
    for (std::uint32_t v = 0; v < nverts_; ++v) ++avail_[std::popcount(v) & 1];
  }

  int depth() const noexcept { return static_cast<int>(verts_.size()) - 1; }
  std::uint32_t head() const noexcept { return verts_.back(); }
  const Symbols& transitions() const noexcept { return trans_; }

  int child_limit() const noexcept { return std::min(used_.back() + 1, pb_.d); }

  bool can_step(int c) const noexcept {
    const std::uint32_t v = head() ^ (std::uint32_t{1} << c);
    if (block_[v] != 0 || on_path_[v]) return false;
    const int j = depth();
    for (int i = mat_upto_.back() + 1; i < j; ++i) {
      if (std::popcount(verts_[static_cast<std::size_t>(i)] ^ v) != j + 1 - i) return false;
    }
    return true;
  }

  void push_root() { push_vertex(0, -1); }
  void push(int c) { push_vertex(head() ^ (std::uint32_t{1} << c), c); }

  void pop() {
    const int j = depth();
    if (int mi = mature_index(j); mi >= 0) change_ball(verts_[static_cast<std::size_t>(mi)], radius(mi), -1);
    const std::uint32_t v = verts_.back();
    on_path_[v] = 0;
    --on_path_par_[std::popcount(v) & 1];
    if (block_[v] == 0) ++avail_[std::popcount(v) & 1];
    verts_.pop_back();
    if (!trans_.empty() && static_cast<int>(trans_.size()) == j) trans_.pop_back();
    used_.pop_back();
    mat_upto_.pop_back();
  }

  /// Largest final length still reachable from this node.
  long upper_bound() const noexcept {
    const long even = on_path_par_[0] + avail_[0];
    const long odd = on_path_par_[1] + avail_[1];
    if (pb_.kind == Kind::Cycle) {
      const long n = 2 * std::min(even, odd);
      return n - n % pb_.length_step;
    }
    return std::min(2 * even, 2 * odd + 1) - 1;
  }

private:
  int mature_index(int j) const noexcept {
    const int k = pb_.k;
    if (pb_.kind == Kind::Path) {
      return j - k + 1 >= 0 ? j - k + 1 : -1;
    }
    if (j % 2 == 0 && j / 2 <= k - 1) return j / 2;
    if (j - k + 1 >= k - 1) return j - k + 1;
    return -1;
  }

  int radius(int i) const noexcept {
    return pb_.kind == Kind::Cycle ? std::min(i, pb_.k - 1) : pb_.k - 1;
  }

  void push_vertex(std::uint32_t v, int c) {
    const int j = static_cast<int>(verts_.size());
    verts_.push_back(v);
    if (c >= 0) trans_.push_back(c + 1);
    on_path_[v] = 1;
    ++on_path_par_[std::popcount(v) & 1];
    if (block_[v] == 0) --avail_[std::popcount(v) & 1];
    used_.push_back(used_.empty() ? 0 : std::max(used_.back(), c + 1));
    const int mi = mature_index(j);
    mat_upto_.push_back(mi >= 0 ? mi : (mat_upto_.empty() ? -1 : mat_upto_.back()));
    if (mi >= 0) change_ball(verts_[static_cast<std::size_t>(mi)], radius(mi), +1);
  }

  void change_ball(std::uint32_t center, int r, int delta) {
    const std::size_t end = ball_end_[static_cast<std::size_t>(std::min(r, pb_.d))];
    for (std::size_t m = 0; m < end; ++m) {
      const std::uint32_t u = center ^ masks_[m];
      if (delta > 0) {
        if (block_[u]++ == 0 && !on_path_[u]) --avail_[std::popcount(u) & 1];
      } else {
        if (--block_[u] == 0 && !on_path_[u]) ++avail_[std::popcount(u) & 1];
      }
    }
  }

  const Problem& pb_;
  std::uint32_t nverts_;
  std::vector<std::uint32_t> block_;
  std::vector<char> on_path_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> ball_end_;
  long avail_[2];
  long on_path_par_[2] = {0, 0};
  std::vector<std::uint32_t> verts_;
  Symbols trans_;
  std::vector<int> used_;
  std::vector<int> mat_upto_;
};

class Runner {
public:
  Runner(const Problem& pb, Bounds bounds, std::uint64_t cap)
      : pb_(pb), bounds_(bounds), cap_(cap), walker_(pb) {}

  // Visits the current head: records it if it is a result and reports whether
  // its subtree can still beat the bounds.
  bool visit(Outcome& out) {
    const int j = walker_.depth();
    if (pb_.kind == Kind::Cycle) {
      const std::uint32_t x = walker_.head();
      if (j >= 1 && std::popcount(x) == 1) {
        const long n = j + 1;
        if (n % pb_.s == 0 && wanted(n, out)) {
          Symbols seq = walker_.transitions();
          seq.push_back(std::countr_zero(x) + 1);
          if (verify_spread(TransitionSequence(pb_.d, seq, Topology::Cyclic), pb_.k).holds)
            out.offer(n, seq, pb_.collect);
        }
      }
    } else if (j >= 1 && wanted(j, out)) {
      out.offer(j, walker_.transitions(), pb_.collect);
    }
    const long ub = walker_.upper_bound();
    if (ub < bounds_.floor || ub < out.best) return false;
    if (!pb_.collect && (ub <= bounds_.tie_floor || ub <= out.best)) return false;
    return true;
  }

  // DFS over the subtree of the current head, never popping below the
  // starting depth. When split_at > 0, children at that depth are reported to
  // `emit` instead of being entered.
  template <class Emit>
  void dfs(Outcome& out, int split_at, Emit&& emit) {
    const int floor = walker_.depth();
    std::vector<int> next(1, 0);
    if (!visit(out)) next.back() = pb_.d;
    while (true) {
      const int j = walker_.depth();
      int& n = next.back();
      if (n >= walker_.child_limit()) {
        if (j == floor) break;
        walker_.pop();
        next.pop_back();
        continue;
      }
      const int c = n++;
      if (!walker_.can_step(c)) continue;
      if (split_at > 0 && j + 1 == split_at) {
        Symbols prefix = walker_.transitions();
        prefix.push_back(c + 1);
        emit(std::move(prefix));
        continue;
      }
      walker_.push(c);
      if (++out.nodes > cap_) {
        out.truncated = true;
        return;
      }
      next.push_back(visit(out) ? 0 : pb_.d);
    }
  }

  Walker& walker() noexcept { return walker_; }

private:
  bool wanted(long len, const Outcome& out) const noexcept {
    if (len < bounds_.floor) return false;
    if (!pb_.collect && len <= bounds_.tie_floor) return false;
    return len > out.best || (pb_.collect && len == out.best);
  }

  const Problem& pb_;
  Bounds bounds_;
  std::uint64_t cap_;
  Walker walker_;
};

Outcome run_unit(const Problem& pb, const Symbols& prefix, Bounds bounds, std::uint64_t cap) {
  Runner runner(pb, bounds, cap);
  auto& w = runner.walker();
  w.push_root();
  for (int sym : prefix) w.push(sym - 1);
  Outcome out;
  out.nodes = 1; // the unit root
  if (out.nodes > cap) {
    out.truncated = true;
    return out;
  }
  runner.dfs(out, 0, [](Symbols&&) {});
  return out;
}

void run_wave(const Problem& pb, const std::vector<Symbols>& units, std::size_t begin, std::size_t end,
              Bounds bounds, std::uint64_t cap, int jobs, std::vector<Outcome>& results) {
  std::atomic<std::size_t> next{begin};
  auto worker = [&] {
    for (std::size_t u; (u = next.fetch_add(1)) < end;) results[u - begin] = run_unit(pb, units[u], bounds, cap);
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), end - begin);
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

SearchResult solve(const Problem& pb, const Options& opts) {
  if (pb.d < 1 || pb.d > kMaxSearchDimension)
    fail(ErrorKind::PreconditionFailed,
         "search dimension must lie in [1, " + std::to_string(kMaxSearchDimension) + "]");
  if (pb.k < 1) fail(ErrorKind::PreconditionFailed, "spread k must be >= 1");
  if (pb.s < 1) fail(ErrorKind::PreconditionFailed, "divisor s must be >= 1");
  if (opts.jobs < 1) fail(ErrorKind::PreconditionFailed, "jobs must be >= 1");
  if (opts.split_depth < 1) fail(ErrorKind::PreconditionFailed, "split depth must be >= 1");
  if (opts.budget < 1) fail(ErrorKind::PreconditionFailed, "budget must be >= 1");

  // Phase 1: everything above the split depth, serially.
  Outcome total;
  std::vector<Symbols> units;
  {
    Runner runner(pb, Bounds{}, ~std::uint64_t{0});
    runner.walker().push_root();
    total.nodes = 1;
    runner.dfs(total, opts.split_depth, [&](Symbols&& p) { units.push_back(std::move(p)); });
  }
  const long enum_best = total.best;

  // Phase 2: units in lexicographic order, one wave at a time.
  bool complete = true;
  long units_best = 0;
  std::vector<Outcome> results;
  // Waves double in size up to kMaxWave: an early optimum then prunes most of
  // the tree, and the schedule is still independent of the worker count.
  std::size_t wave = 1;
  for (std::size_t begin = 0; begin < units.size(); begin += wave, wave = std::min(2 * wave, kMaxWave)) {
    if (total.nodes >= opts.budget) {
      complete = false;
      break;
    }
    const std::size_t end = std::min(units.size(), begin + wave);
    const Bounds bounds{std::max(enum_best, units_best), units_best};
    results.assign(end - begin, Outcome{});
    run_wave(pb, units, begin, end, bounds, opts.budget - total.nodes, opts.jobs, results);
    // Units are charged in lexicographic order, so the cut point does not
    // depend on thread scheduling.
    for (const auto& r : results) {
      if (r.truncated || total.nodes + r.nodes > opts.budget) {
        total.nodes = std::min(total.nodes + r.nodes, opts.budget);
        total.merge(r, pb.collect);
        complete = false;
        break;
      }
      total.nodes += r.nodes;
      total.merge(r, pb.collect);
      units_best = std::max(units_best, r.best);
    }
    if (!complete) break;
  }

  SearchResult res;
  res.kind = pb.kind;
  res.d = pb.d;
  res.k = pb.k;
  res.best_length = total.best;
  res.nodes_expanded = total.nodes;
  res.exhausted = complete;
  const Topology topo = pb.kind == Kind::Cycle ? Topology::Cyclic : Topology::Open;
  if (total.best > 0) res.best_sequence = TransitionSequence(pb.d, total.best_seq, topo);
  if (pb.collect) {
    std::sort(total.all.begin(), total.all.end());
    total.all.erase(std::unique(total.all.begin(), total.all.end()), total.all.end());
    for (auto& seq : total.all) res.optimal_sequences.emplace_back(pb.d, std::move(seq), topo);
  }
  return res;
}

} // namespace

SearchResult max_cycle(int d, int k, const Options& opts) {
  return solve(Problem{Kind::Cycle, d, k, 1, opts.collect_all, 2}, opts);
}

SearchResult max_cycle_divisible(int d, int k, int s, const Options& opts) {
  if (s < 1) fail(ErrorKind::PreconditionFailed, "divisor s must be >= 1");
  auto res = solve(Problem{Kind::Cycle, d, k, s, opts.collect_all, std::lcm(2L, static_cast<long>(s))}, opts);
  res.s = s;
  return res;
}

SearchResult max_path(int d, int k, const Options& opts) {
  return solve(Problem{Kind::Path, d, k, 1, opts.collect_all, 1}, opts);
}

} // namespace circuit::search
