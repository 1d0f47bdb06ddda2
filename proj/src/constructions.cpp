#include "circuit/constructions.hpp"

#include "circuit/error.hpp"
#include "circuit/spread.hpp"

namespace circuit::construct {
namespace {

void require_spread(const TransitionSequence& seq, int k, const char* what) {
  auto check = verify_spread(seq, k);
  if (!check.holds) {
    const auto& w = *check.witness;
    fail(ErrorKind::PreconditionFailed,
         std::string(what) + " does not have spread " + std::to_string(k) + ": positions (" +
             std::to_string(w.i) + "," + std::to_string(w.j) + ") hamming " + std::to_string(w.hamming) +
             " < " + std::to_string(std::min(w.code_distance, k)));
  }
}

void enforce_spread(const TransitionSequence& out, int k, const char* what) {
  auto check = verify_spread(out, k);
  if (!check.holds) {
    const auto& w = *check.witness;
    fail(ErrorKind::SpreadLost, std::string(what) + " output " + out.to_string() + " fails spread " +
                                    std::to_string(k) + " at (" + std::to_string(w.i) + "," +
                                    std::to_string(w.j) + ")");
  }
}

} // namespace

TransitionSequence embed(const TransitionSequence& seq, int new_dimension) {
  if (new_dimension < seq.dimension())
    fail(ErrorKind::DimensionShrink, "cannot embed dimension " + std::to_string(seq.dimension()) +
                                         " into " + std::to_string(new_dimension));
  return seq.with_dimension(new_dimension);
}

PaddingPlan plan_padding(long n, int dimension, int k, int s) {
  if (k < 1) fail(ErrorKind::PreconditionFailed, "spread k must be >= 1");
  if (s < k || s > dimension)
    fail(ErrorKind::BadDivisor, "s = " + std::to_string(s) + " outside {" + std::to_string(k) + ", ..., " +
                                    std::to_string(dimension) + "}");
  if (n % 2 != 0) fail(ErrorKind::PreconditionFailed, "cycle length must be even");
  PaddingPlan plan;
  plan.n = n;
  plan.k = k;
  plan.s = s;
  const long half = n / 2;
  plan.q = half / s;
  plan.r = half % s;
  if (plan.r == 0) return plan;
  plan.p = s - plan.r;
  if (plan.p * k > half)
    fail(ErrorKind::NotEnoughSegments, "p*k = " + std::to_string(plan.p * k) + " exceeds N/2 = " +
                                           std::to_string(half));
  for (long b = 1; b <= plan.p; ++b) plan.cut_points.push_back(b * k);
  return plan;
}

TransitionSequence pad_to_divisible(const TransitionSequence& seq, int k, int s, Options opts) {
  if (!seq.cyclic()) fail(ErrorKind::PreconditionFailed, "padding needs a cyclic sequence");
  const auto plan = plan_padding(static_cast<long>(seq.size()), seq.dimension(), k, s);
  if (opts.reverify) require_spread(seq, k, "input cycle");

  const int fresh = seq.dimension() + 1;
  if (plan.trivial()) return embed(seq, fresh);

  const auto sym = seq.symbols();
  const std::size_t half = sym.size() / 2;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(plan.result_length()));
  for (std::size_t h = 0; h < 2; ++h) {
    auto cut = plan.cut_points.begin();
    for (std::size_t local = 1; local <= half; ++local) {
      out.push_back(sym[h * half + local - 1]);
      if (cut != plan.cut_points.end() && static_cast<long>(local) == *cut) {
        out.push_back(fresh);
        ++cut;
      }
    }
  }
  TransitionSequence result(fresh, std::move(out), Topology::Cyclic);
  if (opts.reverify) enforce_spread(result, k, "pad_to_divisible");
  return result;
}

TransitionSequence double_path_to_cycle(const TransitionSequence& path, int k, Options opts) {
  if (path.cyclic()) fail(ErrorKind::InputNotPath, "doubling needs an open path");
  if (k < 1) fail(ErrorKind::PreconditionFailed, "spread k must be >= 1");
  if (opts.reverify) require_spread(path, k, "input path");

  const int base = path.dimension();
  std::vector<int> out;
  out.reserve(2 * (path.size() + static_cast<std::size_t>(k)));
  for (int copy = 0; copy < 2; ++copy) {
    out.insert(out.end(), path.symbols().begin(), path.symbols().end());
    for (int c = 1; c <= k; ++c) out.push_back(base + c);
  }
  TransitionSequence result(base + k, std::move(out), Topology::Cyclic);
  if (opts.reverify) enforce_spread(result, k, "double_path_to_cycle");
  return result;
}

} // namespace circuit::construct
