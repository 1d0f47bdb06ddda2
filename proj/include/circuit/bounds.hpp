#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circuit::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// Inference rules of the bound engine, in tie-break preference order.
enum class Rule {
  ExactOracle,
  TrivialGray,
  AkSpread2,
  Singleton,
  Lemma1,
  MonotoneK,
  MonotoneD,
  Lemma2Divis,
  KleeProduct,
  PnDoubling,
  None,
};

std::string_view to_string(Rule rule) noexcept;

struct BoundRecord;
using BoundPtr = std::shared_ptr<const BoundRecord>;

/// A lower bound on K(d, k) (or on K(d, k, s) when `s` is set) together with
/// the rule that produced it and the sub-bounds it consumed.
struct BoundRecord {
  int d = 0;
  int k = 0;
  std::optional<int> s;
  BigInt value;
  Rule rule = Rule::None;
  std::vector<BoundPtr> children;
  // pn-doubling parameters
  std::optional<int> pn_index;
  std::optional<int> pn_constant;
  /// Rules the engine may not use, e.g. imported results such as ak-spread2.
  std::set<Rule> excluded;
};

/// Exact K(d, k) values keyed by (d, k), e.g. from exhaustive search.
using BaseTable = std::map<std::pair<int, int>, BigInt>;

// Closed-form rules. Each throws Error{PreconditionFailed} outside its range.
BoundPtr bound_exact(int d, int k, const BigInt& value);
BoundPtr bound_trivial_gray(int d);
/// floor(3/10 * 2^d), rounded down to even. Imported result, not proved here.
BoundPtr bound_ak_spread2(int d);
/// (k+1) * 2^(floor(2d/(k+1)) - 1) for odd k with floor(2d/(k+1)) >= 2.
BoundPtr bound_singleton(int d, int k);
/// K(d,k) > 2(d-1)k for k >= 2 and d >= (k+2)^2; tightened to the next even integer.
BoundPtr bound_lemma1(int d, int k);

// Composite rules.
BoundPtr bound_monotone_k(BoundPtr higher_spread);
BoundPtr bound_monotone_d(BoundPtr lower_dimension);
/// K(d+1, k, s) >= K(d, k).
BoundPtr bound_lemma2(BoundPtr base, int s);
/// K(m+n+2, k) >= K(m, k-1) K(n, k) / k, rounded down to even, k even,
/// (k+2)^2 <= m <= n. The K(m, k-1) factor enters through K(m+1, k-1, k).
BoundPtr bound_klee(int m, int n, int k, BoundPtr sub_m, BoundPtr sub_n);

/// Doubled difference-preserving path in dimension d_i = 2^i + 2i + 5k - 4:
/// 2(2^(d_i - k - (2+k)i - c) + k), clipped to 2^(d_i) and to even.
/// Throws Error{NegativeExponent} when the exponent is below zero.
BoundPtr bound_pn(int i, int k, int c);
int pn_dimension(int i, int k);
/// (d_i - k - (2+k)i - c) / d_i, the exponent of the path length per dimension.
double pn_exponent_ratio(int i, int k, int c);

struct EngineOptions {
  /// Enables pn-doubling with this constant. Unset by default because the
  /// constant is not known.
  std::optional<int> pn_constant;
  /// Rules the engine may not use, e.g. imported results such as ak-spread2.
  std::set<Rule> excluded;
};

/// Memoized closure of all rules over d' <= max_d and k' <= max_k.
/// Tables are filled on construction and read-only afterwards.
class BoundEngine {
public:
  BoundEngine(int max_d, int max_k, BaseTable base = {}, EngineOptions opts = {});

  BoundPtr best(int d, int k) const;
  int max_d() const noexcept { return max_d_; }
  int max_k() const noexcept { return max_k_; }

private:
  BoundPtr compute(int d, int k) const;
  const BoundPtr& at(int d, int k) const;

  int max_d_;
  int max_k_;
  BaseTable base_;
  EngineOptions opts_;
  std::vector<BoundPtr> memo_;
};

/// Best bound on K(d, k) derivable from the rules; value 0 with Rule::None if nothing applies.
BoundPtr best_lower_bound(int d, int k, const BaseTable& base = {}, EngineOptions opts = {});

/// Re-checks every rule's preconditions and arithmetic bottom-up.
bool validate(const BoundRecord& record, std::string* why = nullptr);

/// log2 of a nonnegative integer (-inf for 0). Output only.
double log2_value(const BigInt& v);
BigInt pow2(int e);

struct Decomposition {
  long long d = 0;
  int k = 0;
  long long offset = 0;
  int max_index = 0;           // H: largest i with d_i <= d (0 if none)
  long long remainder = 0;     // p, 0 <= p < d_1
  std::vector<int> indices;    // ascending, distinct

  long long component(int i) const;
};

/// Greedy representation d = p + sum_{i in indices} (2^i + 2i + offset).
Decomposition decompose(long long d, int k, std::optional<long long> offset = std::nullopt);
long long default_offset(int k) noexcept;

struct SuperadditivityEntry {
  int n = 0; // sequence index; the dimension is n - 3
  BigInt value;
  double a_n = 0.0; // log2(value / k)
};

struct SuperadditivityReport {
  int k = 0;
  std::vector<SuperadditivityEntry> table;
  std::vector<std::pair<int, int>> violations;
  long pairs_checked = 0;
};

/// Checks K(m-3,k) K(n-3,k) <= k K(m+n-3,k) for all m <= n with
/// m >= (k+2)^2 + 3 and all three values present in `exact_by_dimension`.
/// Throws Error{InsufficientData} when no such pair exists.
SuperadditivityReport superadditivity_check(int k, const std::map<int, BigInt>& exact_by_dimension);

} // namespace circuit::bounds
