#include "circuit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "circuit/error.hpp"

namespace circuit::bounds {

std::string_view to_string(Rule rule) noexcept {
  switch (rule) {
  case Rule::ExactOracle: return "exact-oracle";
  case Rule::TrivialGray: return "trivial-gray";
  case Rule::AkSpread2: return "ak-spread2";
  case Rule::Singleton: return "singleton";
  case Rule::Lemma1: return "lemma1";
  case Rule::MonotoneK: return "monotone-k";
  case Rule::MonotoneD: return "monotone-d";
  case Rule::Lemma2Divis: return "lemma2-divis";
  case Rule::KleeProduct: return "klee-product";
  case Rule::PnDoubling: return "pn-doubling";
  case Rule::None: return "none";
  }
  return "unknown";
}

BigInt pow2(int e) {
  BigInt v = 1;
  return v << e;
}

namespace {

// Cycles in I(d) have even length and at most 2^d vertices.
BigInt normalize(BigInt v, int d) {
  if (v < 0) v = 0;
  const BigInt cap = pow2(d);
  if (v > cap) v = cap;
  if (v % 2 != 0) v -= 1;
  return v;
}

[[noreturn]] void precondition(const std::string& msg) { fail(ErrorKind::PreconditionFailed, msg); }

BoundPtr make(int d, int k, BigInt value, Rule rule, std::vector<BoundPtr> children = {}) {
  auto r = std::make_shared<BoundRecord>();
  r->d = d;
  r->k = k;
  r->value = std::move(value);
  r->rule = rule;
  r->children = std::move(children);
  return r;
}

long long pn_exponent(int i, int k, int c) {
  const long long di = pn_dimension(i, k);
  return di - k - static_cast<long long>(2 + k) * i - c;
}

BigInt ak_value(int d) { return normalize(pow2(d) * 3 / 10, d); }

BigInt singleton_value(int d, int k) {
  const int f = 2 * d / (k + 1);
  return normalize(BigInt(k + 1) * pow2(f - 1), d);
}

bool singleton_applies(int d, int k) { return k % 2 == 1 && 2 * d / (k + 1) >= 2; }
bool lemma1_applies(int d, int k) { return k >= 2 && d >= (k + 2) * (k + 2); }

BigInt klee_value(const BigInt& km, const BigInt& kn, int k, int d) { return normalize(km * kn / k, d); }

bool lemma2_applies(int base_d, int base_k, int s) {
  // K(d+1, 1, 2) >= K(d, 1) holds trivially since every cycle has even length.
  if (s == 2 && base_k == 1) return true;
  return base_k >= 2 && base_d >= (base_k + 2) * (base_k + 2) && s >= base_k && s <= base_d;
}

} // namespace

BoundPtr bound_exact(int d, int k, const BigInt& value) {
  if (d < 1 || k < 1) precondition("exact value needs d >= 1 and k >= 1");
  if (value < 0 || value > pow2(d) || value % 2 != 0)
    precondition("exact K(" + std::to_string(d) + "," + std::to_string(k) + ") = " + value.str() +
                 " is not an even integer in [0, 2^d]");
  return make(d, k, value, Rule::ExactOracle);
}

BoundPtr bound_trivial_gray(int d) {
  if (d < 1) precondition("trivial-gray needs d >= 1");
  return make(d, 1, pow2(d), Rule::TrivialGray);
}

BoundPtr bound_ak_spread2(int d) {
  if (d < 1) precondition("ak-spread2 needs d >= 1");
  return make(d, 2, ak_value(d), Rule::AkSpread2);
}

BoundPtr bound_singleton(int d, int k) {
  if (k < 1 || k % 2 == 0) precondition("singleton bound needs odd k, got k = " + std::to_string(k));
  if (!singleton_applies(d, k))
    precondition("singleton bound needs floor(2d/(k+1)) >= 2, got " + std::to_string(2 * d / (k + 1)));
  return make(d, k, singleton_value(d, k), Rule::Singleton);
}

BoundPtr bound_lemma1(int d, int k) {
  if (!lemma1_applies(d, k))
    precondition("lemma1 needs k >= 2 and d >= (k+2)^2 = " + std::to_string((k + 2) * (k + 2)));
  return make(d, k, normalize(BigInt(2) * (d - 1) * k + 2, d), Rule::Lemma1);
}

BoundPtr bound_monotone_k(BoundPtr higher) {
  if (!higher) precondition("monotone-k needs a sub-bound");
  if (higher->s) precondition("monotone-k needs a bound on K(d, k+1)");
  if (higher->k < 2) precondition("monotone-k needs a sub-bound with k >= 2");
  return make(higher->d, higher->k - 1, higher->value, Rule::MonotoneK, {higher});
}

BoundPtr bound_monotone_d(BoundPtr lower) {
  if (!lower) precondition("monotone-d needs a sub-bound");
  if (lower->s) precondition("monotone-d needs a bound on K(d-1, k)");
  return make(lower->d + 1, lower->k, normalize(lower->value, lower->d + 1), Rule::MonotoneD, {lower});
}

BoundPtr bound_lemma2(BoundPtr base, int s) {
  if (!base) precondition("lemma2-divis needs a sub-bound");
  if (base->s) precondition("lemma2-divis needs a bound on K(d, k)");
  if (!lemma2_applies(base->d, base->k, s))
    precondition("lemma2-divis needs k >= 2, d >= (k+2)^2 and k <= s <= d");
  auto r = std::make_shared<BoundRecord>();
  r->d = base->d + 1;
  r->k = base->k;
  r->s = s;
  r->value = base->value;
  r->rule = Rule::Lemma2Divis;
  r->children = {base};
  return r;
}

BoundPtr bound_klee(int m, int n, int k, BoundPtr sub_m, BoundPtr sub_n) {
  if (k < 2 || k % 2 != 0) precondition("klee-product needs even k >= 2, got k = " + std::to_string(k));
  if (m < (k + 2) * (k + 2) || m > n)
    precondition("klee-product needs (k+2)^2 <= m <= n, got m = " + std::to_string(m) + ", n = " +
                 std::to_string(n));
  if (!sub_m || !sub_n || sub_m->s || sub_n->s || sub_m->d != m || sub_m->k != k - 1 || sub_n->d != n ||
      sub_n->k != k)
    precondition("klee-product sub-bounds must be K(m, k-1) and K(n, k)");
  const int d = m + n + 2;
  auto divis = bound_lemma2(sub_m, k);
  return make(d, k, klee_value(sub_m->value, sub_n->value, k, d), Rule::KleeProduct, {divis, sub_n});
}

int pn_dimension(int i, int k) { return (1 << i) + 2 * i + 5 * k - 4; }

BoundPtr bound_pn(int i, int k, int c) {
  if (i < 1 || k < 1 || c < 0) precondition("pn-doubling needs i >= 1, k >= 1, c >= 0");
  if (i > 24) precondition("pn-doubling index too large");
  const long long e = pn_exponent(i, k, c);
  if (e < 0)
    fail(ErrorKind::NegativeExponent, "exponent " + std::to_string(e) + " for i = " + std::to_string(i) +
                                          ", k = " + std::to_string(k) + ", c = " + std::to_string(c));
  const int d = pn_dimension(i, k);
  auto r = std::make_shared<BoundRecord>();
  r->d = d;
  r->k = k;
  r->value = normalize(BigInt(2) * (pow2(static_cast<int>(e)) + k), d);
  r->rule = Rule::PnDoubling;
  r->pn_index = i;
  r->pn_constant = c;
  return r;
}

double pn_exponent_ratio(int i, int k, int c) {
  return static_cast<double>(pn_exponent(i, k, c)) / static_cast<double>(pn_dimension(i, k));
}

// ---------------------------------------------------------------------------

BoundEngine::BoundEngine(int max_d, int max_k, BaseTable base, EngineOptions opts)
    : max_d_(max_d), max_k_(max_k), base_(std::move(base)), opts_(opts) {
  if (max_d < 1 || max_k < 1) precondition("engine limits must be >= 1");
  for (const auto& [key, value] : base_) bound_exact(key.first, key.second, value); // validates entries
  memo_.resize(static_cast<std::size_t>(max_d_ + 1) * static_cast<std::size_t>(max_k_ + 2));
  // Dependencies: (d, k+1), (d-1, k) and klee factors of smaller d.
  for (int d = 1; d <= max_d_; ++d) {
    for (int k = max_k_; k >= 1; --k) {
      memo_[static_cast<std::size_t>(d) * static_cast<std::size_t>(max_k_ + 2) + static_cast<std::size_t>(k)] =
          compute(d, k);
    }
  }
}

const BoundPtr& BoundEngine::at(int d, int k) const {
  return memo_[static_cast<std::size_t>(d) * static_cast<std::size_t>(max_k_ + 2) + static_cast<std::size_t>(k)];
}

BoundPtr BoundEngine::best(int d, int k) const {
  if (d < 1 || d > max_d_ || k < 1 || k > max_k_)
    fail(ErrorKind::OutOfRange, "(" + std::to_string(d) + "," + std::to_string(k) + ") outside the engine table");
  return at(d, k);
}

BoundPtr BoundEngine::compute(int d, int k) const {
  BoundPtr best;
  // Strictly larger values win; on equal values the earlier rule (and the
  // earlier klee split) is kept because candidates arrive in rule order.
  auto offer = [&](BoundPtr cand) {
    if (opts_.excluded.contains(cand->rule)) return;
    if (!best || cand->value > best->value) best = std::move(cand);
  };

  if (auto it = base_.find({d, k}); it != base_.end()) offer(bound_exact(d, k, it->second));
  if (k == 1) offer(bound_trivial_gray(d));
  if (k == 2) offer(bound_ak_spread2(d));
  if (singleton_applies(d, k)) offer(bound_singleton(d, k));
  if (lemma1_applies(d, k)) offer(bound_lemma1(d, k));
  if (k < max_k_) {
    if (const auto& up = at(d, k + 1); up->value > 0) offer(bound_monotone_k(up));
  }
  if (d > 1) {
    if (const auto& down = at(d - 1, k); down->value > 0) offer(bound_monotone_d(down));
  }
  if (k >= 2 && k % 2 == 0 && !opts_.excluded.contains(Rule::Lemma2Divis)) {
    const int lo = (k + 2) * (k + 2);
    for (int m = lo; 2 * m <= d - 2; ++m) {
      const int n = d - 2 - m;
      const auto& sm = at(m, k - 1);
      const auto& sn = at(n, k);
      if (sm->value > 0 && sn->value > 0) offer(bound_klee(m, n, k, sm, sn));
    }
  }
  if (opts_.pn_constant) {
    for (int i = 1; i <= 24 && pn_dimension(i, k) <= d; ++i) {
      if (pn_dimension(i, k) == d && pn_exponent(i, k, *opts_.pn_constant) >= 0)
        offer(bound_pn(i, k, *opts_.pn_constant));
    }
  }
  if (!best) best = make(d, k, 0, Rule::None);
  return best;
}

BoundPtr best_lower_bound(int d, int k, const BaseTable& base, EngineOptions opts) {
  if (d < 1 || k < 1) precondition("best_lower_bound needs d >= 1 and k >= 1");
  int max_k = std::max(k, d);
  for (const auto& [key, value] : base) max_k = std::max(max_k, key.second);
  int max_d = d;
  BaseTable relevant;
  for (const auto& [key, value] : base)
    if (key.first <= max_d) relevant.emplace(key, value);
  return BoundEngine(max_d, max_k + 1, std::move(relevant), opts).best(d, k);
}

// ---------------------------------------------------------------------------

namespace {

bool check_node(const BoundRecord& r, std::string& why) {
  auto bad = [&](const std::string& msg) {
    why = std::string(to_string(r.rule)) + " at (" + std::to_string(r.d) + "," + std::to_string(r.k) + "): " + msg;
    return false;
  };
  if (r.d < 1 || r.k < 1) return bad("d and k must be >= 1");
  if (r.value < 0 || r.value > pow2(r.d)) return bad("value outside [0, 2^d]");
  if (r.value % 2 != 0) return bad("odd value");
  if (r.s && r.rule != Rule::Lemma2Divis) return bad("divisor only allowed on lemma2-divis");

  const auto child = [&](std::size_t i) -> const BoundRecord& { return *r.children[i]; };
  const std::size_t want_children = [&]() -> std::size_t {
    switch (r.rule) {
    case Rule::MonotoneK:
    case Rule::MonotoneD:
    case Rule::Lemma2Divis: return 1;
    case Rule::KleeProduct: return 2;
    default: return 0;
    }
  }();
  if (r.children.size() != want_children) return bad("wrong number of children");
  for (const auto& c : r.children)
    if (!c) return bad("null child");

  switch (r.rule) {
  case Rule::ExactOracle: return true;
  case Rule::TrivialGray:
    return r.k == 1 && r.value == pow2(r.d) ? true : bad("needs k = 1 and value 2^d");
  case Rule::AkSpread2:
    return r.k == 2 && r.value == ak_value(r.d) ? true : bad("needs k = 2 and value floor(0.3 * 2^d) (even)");
  case Rule::Singleton:
    if (!singleton_applies(r.d, r.k)) return bad("needs odd k and floor(2d/(k+1)) >= 2");
    return r.value == singleton_value(r.d, r.k) ? true : bad("value mismatch");
  case Rule::Lemma1:
    if (!lemma1_applies(r.d, r.k)) return bad("needs k >= 2 and d >= (k+2)^2");
    return r.value == normalize(BigInt(2) * (r.d - 1) * r.k + 2, r.d) ? true : bad("value mismatch");
  case Rule::MonotoneK:
    if (child(0).s || child(0).d != r.d || child(0).k != r.k + 1) return bad("child must be K(d, k+1)");
    return r.value <= child(0).value ? true : bad("value exceeds child");
  case Rule::MonotoneD:
    if (child(0).s || child(0).d != r.d - 1 || child(0).k != r.k) return bad("child must be K(d-1, k)");
    return r.value <= child(0).value ? true : bad("value exceeds child");
  case Rule::Lemma2Divis:
    if (!r.s) return bad("missing divisor");
    if (child(0).s || child(0).d != r.d - 1 || child(0).k != r.k) return bad("child must be K(d-1, k)");
    if (!lemma2_applies(child(0).d, child(0).k, *r.s)) return bad("preconditions of the divisibility lemma fail");
    return r.value <= child(0).value ? true : bad("value exceeds child");
  case Rule::KleeProduct: {
    const auto& divis = child(0);
    const auto& sn = child(1);
    if (r.k % 2 != 0) return bad("needs even k");
    if (divis.rule != Rule::Lemma2Divis || !divis.s || *divis.s != r.k || divis.k != r.k - 1)
      return bad("first child must be K(m+1, k-1, k)");
    const int m = divis.d - 1;
    const int n = sn.d;
    if (sn.s || sn.k != r.k) return bad("second child must be K(n, k)");
    if (m < (r.k + 2) * (r.k + 2) || m > n || r.d != m + n + 2) return bad("needs (k+2)^2 <= m <= n, d = m+n+2");
    return r.value <= klee_value(divis.value, sn.value, r.k, r.d) ? true : bad("value exceeds product / k");
  }
  case Rule::PnDoubling: {
    if (!r.pn_index || !r.pn_constant) return bad("missing parameters");
    const int i = *r.pn_index, c = *r.pn_constant;
    if (pn_dimension(i, r.k) != r.d) return bad("d is not d_i");
    const long long e = pn_exponent(i, r.k, c);
    if (e < 0) return bad("negative exponent");
    return r.value == normalize(BigInt(2) * (pow2(static_cast<int>(e)) + r.k), r.d) ? true : bad("value mismatch");
  }
  case Rule::None: return r.value == 0 ? true : bad("none must have value 0");
  }
  return bad("unknown rule");
}

bool validate_rec(const BoundRecord& r, std::string& why, std::unordered_set<const BoundRecord*>& seen) {
  if (!seen.insert(&r).second) return true;
  for (const auto& c : r.children)
    if (c && !validate_rec(*c, why, seen)) return false;
  return check_node(r, why);
}

} // namespace

bool validate(const BoundRecord& record, std::string* why) {
  std::string msg;
  std::unordered_set<const BoundRecord*> seen;
  const bool ok = validate_rec(record, msg, seen);
  if (why) *why = msg;
  return ok;
}

double log2_value(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const auto e = static_cast<long>(boost::multiprecision::msb(v));
  if (e <= 52) return std::log2(v.convert_to<double>());
  const BigInt top = v >> static_cast<unsigned>(e - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(e - 52);
}

// ---------------------------------------------------------------------------

long long default_offset(int k) noexcept { return 5LL * k - 4; }

long long Decomposition::component(int i) const { return (1LL << i) + 2LL * i + offset; }

Decomposition decompose(long long d, int k, std::optional<long long> offset) {
  if (d < 1) precondition("decompose needs d >= 1");
  Decomposition dec;
  dec.d = d;
  dec.k = k;
  dec.offset = offset.value_or(default_offset(k));
  // Greedy is exact when d_{i+1} < 2 d_i, i.e. 2i + offset > 2 for all i >= 1.
  if (dec.offset < 1) precondition("offset must be >= 1, got " + std::to_string(dec.offset));

  int top = 0;
  while (top < 60 && dec.component(top + 1) <= d) ++top;
  dec.max_index = top;
  long long rest = d;
  for (int i = top; i >= 1; --i) {
    if (dec.component(i) <= rest) {
      rest -= dec.component(i);
      dec.indices.push_back(i);
    }
  }
  std::reverse(dec.indices.begin(), dec.indices.end());
  dec.remainder = rest;
  return dec;
}

// ---------------------------------------------------------------------------

SuperadditivityReport superadditivity_check(int k, const std::map<int, BigInt>& exact) {
  if (k < 2 || k % 2 != 0) precondition("superadditivity check needs even k >= 2");
  SuperadditivityReport rep;
  rep.k = k;
  for (const auto& [dim, value] : exact) {
    if (value <= 0) precondition("table values must be positive");
    rep.table.push_back({dim + 3, value, log2_value(value) - std::log2(static_cast<double>(k))});
  }
  const int lo = (k + 2) * (k + 2) + 3;
  for (const auto& [dm, km] : exact) {
    const int m = dm + 3;
    if (m < lo) continue;
    for (auto it = exact.find(dm); it != exact.end(); ++it) {
      const int n = it->first + 3;
      const auto sum = exact.find(m + n - 3);
      if (sum == exact.end()) continue;
      ++rep.pairs_checked;
      if (km * it->second > BigInt(k) * sum->second) rep.violations.emplace_back(m, n);
    }
  }
  if (rep.pairs_checked == 0)
    fail(ErrorKind::InsufficientData, "no pair m <= n with m >= " + std::to_string(lo) +
                                          " has K(m-3), K(n-3) and K(m+n-3) in the table");
  return rep;
}

} // namespace circuit::bounds
