// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circuit/bounds.hpp"
#include "circuit/constructions.hpp"
#include "circuit/search.hpp"
#include "circuit/spread.hpp"
#include "cli.hpp"
#include "naive_search.hpp"

using namespace circuit;
namespace b = circuit::bounds;
namespace cs = circuit::construct;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<bool(std::string&)> body;
};

search::Options collect() {
  search::Options o;
  o.collect_all = true;
  return o;
}

b::BigInt even_floor_three_tenths(int d) {
  b::BigInt v = b::pow2(d) * 3 / 10;
  return v - v % 2;
}

// AC1
bool gray(std::string& note) {
  for (int d = 2; d <= 4; ++d) {
    const auto r = search::max_cycle(d, 1);
    if (!r.exhausted || r.best_length != (1L << d)) {
      note = "K(" + std::to_string(d) + ",1) = " + std::to_string(r.best_length);
      return false;
    }
  }
  note = "K(2,1)=4 K(3,1)=8 K(4,1)=16";
  return true;
}

// AC2
bool spread_two(std::string& note) {
  const long expected[] = {0, 0, 0, 6, 8, 14, 26};
  std::ostringstream ss;
  for (int d = 3; d <= 6; ++d) {
    const auto r = search::max_cycle(d, 2, collect());
    ss << "K(" << d << ",2)=" << r.best_length << " ";
    if (!r.exhausted || r.best_length != expected[d]) {
      note = ss.str() + "mismatch";
      return false;
    }
    if (b::BigInt(r.best_length) < even_floor_three_tenths(d)) {
      note = ss.str() + "below 3/10 * 2^d";
      return false;
    }
    if (d <= 4) {
      const auto naive = oracle::naive_cycle(d, 2);
      std::set<oracle::Seq> fast;
      for (const auto& t : r.optimal_sequences) fast.emplace(t.symbols().begin(), t.symbols().end());
      if (naive.length != r.best_length || naive.canonical != fast) {
        note = ss.str() + "naive enumerator disagrees";
        return false;
      }
    }
  }
  note = ss.str() + "(naive agrees for d<=4)";
  return true;
}

// AC3
bool padding(std::string& note) {
  long runs = 0;
  for (int k : {2, 3}) {
    for (int d = k; d <= 5; ++d) {
      const auto r = search::max_cycle(d, k, collect());
      if (!r.exhausted) {
        note = "search not exhausted";
        return false;
      }
      for (const auto& base : r.optimal_sequences) {
        for (const auto& orient : {base, base.reversed()}) {
          for (std::size_t rot = 0; rot < orient.size(); ++rot) {
            const auto t = orient.rotated(rot);
            const long n = static_cast<long>(t.size());
            for (int s = k; s <= d; ++s) {
              const long q = (n / 2) / s;
              const long rem = (n / 2) % s;
              const long p = rem == 0 ? 0 : s - rem;
              if (p * k > n / 2) continue;
              const auto out = cs::pad_to_divisible(t, k, s, cs::Options{false});
              const long want = rem == 0 ? n : 2 * (q + 1) * s;
              if (!verify_spread(out, k).holds || static_cast<long>(out.size()) != want ||
                  out.dimension() != d + 1) {
                note = "failure on " + t.to_string() + " s=" + std::to_string(s);
                return false;
              }
              ++runs;
            }
          }
        }
      }
    }
  }
  note = std::to_string(runs) + " padded cycles checked";
  return true;
}

// AC4
bool doubling(std::string& note) {
  long runs = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int d = 1; d <= 5; ++d) {
      // Spread-1 paths at d=5 are Hamiltonian paths of I(5), far too many to
      // list; there the search's reported optimum is doubled instead.
      const bool all = !(k == 1 && d == 5);
      const auto r = search::max_path(d, k, all ? collect() : search::Options{});
      if (!r.exhausted || !r.best_sequence) {
        note = "search not exhausted";
        return false;
      }
      const auto paths = all ? r.optimal_sequences : std::vector<TransitionSequence>{*r.best_sequence};
      for (const auto& path : paths) {
        const auto c = cs::double_path_to_cycle(path, k, cs::Options{false});
        if (!verify_spread(c, k).holds || c.size() != 2 * (path.size() + static_cast<std::size_t>(k))) {
          note = "failure on " + path.to_string();
          return false;
        }
        ++runs;
      }
    }
  }
  note = std::to_string(runs) + " doubled paths checked (d=5, k=1: reported optimum only)";
  return true;
}

// AC5
bool soundness(std::string& note) {
  b::BaseTable exact;
  for (int d = 1; d <= 5; ++d)
    for (int k = 1; k <= 5; ++k) exact[{d, k}] = search::max_cycle(d, k).best_length;
  exact[{6, 2}] = search::max_cycle(6, 2).best_length;
  exact[{6, 3}] = search::max_cycle(6, 3).best_length;
  const b::BoundEngine engine(20, 21);
  for (const auto& [key, v] : exact) {
    if (engine.best(key.first, key.second)->value > v) {
      note = "bound exceeds K(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
      return false;
    }
  }
  for (int d = 1; d <= 20; ++d) {
    if (engine.best(d, 1)->value != b::pow2(d)) {
      note = "K(" + std::to_string(d) + ",1) bound is not 2^d";
      return false;
    }
  }
  note = std::to_string(exact.size()) + " exact values dominate their bounds; gray exact for d<=20";
  return true;
}

// AC6
bool klee(std::string& note) {
  const auto direct = b::bound_klee(16, 16, 2, b::bound_trivial_gray(16), b::bound_lemma1(16, 2));
  b::EngineOptions opts;
  opts.excluded = {b::Rule::AkSpread2, b::Rule::Singleton};
  const auto engine = b::best_lower_bound(34, 2, {}, opts);
  const auto full = b::best_lower_bound(34, 2);
  const bool ok = direct->value == 2031616 && engine->value == 2031616 && engine->rule == b::Rule::KleeProduct &&
                  engine->children[1]->rule == b::Rule::Lemma1 && engine->children[1]->value == 62 &&
                  b::validate(*engine) && full->value >= 2031616;
  note = "klee-product " + engine->value.str() + " (full rule set: " + full->value.str() + " via " +
         std::string(b::to_string(full->rule)) + ")";
  return ok;
}

// AC7
bool decomposition(std::string& note) {
  long checked = 0;
  for (int k : {2, 4}) {
    for (long long off : {5LL * k - 4, 5LL * k - 1}) {
      const long long d1 = 2 + 2 + off;
      for (long long d = 1; d <= 1'000'000; ++d) {
        const auto dec = b::decompose(d, k, off);
        long long sum = dec.remainder;
        for (std::size_t i = 0; i < dec.indices.size(); ++i) {
          if (i && dec.indices[i] <= dec.indices[i - 1]) return note = "indices repeat", false;
          sum += (1LL << dec.indices[i]) + 2LL * dec.indices[i] + off;
        }
        if (sum != d || dec.remainder < 0 || dec.remainder >= d1) {
          note = "d=" + std::to_string(d) + " k=" + std::to_string(k) + " offset=" + std::to_string(off);
          return false;
        }
        ++checked;
      }
    }
  }
  note = std::to_string(checked) + " decompositions reconstructed";
  return true;
}

// AC8
bool asymptotic_substitute(std::string& note) {
  for (int k : {1, 2})
    for (int c : {0, 5, 10})
      for (int i = 5; i < 20; ++i)
        if (!(b::pn_exponent_ratio(i + 1, k, c) > b::pn_exponent_ratio(i, k, c))) {
          note = "ratio not increasing at i=" + std::to_string(i);
          return false;
        }

  // Synthetic tables built to satisfy K(m-3)K(n-3) <= k K(m+n-3).
  int tables = 0;
  for (int k : {2, 4}) {
    const int lo = (k + 2) * (k + 2);
    for (int slope : {1, 2, 3}) {
      std::map<int, b::BigInt> t;
      // 2^(floor(x/slope)+1): floor(a)+floor(b) <= floor(a+b) keeps the product within a factor 2
      for (int d = lo; d <= 3 * lo; ++d) t[d] = b::pow2(d / slope + 1);
      if (!b::superadditivity_check(k, t).violations.empty()) {
        note = "false violation on synthetic table";
        return false;
      }
      ++tables;
    }
  }
  std::map<int, b::BigInt> planted;
  for (int d = 16; d <= 40; ++d) planted[d] = b::pow2(d);
  planted[35] = 1000;
  const auto rep = b::superadditivity_check(2, planted);
  const bool flagged = rep.violations == std::vector<std::pair<int, int>>{{19, 19}};
  note = "pn ratio increasing for i=5..20; " + std::to_string(tables) + " clean tables, planted violation " +
         (flagged ? "flagged at (19,19)" : "missed");
  return flagged;
}

// AC9
bool determinism(std::string& note) {
  const std::vector<std::vector<std::string>> cmds = {
      {"search", "cycle", "-d", "5", "-k", "2"},
      {"search", "cycle", "-d", "5", "-k", "2", "--jobs", "4"},
      {"search", "cycle", "-d", "6", "-k", "2", "--jobs", "3"},
      {"search", "cycle", "-d", "5", "-k", "2", "-s", "3", "--jobs", "2"},
      {"search", "path", "-d", "5", "-k", "2", "--jobs", "4"},
      {"search", "cycle", "-d", "6", "-k", "2", "--budget", "5000", "--jobs", "4"},
      {"bounds", "table", "-d", "30", "-k", "4"},
      {"bounds", "best", "-d", "120", "-k", "4"},
      {"bounds", "best", "-d", "34", "-k", "2", "-c", "0"},
      {"bounds", "decompose", "-d", "1000000", "-k", "2"},
      {"bounds", "pn", "-i", "6", "-k", "2", "-c", "3"},
  };
  const std::regex stamp("\"timestamp\": \"[^\"]*\"");
  auto result_of = [](const std::string& json) { return json.substr(json.find("\"result\"")); };
  std::vector<std::string> results;
  for (auto c : cmds) {
    c.push_back("--format");
    c.push_back("json");
    std::string outs[2];
    for (auto& o : outs) {
      std::ostringstream out, err;
      if (circuit::cli::run(c, out, err) != 0) {
        note = "command failed: " + err.str();
        return false;
      }
      o = std::regex_replace(out.str(), stamp, "");
    }
    if (outs[0] != outs[1]) {
      note = "outputs differ for " + c[0] + " " + c[1];
      return false;
    }
    results.push_back(result_of(outs[0]));
  }
  if (results[0] != results[1]) {
    note = "--jobs changes the search result";
    return false;
  }
  note = std::to_string(cmds.size()) + " commands byte-identical across runs; jobs 1 and 4 agree";
  return true;
}

} // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "gray exactness", 60, gray},
      {2, "spread-2 exact table d=3..6", 3600, spread_two},
      {3, "divisibility padding property", 600, padding},
      {4, "path doubling property", 600, doubling},
      {5, "bound engine soundness", 600, soundness},
      {6, "klee-product arithmetic at d=34", 60, klee},
      {7, "decomposition totality", 60, decomposition},
      {8, "pn exponent growth and superadditivity diagnostic", 60, asymptotic_substitute},
      {9, "deterministic JSON output", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      note += " (over time limit)";
    }
    std::printf("AC%d %s: %s [%.2fs] %s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs, note.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
