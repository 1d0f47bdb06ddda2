#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "circuit/bounds.hpp"
#include "circuit/constructions.hpp"
#include "circuit/error.hpp"
#include "circuit/search.hpp"
#include "circuit/spread.hpp"
#include "circuit/text_format.hpp"
#include "json_io.hpp"

#ifndef CIRCUIT_VERSION
#define CIRCUIT_VERSION "0.0.0"
#endif

namespace circuit::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

const char* format_name(Format f) {
  switch (f) {
  case Format::Text: return "text";
  case Format::Json: return "json";
  case Format::Csv: return "csv";
  }
  return "text";
}

Format default_format() {
  const char* env = std::getenv("CIRCUITCODE_FORMAT");
  if (!env) return Format::Text;
  const std::string v(env);
  if (v == "json") return Format::Json;
  if (v == "csv") return Format::Csv;
  return Format::Text;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse:
  case ErrorKind::InvalidSequence:
  case ErrorKind::NotClosed:
  case ErrorKind::LengthMismatch:
  case ErrorKind::OutOfRange:
  case ErrorKind::DimensionTooLarge: return kExitInput;
  default: return kExitDomain;
  }
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

Json config_json(const RunConfig& cfg) {
  return Json{{"subcommand", cfg.subcommand},
              {"action", cfg.action},
              {"input", cfg.input},
              {"output", cfg.output},
              {"d", opt(cfg.d)},
              {"k", opt(cfg.k)},
              {"s", opt(cfg.s)},
              {"c", opt(cfg.c)},
              {"offset", opt(cfg.offset)},
              {"index", opt(cfg.index)},
              {"base_table", cfg.base_table},
              {"budget", cfg.budget},
              {"verify_after_construct", cfg.reverify},
              {"format", format_name(cfg.format)},
              {"jobs", cfg.jobs},
              {"excluded_rules", cfg.excluded_rules}};
}

void emit_json(std::ostream& out, const RunConfig& cfg, Json result) {
  Json doc{{"tool", kToolName},
           {"version", CIRCUIT_VERSION},
           {"timestamp", utc_timestamp()},
           {"config", config_json(cfg)},
           {"result", std::move(result)}};
  out << doc.dump(2) << '\n';
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) fail(ErrorKind::Parse, std::string("missing required option ") + flag);
  return *v;
}

std::string witness_text(const Witness& w, int k) {
  std::ostringstream ss;
  ss << "(" << w.i << "," << w.j << "): hamming " << w.hamming << " < " << std::min(w.code_distance, k)
     << " (x=" << w.x.to_string() << ", y=" << w.y.to_string() << ", code distance " << w.code_distance << ")";
  return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto file = read_code_file(cfg.input);
  const auto& seq = file.sequence;
  const int k = cfg.k.value_or(file.claimed_spread);
  const auto walk = expand(seq);

  if (k <= 0) {
    const auto report = max_spread(walk);
    if (cfg.format == Format::Json) {
      emit_json(out, cfg, Json{{"code", to_json(seq)}, {"max_spread", to_json(report)}});
    } else {
      out << to_string(seq.topology()) << " of length " << seq.size() << " in dimension " << seq.dimension()
          << ": max spread " << report.max_spread << (report.unbounded ? " (unbounded)" : "") << '\n';
      if (report.witness) out << "spread " << report.max_spread + 1 << " fails at " << witness_text(*report.witness, report.max_spread + 1) << '\n';
    }
    return kExitOk;
  }

  const auto check = verify_spread(walk, k);
  if (cfg.format == Format::Json) {
    emit_json(out, cfg, Json{{"code", to_json(seq)}, {"check", to_json(check)}});
  } else if (check.holds) {
    out << "spread " << k << " holds for " << to_string(seq.topology()) << " of length " << seq.size()
        << " in dimension " << seq.dimension() << '\n';
  } else {
    out << "spread " << k << " fails: " << witness_text(*check.witness, k) << '\n';
  }
  return check.holds ? kExitOk : kExitDomain;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto file = read_code_file(cfg.input);
  const auto& in = file.sequence;
  construct::Options opts{cfg.reverify};
  std::ostringstream notes;
  Json details = Json::object();
  std::optional<TransitionSequence> result;
  int claimed = cfg.k.value_or(file.claimed_spread);

  if (cfg.action == "embed") {
    const int d = require(cfg.d, "-d");
    result = construct::embed(in, d);
    notes << "embed: d " << in.dimension() << " -> " << d << ", N=" << in.size() << " unchanged\n";
    details = Json{{"from_dimension", in.dimension()}, {"to_dimension", d}};
  } else {
    if (claimed < 1) fail(ErrorKind::Parse, "spread k unknown: pass -k or claim it in the file header");
    if (cfg.action == "pad") {
      const int s = require(cfg.s, "-s");
      const auto plan = construct::plan_padding(static_cast<long>(in.size()), in.dimension(), claimed, s);
      result = construct::pad_to_divisible(in, claimed, s, opts);
      notes << "N=" << plan.n << " N/2=" << plan.n / 2 << " k=" << claimed << " s=" << s << " q=" << plan.q
            << " r=" << plan.r << " p=" << plan.p;
      if (plan.trivial())
        notes << ": s divides N/2, trivial embedding, length " << result->size() << "\n";
      else
        notes << ": length " << result->size() << " = 2(q+1)s = " << 2 * (plan.q + 1) * s << ", d="
              << result->dimension() << "\n";
      details = Json{{"N", plan.n}, {"k", claimed},       {"s", s},           {"q", plan.q},
                     {"r", plan.r}, {"p", plan.p},        {"trivial", plan.trivial()},
                     {"cut_points", plan.cut_points}, {"length", result->size()}};
    } else {
      result = construct::double_path_to_cycle(in, claimed, opts);
      notes << "|T_P|=" << in.size() << " k=" << claimed << ": length " << result->size()
            << " = 2(N+k) = " << 2 * (in.size() + static_cast<std::size_t>(claimed)) << ", d=" << result->dimension()
            << "\n";
      details = Json{{"N", in.size()}, {"k", claimed}, {"length", result->size()}};
    }
  }

  if (!cfg.output.empty()) write_code_file(cfg.output, *result, claimed);
  if (cfg.format == Format::Json) {
    emit_json(out, cfg, Json{{"mode", cfg.action}, {"arithmetic", details}, {"code", to_json(*result)},
                             {"claimed_spread", claimed}, {"verified", cfg.reverify}});
  } else {
    out << notes.str();
    if (cfg.output.empty()) out << format_code(*result, claimed);
    else out << "wrote " << cfg.output << '\n';
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const int d = require(cfg.d, "-d");
  const int k = require(cfg.k, "-k");
  search::Options opts;
  opts.budget = cfg.budget;
  opts.jobs = cfg.jobs;
  search::SearchResult res;
  if (cfg.action == "path") {
    if (cfg.s) fail(ErrorKind::Parse, "-s only applies to cycle searches");
    res = search::max_path(d, k, opts);
  } else if (cfg.s) {
    res = search::max_cycle_divisible(d, k, *cfg.s, opts);
  } else {
    res = search::max_cycle(d, k, opts);
  }

  if (!cfg.output.empty() && res.best_sequence) write_code_file(cfg.output, *res.best_sequence, k);
  if (cfg.format == Format::Json) {
    emit_json(out, cfg, to_json(res));
  } else {
    out << cfg.action << " d=" << d << " k=" << k;
    if (cfg.s) out << " s=" << *cfg.s;
    out << ": best " << res.best_length << (res.exhausted ? ", exhausted" : ", not exhausted (exhausted=false)")
        << ", nodes " << res.nodes_expanded << '\n';
    if (res.best_sequence) out << "sequence " << res.best_sequence->to_string() << '\n';
    if (!cfg.output.empty() && res.best_sequence) out << "wrote " << cfg.output << '\n';
  }
  return kExitOk;
}

void print_tree(std::ostream& out, const bounds::BoundRecord& r, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << "K(" << r.d << "," << r.k;
  if (r.s) out << "," << *r.s;
  out << ") >= " << r.value.str() << "  [" << bounds::to_string(r.rule);
  if (r.pn_index) out << " i=" << *r.pn_index << " c=" << *r.pn_constant;
  out << "]\n";
  for (const auto& c : r.children) print_tree(out, *c, indent + 1);
}

std::string log2_text(const bounds::BigInt& v) {
  const double l = bounds::log2_value(v);
  if (std::isinf(l)) return "-inf";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(6) << l;
  return ss.str();
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  bounds::EngineOptions eopts;
  eopts.pn_constant = cfg.c;
  for (const auto& name : cfg.excluded_rules) {
    bool known = false;
    for (int r = 0; r <= static_cast<int>(bounds::Rule::None); ++r) {
      if (bounds::to_string(static_cast<bounds::Rule>(r)) == name) {
        eopts.excluded.insert(static_cast<bounds::Rule>(r));
        known = true;
      }
    }
    if (!known) fail(ErrorKind::Parse, "unknown rule '" + name + "'");
  }
  bounds::BaseTable base;
  if (!cfg.base_table.empty()) base = read_base_table(cfg.base_table);
  int table_k = 0;
  for (const auto& [key, v] : base) table_k = std::max(table_k, key.second);

  if (cfg.action == "table" || cfg.action == "best") {
    const int d = require(cfg.d, "-d");
    const int k = require(cfg.k, "-k");
    if (d < 1 || k < 1) fail(ErrorKind::PreconditionFailed, "-d and -k must be >= 1");
    bounds::BaseTable relevant;
    for (const auto& [key, v] : base)
      if (key.first <= d) relevant.emplace(key, v);
    const bounds::BoundEngine engine(d, std::max({k, d, table_k}) + 1, relevant, eopts);

    if (cfg.action == "best") {
      const auto rec = engine.best(d, k);
      if (cfg.format == Format::Json) {
        emit_json(out, cfg, Json{{"log2_value", bounds::log2_value(rec->value)}, {"bound", to_json(*rec)}});
      } else {
        out << "K(" << d << "," << k << ") >= " << rec->value.str() << "  (log2 " << log2_text(rec->value)
            << ", rule " << bounds::to_string(rec->rule) << ")\n";
        print_tree(out, *rec, 1);
      }
      return kExitOk;
    }

    if (cfg.format == Format::Json) {
      Json rows = Json::array();
      for (int dd = 1; dd <= d; ++dd)
        for (int kk = 1; kk <= k; ++kk) rows.push_back(to_json(*engine.best(dd, kk)));
      emit_json(out, cfg, Json{{"records", rows}});
    } else {
      out << "d,k,value,log2_value,rule\n";
      for (int dd = 1; dd <= d; ++dd) {
        for (int kk = 1; kk <= k; ++kk) {
          const auto rec = engine.best(dd, kk);
          out << dd << ',' << kk << ',' << rec->value.str() << ',' << log2_text(rec->value) << ','
              << bounds::to_string(rec->rule) << '\n';
        }
      }
    }
    return kExitOk;
  }

  if (cfg.action == "decompose") {
    const int d = require(cfg.d, "-d");
    const int k = require(cfg.k, "-k");
    const auto dec = bounds::decompose(d, k, cfg.offset);
    if (cfg.format == Format::Json) {
      emit_json(out, cfg, to_json(dec));
    } else {
      out << "d=" << dec.d << " k=" << dec.k << " offset=" << dec.offset << " H=" << dec.max_index << ": p="
          << dec.remainder << ", i∈{";
      for (std::size_t i = 0; i < dec.indices.size(); ++i) out << (i ? "," : "") << dec.indices[i];
      out << "}\n";
      for (int i : dec.indices) out << "  d_" << i << " = " << dec.component(i) << '\n';
    }
    return kExitOk;
  }

  if (cfg.action == "pn") {
    const int i = require(cfg.index, "-i");
    const int k = require(cfg.k, "-k");
    const int c = require(cfg.c, "-c");
    const auto rec = bounds::bound_pn(i, k, c);
    const double ratio = bounds::pn_exponent_ratio(i, k, c);
    if (cfg.format == Format::Json) {
      emit_json(out, cfg, Json{{"exponent_ratio", ratio}, {"bound", to_json(*rec)}});
    } else {
      out << "pn i=" << i << " k=" << k << " c=" << c << ": d_i=" << rec->d << ", K(" << rec->d << "," << k
          << ") >= " << rec->value.str() << " (exponent ratio " << std::setprecision(6) << ratio << ")\n";
    }
    return kExitOk;
  }

  // superadd
  const int k = require(cfg.k, "-k");
  if (cfg.input.empty()) fail(ErrorKind::Parse, "superadd needs --table FILE");
  const auto rep = bounds::superadditivity_check(k, read_spread_table(cfg.input));
  if (cfg.format == Format::Json) {
    emit_json(out, cfg, to_json(rep));
  } else {
    out << "k=" << k << ": " << rep.pairs_checked << " pairs checked, " << rep.violations.size() << " violations\n";
    for (const auto& [m, n] : rep.violations)
      out << "  violation (m,n)=(" << m << "," << n << "): K(" << m - 3 << ")K(" << n - 3 << ") > " << k << "K("
          << m + n - 3 << ")\n";
  }
  return rep.violations.empty() ? kExitOk : kExitDomain;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit codes of spread k: verify, construct, search and bound", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + CIRCUIT_VERSION);

  RunConfig cfg;
  cfg.format = default_format();
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format (text, json, csv)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* verify = app.add_subcommand("verify", "Check the spread property of a code file");
  verify->add_option("file", cfg.input, "Code file")->required();
  verify->add_option("-k", cfg.k, "Spread to check (default: the spread claimed in the header)");
  add_format(verify);

  auto* construct = app.add_subcommand("construct", "Build a new code from an existing one");
  construct->require_subcommand(1);
  std::vector<CLI::App*> construct_modes;
  for (const char* mode : {"embed", "pad", "double"}) {
    auto* sub = construct->add_subcommand(mode, std::string(mode) == "embed"  ? "Raise the dimension"
                                                : std::string(mode) == "pad" ? "Pad to length divisible by 2s"
                                                                             : "Double an open path into a cycle");
    sub->add_option("file", cfg.input, "Input code file")->required();
    sub->add_option("-d", cfg.d, "Target dimension (embed)");
    sub->add_option("-k", cfg.k, "Spread (default: the header's claimed spread)");
    sub->add_option("-s", cfg.s, "Divisor (pad)");
    sub->add_option("-o,--output", cfg.output, "Write the result to this file");
    sub->add_flag("--no-reverify", [&cfg](std::int64_t) { cfg.reverify = false; },
                  "Skip the spread checks on input and output");
    add_format(sub);
    construct_modes.push_back(sub);
  }

  auto* search = app.add_subcommand("search", "Exhaustive search for longest codes");
  search->require_subcommand(1);
  std::vector<CLI::App*> search_kinds;
  for (const char* kind : {"cycle", "path"}) {
    auto* sub = search->add_subcommand(kind, std::string("Longest spread-k ") + kind);
    sub->add_option("-d", cfg.d, "Dimension")->required();
    sub->add_option("-k", cfg.k, "Spread")->required();
    sub->add_option("-s", cfg.s, "Only lengths divisible by s (cycle)");
    sub->add_option("--budget", cfg.budget, "DFS node cap")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Write the best code to this file");
    add_format(sub);
    search_kinds.push_back(sub);
  }

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on K(d,k)");
  bounds_cmd->require_subcommand(1);
  std::vector<CLI::App*> bound_actions;
  for (const char* action : {"table", "best", "decompose", "pn", "superadd"}) {
    auto* sub = bounds_cmd->add_subcommand(action, std::string("bounds ") + action);
    sub->add_option("-d", cfg.d, "Dimension (table: largest dimension)");
    sub->add_option("-k", cfg.k, "Spread (table: largest spread)");
    sub->add_option("-c", cfg.c, "Constant of the difference-preserving path length");
    sub->add_option("-i,--index", cfg.index, "Index i of d_i (pn)");
    sub->add_option("--offset", cfg.offset, "Additive constant in d_i (decompose; default 5k-4)");
    sub->add_option("--base", cfg.base_table, "Exact values, lines of 'd k value'");
    sub->add_option("--table", cfg.input, "Exact K(d,k) for one k, lines of 'd value' (superadd)");
    sub->add_option("--exclude", cfg.excluded_rules, "Rule the engine may not use (repeatable)");
    add_format(sub);
    bound_actions.push_back(sub);
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back(kToolName);
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (verify->parsed()) {
      cfg.subcommand = "verify";
      return cmd_verify(cfg, out);
    }
    for (auto* sub : construct_modes) {
      if (sub->parsed()) {
        cfg.subcommand = "construct";
        cfg.action = sub->get_name();
        return cmd_construct(cfg, out);
      }
    }
    for (auto* sub : search_kinds) {
      if (sub->parsed()) {
        cfg.subcommand = "search";
        cfg.action = sub->get_name();
        return cmd_search(cfg, out);
      }
    }
    for (auto* sub : bound_actions) {
      if (sub->parsed()) {
        cfg.subcommand = "bounds";
        cfg.action = sub->get_name();
        return cmd_bounds(cfg, out);
      }
    }
  } catch (const Error& e) {
    err << kToolName << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

} // namespace circuit::cli
