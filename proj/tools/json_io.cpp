#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "circuit/error.hpp"

namespace circuit::cli {

Json to_json(const TransitionSequence& seq) {
  return Json{{"dimension", seq.dimension()},
              {"topology", std::string(to_string(seq.topology()))},
              {"length", seq.size()},
              {"symbols", std::vector<int>(seq.symbols().begin(), seq.symbols().end())}};
}

Json to_json(const Witness& w) {
  return Json{{"i", w.i},         {"j", w.j}, {"hamming", w.hamming}, {"code_distance", w.code_distance},
              {"x", w.x.to_string()}, {"y", w.y.to_string()}};
}

Json to_json(const SpreadCheck& check) {
  return Json{{"k", check.k}, {"holds", check.holds},
              {"witness", check.witness ? to_json(*check.witness) : Json(nullptr)}};
}

Json to_json(const SpreadReport& report) {
  return Json{{"max_spread", report.max_spread}, {"unbounded", report.unbounded},
              {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)}};
}

Json to_json(const search::SearchResult& res) {
  Json j{{"kind", std::string(search::to_string(res.kind))},
         {"d", res.d},
         {"k", res.k},
         {"s", res.s ? Json(*res.s) : Json(nullptr)},
         {"best_length", res.best_length},
         {"exhausted", res.exhausted},
         {"nodes_expanded", res.nodes_expanded},
         {"sequence", res.best_sequence ? Json(std::vector<int>(res.best_sequence->symbols().begin(),
                                                                res.best_sequence->symbols().end()))
                                        : Json(nullptr)}};
  return j;
}

Json to_json(const bounds::BoundRecord& rec) {
  Json j{{"d", rec.d}, {"k", rec.k}};
  if (rec.s) j["s"] = *rec.s;
  j["value"] = rec.value.str();
  j["rule"] = std::string(bounds::to_string(rec.rule));
  if (rec.rule == bounds::Rule::AkSpread2 || rec.rule == bounds::Rule::ExactOracle) j["imported"] = true;
  if (rec.pn_index) j["i"] = *rec.pn_index;
  if (rec.pn_constant) j["c"] = *rec.pn_constant;
  Json children = Json::array();
  for (const auto& c : rec.children) children.push_back(to_json(*c));
  j["children"] = std::move(children);
  return j;
}

Json to_json(const bounds::Decomposition& dec) {
  Json comps = Json::array();
  for (int i : dec.indices) comps.push_back(Json{{"i", i}, {"d_i", dec.component(i)}});
  return Json{{"d", dec.d},        {"k", dec.k},          {"offset", dec.offset}, {"H", dec.max_index},
              {"p", dec.remainder}, {"indices", dec.indices}, {"components", comps}};
}

Json to_json(const bounds::SuperadditivityReport& rep) {
  Json table = Json::array();
  for (const auto& e : rep.table) table.push_back(Json{{"n", e.n}, {"value", e.value.str()}, {"a_n", e.a_n}});
  Json viol = Json::array();
  for (const auto& [m, n] : rep.violations) viol.push_back(Json{{"m", m}, {"n", n}});
  return Json{{"k", rep.k}, {"pairs_checked", rep.pairs_checked}, {"table", table}, {"violations", viol}};
}

namespace {

std::vector<std::vector<std::string>> read_rows(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != columns)
      fail(ErrorKind::Parse, path + ": line " + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                                 " columns");
    rows.push_back(std::move(toks));
  }
  return rows;
}

int to_int(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::Parse, path + ": expected integer, got '" + s + "'");
}

bounds::BigInt to_big(const std::string& s, const std::string& path) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::Parse, path + ": expected nonnegative integer, got '" + s + "'");
  return bounds::BigInt(s);
}

} // namespace

bounds::BaseTable read_base_table(const std::string& path) {
  bounds::BaseTable table;
  for (const auto& row : read_rows(path, 3))
    table[{to_int(row[0], path), to_int(row[1], path)}] = to_big(row[2], path);
  return table;
}

std::map<int, bounds::BigInt> read_spread_table(const std::string& path) {
  std::map<int, bounds::BigInt> table;
  for (const auto& row : read_rows(path, 2)) table[to_int(row[0], path)] = to_big(row[1], path);
  return table;
}

} // namespace circuit::cli
