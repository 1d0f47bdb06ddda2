#include "circuit/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "circuit/error.hpp"

namespace circuit {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    parse_error(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

} // namespace

CodeFile parse_code(std::string_view text) {
  bool have_header = false;
  long d = 0, k = 0, n = 0;
  Topology topology = Topology::Cyclic;
  std::vector<int> symbols;
  std::size_t lineno = 0;
  std::size_t header_line = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;

    const auto toks = tokenize(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 4) parse_error(lineno, "header must be 'd k N topology'");
      d = parse_int(toks[0], lineno, "dimension d");
      k = parse_int(toks[1], lineno, "spread k");
      n = parse_int(toks[2], lineno, "length N");
      if (toks[3] == "cycle") topology = Topology::Cyclic;
      else if (toks[3] == "path") topology = Topology::Open;
      else parse_error(lineno, "topology must be 'cycle' or 'path', got '" + std::string(toks[3]) + "'");
      if (d < 1) parse_error(lineno, "dimension must be >= 1");
      if (k < 0) parse_error(lineno, "claimed spread must be >= 0");
      if (n < 1) parse_error(lineno, "length must be >= 1");
      have_header = true;
      header_line = lineno;
      symbols.reserve(static_cast<std::size_t>(n));
      continue;
    }

    for (auto tok : toks) {
      const long s = parse_int(tok, lineno, "coordinate");
      if (s < 1 || s > d)
        parse_error(lineno, "coordinate " + std::to_string(s) + " outside [1, " + std::to_string(d) + "]");
      if (static_cast<long>(symbols.size()) == n)
        parse_error(lineno, "more than N = " + std::to_string(n) + " coordinates");
      symbols.push_back(static_cast<int>(s));
    }
  }

  if (!have_header) parse_error(lineno, "missing header line");
  if (static_cast<long>(symbols.size()) != n)
    parse_error(lineno, "expected " + std::to_string(n) + " coordinates (header on line " +
                            std::to_string(header_line) + "), found " + std::to_string(symbols.size()));
  return {TransitionSequence(static_cast<int>(d), std::move(symbols), topology), static_cast<int>(k)};
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const TransitionSequence& seq, int claimed_spread) {
  std::string out = std::to_string(seq.dimension()) + ' ' + std::to_string(claimed_spread) + ' ' +
                    std::to_string(seq.size()) + ' ' + std::string(to_string(seq.topology())) + '\n';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seq[i]);
  }
  out += '\n';
  return out;
}

void write_code_file(const std::string& path, const TransitionSequence& seq, int claimed_spread) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write '" + path + "'");
  out << format_code(seq, claimed_spread);
}

} // namespace circuit
