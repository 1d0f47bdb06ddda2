#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "circuit/transition.hpp"

namespace circuit {

/// On-disk code file:
///
///   # comment lines are ignored
///   d k N topology          (topology is "cycle" or "path"; k = 0 if unclaimed)
///   s1 s2 ... sN            (1-based coordinates, any whitespace, any number of lines)
struct CodeFile {
  TransitionSequence sequence;
  int claimed_spread = 0;
};

/// Throws Error{Parse} with a "line L:" prefix on malformed input, including
/// symbols outside [1, d].
CodeFile parse_code(std::string_view text);
CodeFile read_code_file(const std::string& path);

std::string format_code(const TransitionSequence& seq, int claimed_spread);
void write_code_file(const std::string& path, const TransitionSequence& seq, int claimed_spread);

} // namespace circuit
