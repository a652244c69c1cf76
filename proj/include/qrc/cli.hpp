#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrc {

// Runs one command-line invocation against the given streams.  `args` are
// the argv entries after the program name.
//
// Exit codes:
//   0  success (for `decide`, both `true` and `false` verdicts)
//   1  semantic failure: a fuzz mismatch or an axiom violation was found
//   2  usage or syntax error (messages carry source positions), bad config
//   3  incapacity: unsupported fragment, exhausted budget/precision, or a
//      guarded decision whose branches disagree
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrc
