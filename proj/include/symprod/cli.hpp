#ifndef SYMPROD_CLI_HPP
#define SYMPROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symprod {

// Exit codes, one family per error class:
//   0 success (and all verify checks passing)
//   1 verify reported a failing identity
//   2 bad flags or flag values
//   3 file or parse errors
//   4 model/class invariant violations
//   5 pole errors in exact evaluation
//   6 parity mismatch between sigma and chi
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symprod

#endif
