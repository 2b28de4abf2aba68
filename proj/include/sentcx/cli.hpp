#ifndef SENTCX_CLI_HPP
#define SENTCX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sentcx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitItemError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleDisagreement = 3;

/// Entry point of the `sentcx` tool. `args[0]` is the program name.
///
///   sentcx analyze   <corpus.jsonl|->  per-item JSON Lines
///   sentcx summarize <corpus.jsonl|->  Pi/Sigma table
///   sentcx classify  <formula>         one class per requested mode
int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace sentcx

#endif  // SENTCX_CLI_HPP
