#ifndef VECDOM_CLI_H_
#define VECDOM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace vecdom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

// Oracle size cap: VECDOM_ORACLE_CAP if set to a positive integer, otherwise
// kDefaultOracleCap.
int OracleCapFromEnv();

// `args` excludes the program name. Structured output goes to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace vecdom

#endif  // VECDOM_CLI_H_
