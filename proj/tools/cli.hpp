#ifndef QGP_TOOLS_CLI_HPP_
#define QGP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qgp::cli {

  // Exit codes.
  inline constexpr int ok           = 0;  // Holds or success
  inline constexpr int failed       = 1;  // Fails or PreconditionFailed
  inline constexpr int inconclusive = 2;  // Inconclusive or WindowExhausted
  inline constexpr int usage        = 3;  // usage, input or kind errors

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace qgp::cli

#endif  // QGP_TOOLS_CLI_HPP_
