// The quadnorm command-line front end.

#ifndef QUADNORM_CLI_HPP_
#define QUADNORM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace quadnorm {

  inline constexpr char const* report_header = "# quadnorm-report v1";

  // Runs one command; args excludes the program name. Returns 0 when every
  // requested check passes, 1 when some check fails and 2 on input errors.
  // A FILE argument of the form "catalog:NAME" loads a catalog entry.
  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace quadnorm

#endif  // QUADNORM_CLI_HPP_
