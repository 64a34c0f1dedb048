// subpower - finite semigroups and the subpower membership problem
//
// The command-line driver. Exit codes: solve returns 0 for a member, 1 for a
// non-member and 2 on error or an exhausted budget; every other subcommand
// returns 0 on success and 2 on error.

#ifndef SUBPOWER_CLI_HPP_
#define SUBPOWER_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace subpower {

  inline constexpr int exit_member     = 0;
  inline constexpr int exit_non_member = 1;
  inline constexpr int exit_error      = 2;

  //! `args` excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace subpower

#endif  // SUBPOWER_CLI_HPP_
