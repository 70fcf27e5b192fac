#pragma once

#include <iosfwd>

namespace revsyn::cli
{

enum exit_code : int
{
  ok = 0,
  error = 1,
  verification_failed = 2,
  not_converged = 3
};

/*! \brief Entry point of the `revsyn` tool, with output streams injectable for tests. */
int run_cli( int argc, char const* const* argv, std::ostream& out, std::ostream& err );

} // namespace revsyn::cli
