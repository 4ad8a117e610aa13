#ifndef L2BOOST_CLI_HPP
#define L2BOOST_CLI_HPP

namespace l2boost {

// Exit codes: 0 success, 1 validation error, 2 numerical failure,
// 3 greedy bound violation.
int run_cli(int argc, const char* const* argv);

} // namespace l2boost

#endif
