#ifndef SGO_CLI_HPP
#define SGO_CLI_HPP

#include <iosfwd>

namespace sgo {

// exit codes: 0 pass, 1 property violation, 2 usage or input error, 3 precision exhausted
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}

#endif
