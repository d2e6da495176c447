#pragma once

#include <iosfwd>

namespace ecpkit {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// check ran and failed, 2 on usage or input errors.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ecpkit
