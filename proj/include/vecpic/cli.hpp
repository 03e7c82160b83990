#pragma once

#include <iosfwd>

namespace vecpic {

/// Exit status: 0 ok, 1 domain error, 2 validation error or bad usage, 3 internal error.
int runCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vecpic
