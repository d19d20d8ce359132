#pragma once

namespace nbrw {

// Entry point of the nbrw command line tool. Exit codes: 0 success,
// 1 a hard check failed in `verify`, 2 usage or input error.
int run(int argc, char** argv);

}  // namespace nbrw
