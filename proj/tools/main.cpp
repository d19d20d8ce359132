#include "nbrw/cli.hpp"

int main(int argc, char** argv) { return nbrw::run(argc, argv); }
