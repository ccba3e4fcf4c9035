#include <iostream>

#include "evtcvar/cli.hpp"

int main(int argc, char** argv) { return evtcvar::cli::run(argc, argv, std::cout, std::cerr); }
