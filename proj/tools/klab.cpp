/**
 * @file klab.cpp
 * @brief klab command-line tool.
 */
#include <iostream>

#include "klab/cli.hpp"

int main(int argc, char** argv) { return klab::cli::run(argc, argv, std::cout, std::cerr); }
