// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cpm_cli.hpp"

int main(int argc, char** argv) { return cpm::cli::run(argc, argv, std::cout, std::cerr); }
