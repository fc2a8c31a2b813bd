// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "minlog/cli/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return minlog::run_cli(args, std::cout, std::cerr, MINLOG_DEFAULT_ROOT);
}
