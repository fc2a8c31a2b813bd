// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace minlog {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `minlog` tool. `args` excludes the program name.
// Relative default paths (models/, families/, hierarchy.txt) resolve against
// `root` unless --root is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::filesystem::path& root = ".");

} // namespace minlog
