// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "threelines/cli.hpp"
#include "threelines/parallel.hpp"

int main(int argc, char** argv) {
  threelines::parallel::apply_env_thread_cap();
  const std::vector<std::string> args(argv + 1, argv + argc);
  return threelines::cli::main_entry(args, std::cout, std::cerr);
}
