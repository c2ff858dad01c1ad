// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "policytm/cli/cli.hpp"

int main(int argc, char** argv) { return policytm::run_cli(argc, argv, std::cout, std::cerr); }
